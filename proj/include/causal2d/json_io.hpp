#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "causal2d/cylinder.hpp"
#include "causal2d/embedding.hpp"
#include "causal2d/oracle.hpp"
#include "causal2d/smoothconf.hpp"

// JSON encodings. Rationals travel as strings ("p/q" or "p"); smooth-map
// parameters as plain numbers. Every reader takes the JSON path of the value
// and throws Error(InvalidInput) naming the offending field.

namespace causal2d::json {

using nlohmann::json;

json to_json(const Rational& r);
Rational rational_from(const json& j, const std::string& path);

json to_json(const PLFunction& f);
PLFunction pl_function_from(const json& j, const std::string& path);

json to_json(const MonotoneMap& f);
json to_json(const QuasiPeriodicMap& f);
json to_json(const LineMap& f);
/// {"anchors", "left_slope", "right_slope", "direction"}; with "c" a quasi-periodic map.
LineMap line_map_from(const json& j, const std::string& path);
MonotoneMap monotone_map_from(const json& j, const std::string& path);

json to_json(const Event& e);
Event event_from(const json& j, const std::string& path);
json to_json(const CylPoint& p);
CylPoint cyl_point_from(const json& j, const std::string& path);

json to_json(const CausalAutomorphism& F);
CausalAutomorphism automorphism_from(const json& j, const std::string& path);
/// Serialises the representative with "canonical" set.
json to_json(const CylinderAutomorphism& g);

json to_json(const Domain& d);
Domain domain_from(const json& j, const std::string& path);

json to_json(const SmoothMonotoneMap& f);
SmoothMonotoneMap smooth_map_from(const json& j, const std::string& path);
json to_json(const SmoothAutomorphism& F);
SmoothAutomorphism smooth_automorphism_from(const json& j, const std::string& path);

json to_json(const OrderReport& r);
json to_json(const CauchyReport& r);
json to_json(const ConformalReport& r);
json to_json(const CausalGrid& g);

/// True when the object looks like an automorphism ("kind" present).
inline bool is_automorphism(const json& j) { return j.is_object() && j.contains("kind"); }
/// True when the object looks like a smooth map pair (maps carry "family").
bool is_smooth(const json& j);

}  // namespace causal2d::json
