#include "causal2d/json_io.hpp"

#include <cmath>

#include "causal2d/errors.hpp"

namespace causal2d::json {

namespace {

[[noreturn]] void bad(const std::string& path, const std::string& what) {
  throw Error(ErrorCode::InvalidInput, "field '" + path + "': " + what);
}

const json& field(const json& j, const char* key, const std::string& path) {
  if (!j.is_object()) bad(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) bad(path.empty() ? key : path + "." + key, "missing");
  return *it;
}

std::string child(const std::string& path, const std::string& key) { return path.empty() ? key : path + "." + key; }

std::string index(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

// Re-raise a library error with the JSON path prepended, keeping its code.
template <typename F>
auto at_path(const std::string& path, F&& build) {
  try {
    return build();
  } catch (const Error& e) {
    throw Error(e.code(), "field '" + path + "': " + e.detail());
  }
}

std::vector<Anchor> anchors_from(const json& j, const std::string& path) {
  if (!j.is_array()) bad(path, "expected an array of [x, y] pairs");
  std::vector<Anchor> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const json& pair = j[i];
    if (!pair.is_array() || pair.size() != 2) bad(index(path, i), "expected [x, y]");
    out.push_back(Anchor{rational_from(pair[0], index(path, i) + "[0]"), rational_from(pair[1], index(path, i) + "[1]")});
  }
  return out;
}

json anchors_to(const std::vector<Anchor>& anchors) {
  json arr = json::array();
  for (const auto& a : anchors) arr.push_back(json::array({to_json(a.x), to_json(a.y)}));
  return arr;
}

Direction direction_from(const json& j, const std::string& path) {
  if (j == "inc") return Direction::Increasing;
  if (j == "dec") return Direction::Decreasing;
  bad(path, "expected \"inc\" or \"dec\"");
}

const char* direction_name(Direction d) { return d == Direction::Increasing ? "inc" : "dec"; }

double number_from(const json& j, const char* key, const std::string& path) {
  const json& v = field(j, key, path);
  if (!v.is_number()) bad(child(path, key), "expected a number");
  const double d = v.get<double>();
  if (!std::isfinite(d)) bad(child(path, key), "must be finite");
  return d;
}

}  // namespace

json to_json(const Rational& r) { return to_string(r); }

Rational rational_from(const json& j, const std::string& path) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) bad(path, "expected a rational string \"p/q\"");
  return at_path(path, [&] { return parse_rational(j.get<std::string>()); });
}

json to_json(const PLFunction& f) {
  return json{{"anchors", anchors_to(f.anchors())},
              {"left_slope", to_json(f.left_slope())},
              {"right_slope", to_json(f.right_slope())}};
}

PLFunction pl_function_from(const json& j, const std::string& path) {
  auto anchors = anchors_from(field(j, "anchors", path), child(path, "anchors"));
  Rational left = rational_from(field(j, "left_slope", path), child(path, "left_slope"));
  Rational right = rational_from(field(j, "right_slope", path), child(path, "right_slope"));
  return at_path(path, [&] { return PLFunction(std::move(anchors), left, right); });
}

json to_json(const MonotoneMap& f) {
  json j = to_json(f.function());
  j["direction"] = direction_name(f.direction());
  return j;
}

json to_json(const QuasiPeriodicMap& f) {
  return json{{"anchors", anchors_to(f.fundamental())}, {"c", to_json(f.c())}, {"direction", direction_name(f.direction())}};
}

json to_json(const LineMap& f) {
  if (const auto* p = f.plain()) return to_json(*p);
  return to_json(*f.periodic());
}

MonotoneMap monotone_map_from(const json& j, const std::string& path) {
  auto anchors = anchors_from(field(j, "anchors", path), child(path, "anchors"));
  Rational left = rational_from(field(j, "left_slope", path), child(path, "left_slope"));
  Rational right = rational_from(field(j, "right_slope", path), child(path, "right_slope"));
  const Direction d = direction_from(field(j, "direction", path), child(path, "direction"));
  return at_path(path, [&] { return MonotoneMap(std::move(anchors), left, right, d); });
}

LineMap line_map_from(const json& j, const std::string& path) {
  if (j.is_object() && j.contains("c")) {
    auto anchors = anchors_from(field(j, "anchors", path), child(path, "anchors"));
    Rational c = rational_from(j["c"], child(path, "c"));
    QuasiPeriodicMap q = at_path(path, [&] { return QuasiPeriodicMap::from_fundamental(std::move(anchors), c); });
    if (j.contains("direction") && direction_from(j["direction"], child(path, "direction")) != q.direction()) {
      bad(child(path, "direction"), "contradicts the sign of c");
    }
    return LineMap(std::move(q));
  }
  return LineMap(monotone_map_from(j, path));
}

json to_json(const Event& e) { return json{{"x", to_json(e.x)}, {"t", to_json(e.t)}}; }

Event event_from(const json& j, const std::string& path) {
  return Event{rational_from(field(j, "x", path), child(path, "x")), rational_from(field(j, "t", path), child(path, "t"))};
}

json to_json(const CylPoint& p) { return json{{"theta", to_json(p.theta)}, {"t", to_json(p.t)}}; }

CylPoint cyl_point_from(const json& j, const std::string& path) {
  return CylPoint::make(rational_from(field(j, "theta", path), child(path, "theta")),
                        rational_from(field(j, "t", path), child(path, "t")));
}

json to_json(const CausalAutomorphism& F) {
  return json{{"kind", F.kind() == AutoKind::Proper ? "proper" : "flip"},
              {"phi", to_json(F.phi())},
              {"psi", to_json(F.psi())}};
}

namespace {

AutoKind kind_from(const json& j, const std::string& path) {
  const json& k = field(j, "kind", path);
  if (k == "proper") return AutoKind::Proper;
  if (k == "flip") return AutoKind::Flip;
  bad(child(path, "kind"), "expected \"proper\" or \"flip\"");
}

}  // namespace

CausalAutomorphism automorphism_from(const json& j, const std::string& path) {
  const AutoKind kind = kind_from(j, path);
  LineMap phi = line_map_from(field(j, "phi", path), child(path, "phi"));
  LineMap psi = line_map_from(field(j, "psi", path), child(path, "psi"));
  return at_path(path, [&] { return CausalAutomorphism(kind, phi, psi); });
}

json to_json(const CylinderAutomorphism& g) {
  json j = to_json(g.rep());
  j["canonical"] = g.canonical();
  return j;
}

json to_json(const Domain& d) {
  auto end = [](const std::optional<Rational>& r, const char* inf) { return r ? to_json(*r) : json(inf); };
  auto bound = [](const std::optional<PLFunction>& b, const char* inf) { return b ? to_json(*b) : json(inf); };
  return json{{"u_range", json::array({end(d.u_lo(), "-inf"), end(d.u_hi(), "inf")})},
              {"lower", bound(d.lower(), "-inf")},
              {"upper", bound(d.upper(), "inf")}};
}

Domain domain_from(const json& j, const std::string& path) {
  const json& range = field(j, "u_range", path);
  const std::string range_path = child(path, "u_range");
  if (!range.is_array() || range.size() != 2) bad(range_path, "expected [lo, hi]");
  auto end = [&](std::size_t i, const char* inf) -> std::optional<Rational> {
    if (range[i] == inf) return std::nullopt;
    return rational_from(range[i], index(range_path, i));
  };
  auto bound = [&](const char* key, const char* inf) -> std::optional<PLFunction> {
    const json& b = field(j, key, path);
    if (b == inf) return std::nullopt;
    return pl_function_from(b, child(path, key));
  };
  auto lo = end(0, "-inf");
  auto hi = end(1, "inf");
  auto lower = bound("lower", "-inf");
  auto upper = bound("upper", "inf");
  return at_path(path, [&] { return Domain(lo, hi, lower, upper); });
}

json to_json(const SmoothMonotoneMap& f) {
  if (const auto* a = std::get_if<Affine>(&f.family())) return json{{"family", "affine"}, {"a", a->a}, {"b", a->b}};
  const auto& c = std::get<CubicPlus>(f.family());
  return json{{"family", "cubicplus"}, {"a", c.a}, {"b", c.b}, {"c0", c.c0}, {"d", c.d}};
}

SmoothMonotoneMap smooth_map_from(const json& j, const std::string& path) {
  const json& fam = field(j, "family", path);
  if (fam == "affine") {
    const double a = number_from(j, "a", path);
    const double b = number_from(j, "b", path);
    return at_path(path, [&] { return SmoothMonotoneMap::affine(a, b); });
  }
  if (fam == "cubicplus") {
    const double a = number_from(j, "a", path);
    const double b = number_from(j, "b", path);
    const double c0 = number_from(j, "c0", path);
    const double d = number_from(j, "d", path);
    return at_path(path, [&] { return SmoothMonotoneMap::cubic_plus(a, b, c0, d); });
  }
  bad(child(path, "family"), "expected \"affine\" or \"cubicplus\"");
}

json to_json(const SmoothAutomorphism& F) {
  return json{{"kind", F.kind() == AutoKind::Proper ? "proper" : "flip"},
              {"phi", to_json(F.phi())},
              {"psi", to_json(F.psi())}};
}

SmoothAutomorphism smooth_automorphism_from(const json& j, const std::string& path) {
  const AutoKind kind = kind_from(j, path);
  SmoothMonotoneMap phi = smooth_map_from(field(j, "phi", path), child(path, "phi"));
  SmoothMonotoneMap psi = smooth_map_from(field(j, "psi", path), child(path, "psi"));
  return at_path(path, [&] { return SmoothAutomorphism(kind, phi, psi); });
}

bool is_smooth(const json& j) {
  return is_automorphism(j) && j.contains("phi") && j["phi"].is_object() && j["phi"].contains("family");
}

json to_json(const OrderReport& r) {
  json failures = json::array();
  for (const auto& f : r.failures) failures.push_back(json{{"p", to_json(f.p)}, {"q", to_json(f.q)}, {"relation", f.relation}});
  return json{{"checked", r.checked}, {"failures", failures}};
}

json to_json(const CauchyReport& r) {
  json failures = json::array();
  for (const auto& p : r.failures) failures.push_back(json{{"p", to_json(p)}});
  return json{{"checked", r.checked}, {"failures", failures}};
}

json to_json(const ConformalReport& r) {
  return json{{"lambda", r.lambda},
              {"defect", r.defect},
              {"null_preserved", r.null_preserved},
              {"reference_lambda", r.reference_lambda},
              {"reference_defect", r.reference_defect}};
}

json to_json(const CausalGrid& g) {
  json nodes = json::array();
  std::visit([&](const auto& pts) {
    for (const auto& p : pts) nodes.push_back(to_json(p));
  }, g.points());
  json edges = json::array();
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (auto j : g.successors(i)) edges.push_back(json::array({i, j}));
  }
  return json{{"space", g.space() == SpaceKind::Flat ? "flat" : "cyl"}, {"nodes", nodes}, {"edges", edges}};
}

}  // namespace causal2d::json
