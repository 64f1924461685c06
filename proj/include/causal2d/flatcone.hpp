#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "causal2d/exactmaps.hpp"
#include "causal2d/rational.hpp"

namespace causal2d {

/// A point (x, t) of two-dimensional Minkowski space.
struct Event {
  Rational x;
  Rational t;

  friend bool operator==(const Event& a, const Event& b) { return a.x == b.x && a.t == b.t; }
};

/// Null coordinates u = x + t, v = x − t. The future increases u and decreases v.
struct NullEvent {
  Rational u;
  Rational v;

  friend bool operator==(const NullEvent& a, const NullEvent& b) { return a.u == b.u && a.v == b.v; }
};

NullEvent null_coords(const Event& e);
Event event_coords(const NullEvent& n);

/// p ≤ q: t_q − t_p ≥ |x_q − x_p|. Reflexive, includes the null boundary.
bool causally_leq(const Event& p, const Event& q);

/// p ≪ q: t_q − t_p > |x_q − x_p|.
bool chronologically_ll(const Event& p, const Event& q);

enum class AutoKind { Proper, Flip };

/**
 * A causal automorphism of ℝ²₁ given by a pair of monotone maps acting on
 * null coordinates:
 *   Proper (both increasing): (u, v) ↦ (φ(u), ψ(v))
 *   Flip   (both decreasing): (u, v) ↦ (φ(v), ψ(u))
 * In (x, t) this is F(x,t) = ½(φ(u) + ψ(v), φ(u) − ψ(v)) and its swapped form.
 */
class CausalAutomorphism {
 public:
  /// Throws DirectionMismatch unless both maps match the kind.
  CausalAutomorphism(AutoKind kind, LineMap phi, LineMap psi);

  static CausalAutomorphism identity() {
    return CausalAutomorphism(AutoKind::Proper, LineMap::identity(), LineMap::identity());
  }

  AutoKind kind() const noexcept { return kind_; }
  const LineMap& phi() const noexcept { return phi_; }
  const LineMap& psi() const noexcept { return psi_; }

  NullEvent apply(const NullEvent& n) const;
  Event operator()(const Event& e) const { return event_coords(apply(null_coords(e))); }

  /// Pointwise inverse; does not need a representable inverse map.
  NullEvent apply_inverse(const NullEvent& n) const;
  Event inverse_at(const Event& e) const { return event_coords(apply_inverse(null_coords(e))); }

  friend bool operator==(const CausalAutomorphism& a, const CausalAutomorphism& b) {
    return a.kind_ == b.kind_ && a.phi_ == b.phi_ && a.psi_ == b.psi_;
  }

 private:
  AutoKind kind_;
  LineMap phi_;
  LineMap psi_;
};

CausalAutomorphism auto_from_pair(AutoKind kind, LineMap phi, LineMap psi);
Event auto_apply(const CausalAutomorphism& F, const Event& e);

/// G ∘ F. Kinds compose as ℤ₂ (Flip∘Flip = Proper).
CausalAutomorphism auto_compose(const CausalAutomorphism& G, const CausalAutomorphism& F);
CausalAutomorphism auto_invert(const CausalAutomorphism& F);

/// Deterministic rational sampling of event pairs.
struct SampleSpec {
  std::uint64_t seed = 1;
  std::size_t pairs = 1000;
  long window = 4;        ///< coordinates drawn from [−window, window]
  long denominator = 12;  ///< denominators drawn from [1, denominator]
};

/// Pairs mixing causal, null, chronological and unrestricted separations.
std::vector<std::pair<Event, Event>> sample_event_pairs(const SampleSpec& spec);

struct OrderViolation {
  Event p;
  Event q;
  std::string relation;  ///< "leq" or "ll"
};

struct OrderReport {
  std::size_t checked = 0;
  std::vector<OrderViolation> failures;

  bool passed() const noexcept { return failures.empty(); }
};

using PointMap = std::function<Event(const Event&)>;

/// Checks p ≤ q ⟺ F(p) ≤ F(q) and p ≪ q ⟺ F(p) ≪ F(q) on every sampled pair, both orders.
OrderReport verify_order_iso(const CausalAutomorphism& F, const SampleSpec& spec);
OrderReport verify_order_iso(const PointMap& map, const SampleSpec& spec);
OrderReport verify_order_iso(const PointMap& map, const std::vector<std::pair<Event, Event>>& pairs);

}  // namespace causal2d
