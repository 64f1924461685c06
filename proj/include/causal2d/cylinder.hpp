#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "causal2d/flatcone.hpp"

namespace causal2d {

/// A point of the Einstein cylinder S¹ × ℝ; theta in turns, 0 ≤ theta < 1.
struct CylPoint {
  Rational theta;
  Rational t;

  /// Reduces theta mod 1.
  static CylPoint make(const Rational& theta, const Rational& t) { return CylPoint{frac_of(theta), t}; }

  friend bool operator==(const CylPoint& a, const CylPoint& b) { return a.theta == b.theta && a.t == b.t; }
};

/// The covering (x, t) ↦ (e^{2πix}, t), i.e. theta = x mod 1.
CylPoint project(const Event& e);

/// p ≤ q on the cylinder: Δt ≥ 0 and min_n |Δθ + n| ≤ Δt (checked over finitely many lifts).
bool cyl_leq(const CylPoint& p, const CylPoint& q);
bool cyl_ll(const CylPoint& p, const CylPoint& q);

/// The deck transformation (u, v) ↦ (u + m, v + m).
CausalAutomorphism deck(std::int64_t m);

/// m′ with g ∘ deck(m) ∘ g⁻¹ = deck(m′) (m′ = c·m), confirmed on sample points.
/// Throws NotQuasiPeriodic if phi/psi lack a common quasi-period and
/// NotNormalizing when c·m is not an integer.
std::int64_t conjugate_deck(const CausalAutomorphism& g, std::int64_t m);

/// The literal normalizer membership test: both maps quasi-periodic with a
/// common c ∈ ½ℤ, c ≠ 0.
bool satisfies_paper_condition(const LineMap& phi, const LineMap& psi);

enum class DescentVerdict { Automorphism, WellDefinedNotInjective, NotWellDefined };

std::string_view to_string(DescentVerdict verdict);
std::optional<DescentVerdict> parse_descent_verdict(std::string_view text);

/// Exact analytic verdict from the quasi-periods: well defined iff phi and psi
/// share an integer c; bijective iff c = ±1.
DescentVerdict descends(const CausalAutomorphism& g);

/// An element of N(D)/D: a representative whose maps share c = +1 (Proper) or
/// c = −1 (Flip).
class CylinderAutomorphism {
 public:
  /// Throws InvalidQuasiPeriod when the quasi-periods are missing, unequal or not ±1.
  explicit CylinderAutomorphism(CausalAutomorphism rep);

  static CylinderAutomorphism identity() { return CylinderAutomorphism(CausalAutomorphism::identity()); }

  const CausalAutomorphism& rep() const noexcept { return rep_; }
  int c() const noexcept { return c_; }
  /// 0 ≤ φ(0) < 1.
  bool canonical() const;

  friend bool operator==(const CylinderAutomorphism& a, const CylinderAutomorphism& b) { return a.rep_ == b.rep_; }

 private:
  CausalAutomorphism rep_;
  int c_;
};

/// g(e^{2πix}, t) = (e^{πi(φ(u)+ψ(v))}, ½(φ(u) − ψ(v))) and its flip form; lift-independent.
CylPoint descend_apply(const CylinderAutomorphism& g, const CylPoint& p);

/// g ∘ deck(m) for the unique m with 0 ≤ φ(0) < 1.
CylinderAutomorphism canonical_rep(const CausalAutomorphism& g);
CylinderAutomorphism canonical_rep(const CylinderAutomorphism& g);

/// Coset product: canonical_rep(g1.rep ∘ g2.rep).
CylinderAutomorphism quotient_compose(const CylinderAutomorphism& g1, const CylinderAutomorphism& g2);
CylinderAutomorphism quotient_invert(const CylinderAutomorphism& g);

}  // namespace causal2d
