#include "causal2d/cylinder.hpp"

#include "causal2d/errors.hpp"

namespace causal2d {

CylPoint project(const Event& e) { return CylPoint::make(e.x, e.t); }

namespace {

// Some lift of q sits within the (closed or open) light cone of the lift of p.
bool cone_over_lifts(const CylPoint& p, const CylPoint& q, bool strict) {
  const Rational dt = q.t - p.t;
  if (dt < 0 || (strict && dt == 0)) return false;
  const Rational dtheta = q.theta - p.theta;
  const mpz_class lo = ceil_of(Rational(-dt - 1));
  const mpz_class hi = floor_of(Rational(dt + 1));
  for (mpz_class n = lo; n <= hi; ++n) {
    const Rational gap = abs(Rational(dtheta + Rational(n)));
    if (strict ? gap < dt : gap <= dt) return true;
  }
  return false;
}

std::optional<Rational> common_quasi_period(const CausalAutomorphism& g) {
  const auto cphi = qp_quasi_period(g.phi());
  const auto cpsi = qp_quasi_period(g.psi());
  if (!cphi || !cpsi || *cphi != *cpsi) return std::nullopt;
  return cphi;
}

}  // namespace

bool cyl_leq(const CylPoint& p, const CylPoint& q) { return cone_over_lifts(p, q, false); }

bool cyl_ll(const CylPoint& p, const CylPoint& q) { return cone_over_lifts(p, q, true); }

CausalAutomorphism deck(std::int64_t m) {
  const LineMap shift = MonotoneMap::translation(Rational(static_cast<long>(m)));
  return CausalAutomorphism(AutoKind::Proper, shift, shift);
}

std::int64_t conjugate_deck(const CausalAutomorphism& g, std::int64_t m) {
  const auto c = common_quasi_period(g);
  if (!c) throw Error(ErrorCode::NotQuasiPeriodic, "phi and psi have no common quasi-period");
  const Rational shifted = *c * static_cast<long>(m);
  if (!is_integer(shifted)) {
    throw Error(ErrorCode::NotNormalizing, "conjugate of deck(" + std::to_string(m) + ") is translation by " +
                                               to_string(shifted) + ", outside the deck group");
  }
  const std::int64_t result = to_int64(shifted.get_num());
  const CausalAutomorphism inner = deck(m);
  const CausalAutomorphism target = deck(result);
  for (long i = -3; i <= 3; ++i) {
    const NullEvent probe{make_rational(i, 3), make_rational(2 * i + 1, 5)};
    const NullEvent lhs = g.apply(inner.apply(g.apply_inverse(probe)));
    if (lhs != target.apply(probe)) {
      throw Error(ErrorCode::NotQuasiPeriodic, "conjugated deck transformation is not a translation");
    }
  }
  return result;
}

bool satisfies_paper_condition(const LineMap& phi, const LineMap& psi) {
  const auto cphi = qp_quasi_period(phi);
  const auto cpsi = qp_quasi_period(psi);
  if (!cphi || !cpsi || *cphi != *cpsi || *cphi == 0) return false;
  return is_integer(Rational(*cphi * 2));
}

std::string_view to_string(DescentVerdict verdict) {
  switch (verdict) {
    case DescentVerdict::Automorphism: return "automorphism";
    case DescentVerdict::WellDefinedNotInjective: return "well_defined_not_injective";
    case DescentVerdict::NotWellDefined: return "not_well_defined";
  }
  return "unknown";
}

std::optional<DescentVerdict> parse_descent_verdict(std::string_view text) {
  for (auto v : {DescentVerdict::Automorphism, DescentVerdict::WellDefinedNotInjective,
                 DescentVerdict::NotWellDefined}) {
    if (to_string(v) == text) return v;
  }
  return std::nullopt;
}

DescentVerdict descends(const CausalAutomorphism& g) {
  // Under deck(m) the image angle moves by c·m and the image time by the
  // difference of the two quasi-periods times m/2.
  const auto c = common_quasi_period(g);
  if (!c || !is_integer(*c)) return DescentVerdict::NotWellDefined;
  if (abs(*c) == 1) return DescentVerdict::Automorphism;
  return DescentVerdict::WellDefinedNotInjective;
}

CylinderAutomorphism::CylinderAutomorphism(CausalAutomorphism rep) : rep_(std::move(rep)), c_(0) {
  const auto c = common_quasi_period(rep_);
  if (!c || abs(*c) != 1) {
    throw Error(ErrorCode::InvalidQuasiPeriod, "cylinder automorphisms need phi and psi with common quasi-period ±1");
  }
  c_ = sgn(*c);
}

bool CylinderAutomorphism::canonical() const {
  const Rational phi0 = rep_.phi()(Rational(0));
  return 0 <= phi0 && phi0 < 1;
}

CylPoint descend_apply(const CylinderAutomorphism& g, const CylPoint& p) {
  const NullEvent image = g.rep().apply(NullEvent{Rational(p.theta + p.t), Rational(p.theta - p.t)});
  return CylPoint::make(Rational((image.u + image.v) / 2), Rational((image.u - image.v) / 2));
}

CylinderAutomorphism canonical_rep(const CylinderAutomorphism& g) {
  const mpz_class floor_phi0 = floor_of(g.rep().phi()(Rational(0)));
  const std::int64_t m = -g.c() * to_int64(floor_phi0);
  if (m == 0) return g;
  return CylinderAutomorphism(auto_compose(g.rep(), deck(m)));
}

CylinderAutomorphism canonical_rep(const CausalAutomorphism& g) { return canonical_rep(CylinderAutomorphism(g)); }

CylinderAutomorphism quotient_compose(const CylinderAutomorphism& g1, const CylinderAutomorphism& g2) {
  return canonical_rep(CylinderAutomorphism(auto_compose(g1.rep(), g2.rep())));
}

CylinderAutomorphism quotient_invert(const CylinderAutomorphism& g) {
  return canonical_rep(CylinderAutomorphism(auto_invert(g.rep())));
}

}  // namespace causal2d
