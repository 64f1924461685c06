#include "causal2d/embedding.hpp"

#include <algorithm>

#include "causal2d/errors.hpp"
#include "causal2d/random.hpp"

namespace causal2d {

namespace {

// h(u) < 0 for every u in the open interval (lo, hi); nullopt ends are infinite.
bool negative_on(const PLFunction& h, const std::optional<Rational>& lo, const std::optional<Rational>& hi) {
  std::vector<Rational> critical;
  for (const auto& a : h.anchors()) {
    if ((!lo || a.x > *lo) && (!hi || a.x < *hi)) critical.push_back(a.x);
  }
  for (const auto& x : critical) {
    if (h(x) >= 0) return false;
  }
  std::vector<Rational> all = critical;
  if (lo) {
    if (h(*lo) > 0) return false;
    all.insert(all.begin(), *lo);
  } else {
    if (h.left_slope() < 0) return false;
    const Rational probe = (all.empty() ? (hi ? *hi : Rational(0)) : all.front()) - 1;
    all.insert(all.begin(), probe);
  }
  if (hi) {
    if (h(*hi) > 0) return false;
    all.push_back(*hi);
  } else {
    if (h.right_slope() > 0) return false;
    all.push_back(Rational(all.back() + 1));
  }
  for (std::size_t i = 0; i < all.size(); ++i) {
    const bool endpoint = (i == 0 && lo) || (i + 1 == all.size() && hi);
    if (!endpoint && h(all[i]) >= 0) return false;
    if (i + 1 < all.size() && h(Rational((all[i] + all[i + 1]) / 2)) >= 0) return false;
  }
  return true;
}

PLFunction minus_identity(const PLFunction& f) {
  std::vector<Anchor> shifted;
  for (const auto& a : f.anchors()) shifted.push_back(Anchor{a.x, Rational(a.y - a.x)});
  return PLFunction(std::move(shifted), Rational(f.left_slope() - 1), Rational(f.right_slope() - 1));
}

PLFunction identity_minus(const PLFunction& f) {
  std::vector<Anchor> shifted;
  for (const auto& a : f.anchors()) shifted.push_back(Anchor{a.x, Rational(a.x - a.y)});
  return PLFunction(std::move(shifted), Rational(1 - f.left_slope()), Rational(1 - f.right_slope()));
}

void require_increasing(const MonotoneMap& f) {
  if (f.direction() != Direction::Increasing) {
    throw Error(ErrorCode::NotIncreasing, "Cauchy-surface homeomorphism must be increasing");
  }
}

}  // namespace

Domain::Domain(std::optional<Rational> u_lo, std::optional<Rational> u_hi, std::optional<PLFunction> lower,
               std::optional<PLFunction> upper)
    : u_lo_(std::move(u_lo)), u_hi_(std::move(u_hi)), lower_(std::move(lower)), upper_(std::move(upper)) {
  if (u_lo_ && u_hi_ && !(*u_lo_ < *u_hi_)) throw Error(ErrorCode::InvalidInput, "empty u_range");
  if (lower_ && !negative_on(minus_identity(*lower_), u_lo_, u_hi_)) {
    throw Error(ErrorCode::InvalidInput, "lower bound does not stay below the axis (lower(u) < u)");
  }
  if (upper_ && !negative_on(identity_minus(*upper_), u_lo_, u_hi_)) {
    throw Error(ErrorCode::InvalidInput, "upper bound does not stay above the axis (u < upper(u))");
  }
}

Domain Domain::strip(const Rational& half_height) {
  return Domain(std::nullopt, std::nullopt, PLFunction::affine(Rational(1), Rational(-2 * half_height)),
                PLFunction::affine(Rational(1), Rational(2 * half_height)));
}

Domain Domain::diamond(const Rational& a) {
  return Domain(Rational(-a), a, PLFunction::constant(Rational(-a)), PLFunction::constant(a));
}

bool Domain::contains(const NullEvent& n) const {
  if (u_lo_ && !(n.u > *u_lo_)) return false;
  if (u_hi_ && !(n.u < *u_hi_)) return false;
  if (lower_ && !((*lower_)(n.u) < n.v)) return false;
  if (upper_ && !(n.v < (*upper_)(n.u))) return false;
  return true;
}

ShadowInterval shadow(const Event& p, const Domain& d) {
  if (!d.contains(p)) throw Error(ErrorCode::OutsideDomain, "event is not in the domain");
  const NullEvent n = null_coords(p);
  if (p.t >= 0) return ShadowInterval{n.v, n.u};
  return ShadowInterval{n.u, n.v};
}

Event event_with_shadow(const ShadowInterval& s, bool past_side) {
  const Rational half = (s.right - s.left) / 2;
  return Event{Rational((s.left + s.right) / 2), past_side ? Rational(-half) : half};
}

EmbeddingMap::EmbeddingMap(MonotoneMap f, Domain domain) : f_(std::move(f)), domain_(std::move(domain)) {
  require_increasing(f_);
}

Event EmbeddingMap::operator()(const Event& p) const {
  if (!domain_.contains(p)) throw Error(ErrorCode::OutsideDomain, "event is not in the domain");
  const NullEvent n = null_coords(p);
  return event_coords(NullEvent{f_(n.u), f_(n.v)});
}

Event EmbeddingMap::via_shadow(const Event& p) const {
  const ShadowInterval s = shadow(p, domain_);
  return event_with_shadow(ShadowInterval{f_(s.left), f_(s.right)}, p.t < 0);
}

EmbeddingMap extend_embedding(const MonotoneMap& f, const Domain& d) { return EmbeddingMap(f, d); }

Domain image_domain(const MonotoneMap& f, const Domain& d) {
  require_increasing(f);
  const PLFunction f_inv = invert(f.function());
  auto conj = [&](const std::optional<PLFunction>& b) -> std::optional<PLFunction> {
    if (!b) return std::nullopt;
    return compose(f.function(), compose(*b, f_inv));
  };
  auto image = [&](const std::optional<Rational>& x) -> std::optional<Rational> {
    if (!x) return std::nullopt;
    return f(*x);
  };
  return Domain(image(d.u_lo()), image(d.u_hi()), conj(d.lower()), conj(d.upper()));
}

std::vector<Event> sample_domain(const Domain& d, const SampleSpec& spec, std::size_t count) {
  Sampler s(spec.seed);
  std::vector<Event> out;
  const std::size_t max_attempts = 1000 * count + 1000;
  for (std::size_t attempt = 0; out.size() < count && attempt < max_attempts; ++attempt) {
    Event e = s.event(spec.window, spec.denominator);
    if (d.contains(e)) out.push_back(std::move(e));
  }
  return out;
}

bool axis_segments_inside(const Domain& d, const Event& p) {
  const NullEvent n = null_coords(p);
  const Rational lo = std::min(n.u, n.v);
  const Rational hi = std::max(n.u, n.v);
  // Constant-u segment from p to (u, u).
  if (d.lower() && !((*d.lower())(n.u) < lo)) return false;
  if (d.upper() && !(hi < (*d.upper())(n.u))) return false;
  // Constant-v segment from p to (v, v).
  if (d.u_lo() && !(lo > *d.u_lo())) return false;
  if (d.u_hi() && !(hi < *d.u_hi())) return false;
  if (d.lower() && !(d.lower()->max_on(lo, hi) < n.v)) return false;
  if (d.upper() && !(n.v < d.upper()->min_on(lo, hi))) return false;
  return true;
}

CauchyReport verify_cauchy_axis(const Domain& d, const SampleSpec& spec) {
  CauchyReport report;
  for (const auto& p : sample_domain(d, spec, spec.pairs)) {
    ++report.checked;
    if (!axis_segments_inside(d, p)) report.failures.push_back(p);
  }
  return report;
}

CausalAutomorphism conjugating_auto(const MonotoneMap& f, const MonotoneMap& g) {
  require_increasing(f);
  require_increasing(g);
  const LineMap h = pl_compose(g, pl_invert(f));
  return CausalAutomorphism(AutoKind::Proper, h, h);
}

}  // namespace causal2d
