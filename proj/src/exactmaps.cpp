#include "causal2d/exactmaps.hpp"

#include <algorithm>

#include "causal2d/errors.hpp"

namespace causal2d {

namespace {

int direction_sign(Direction d) { return d == Direction::Increasing ? 1 : -1; }

void require_increasing_x(const std::vector<Anchor>& anchors) {
  for (std::size_t i = 1; i < anchors.size(); ++i) {
    if (!(anchors[i - 1].x < anchors[i].x)) {
      throw Error(ErrorCode::NotMonotone, "anchor x-values must be strictly increasing");
    }
  }
}

Direction checked_direction(const PLFunction& fn) {
  const auto slopes = fn.slopes();
  const int s = sgn(slopes.front());
  if (s == 0) throw Error(ErrorCode::NotMonotone, "zero slope");
  for (const auto& slope : slopes) {
    if (sgn(slope) != s) throw Error(ErrorCode::NotMonotone, "slopes change sign or vanish");
  }
  return s > 0 ? Direction::Increasing : Direction::Decreasing;
}

Rational interpolate(const std::vector<Anchor>& a, const Rational& x) {
  auto hi = std::upper_bound(a.begin(), a.end(), x, [](const Rational& v, const Anchor& p) { return v < p.x; });
  if (hi == a.end()) return a.back().y;
  if (hi == a.begin()) return a.front().y;
  auto lo = hi - 1;
  return Rational(lo->y + (hi->y - lo->y) * (x - lo->x) / (hi->x - lo->x));
}

std::vector<Anchor> drop_collinear_interior(const std::vector<Anchor>& a) {
  std::vector<Anchor> out;
  out.push_back(a.front());
  for (std::size_t i = 1; i + 1 < a.size(); ++i) {
    const Anchor& prev = out.back();
    const Rational s1 = (a[i].y - prev.y) / (a[i].x - prev.x);
    const Rational s2 = (a[i + 1].y - a[i].y) / (a[i + 1].x - a[i].x);
    if (s1 != s2) out.push_back(a[i]);
  }
  out.push_back(a.back());
  return out;
}

void sort_unique_by_x(std::vector<Anchor>& a) {
  std::sort(a.begin(), a.end(), [](const Anchor& p, const Anchor& q) { return p.x < q.x; });
  a.erase(std::unique(a.begin(), a.end(), [](const Anchor& p, const Anchor& q) { return p.x == q.x; }), a.end());
}

}  // namespace

// ---------------------------------------------------------------------------
// MonotoneMap

MonotoneMap::MonotoneMap(std::vector<Anchor> anchors, Rational left_slope, Rational right_slope,
                         Direction direction)
    : fn_((require_increasing_x(anchors), PLFunction(std::move(anchors), std::move(left_slope),
                                                     std::move(right_slope)))),
      direction_(direction) {
  const int want = direction_sign(direction);
  bool all_match = true;
  bool all_opposite = true;
  for (const auto& slope : fn_.slopes()) {
    all_match = all_match && sgn(slope) == want;
    all_opposite = all_opposite && sgn(slope) == -want;
  }
  if (all_opposite) throw Error(ErrorCode::DirectionMismatch, "map is monotone in the opposite direction");
  if (!all_match) throw Error(ErrorCode::NotMonotone, "map is not strictly monotone");
}

MonotoneMap MonotoneMap::from_function(PLFunction f) {
  const Direction d = checked_direction(f);
  return MonotoneMap(std::move(f), d);
}

MonotoneMap MonotoneMap::affine(const Rational& slope, const Rational& intercept) {
  if (slope == 0) throw Error(ErrorCode::NotMonotone, "affine map with zero slope");
  return from_function(PLFunction::affine(slope, intercept));
}

Rational MonotoneMap::inverse_at(const Rational& y) const {
  const auto& a = fn_.anchors();
  const bool inc = direction_ == Direction::Increasing;
  const Anchor& first = inc ? a.front() : a.back();
  const Anchor& last = inc ? a.back() : a.front();
  const Rational& low_slope = inc ? fn_.left_slope() : fn_.right_slope();
  const Rational& high_slope = inc ? fn_.right_slope() : fn_.left_slope();
  if (y <= first.y) return Rational(first.x + (y - first.y) / low_slope);
  if (y >= last.y) return Rational(last.x + (y - last.y) / high_slope);
  for (std::size_t i = 1; i < a.size(); ++i) {
    const Rational& y0 = a[i - 1].y;
    const Rational& y1 = a[i].y;
    if ((y0 <= y && y <= y1) || (y1 <= y && y <= y0)) {
      return Rational(a[i - 1].x + (a[i].x - a[i - 1].x) * (y - y0) / (y1 - y0));
    }
  }
  throw Error(ErrorCode::NotMonotone, "inverse lookup failed");  // unreachable for valid maps
}

MonotoneMap pl_compose(const MonotoneMap& g, const MonotoneMap& f) {
  return MonotoneMap::from_function(compose(g.function(), f.function()));
}

MonotoneMap pl_invert(const MonotoneMap& f) { return MonotoneMap::from_function(invert(f.function())); }

// ---------------------------------------------------------------------------
// QuasiPeriodicMap

QuasiPeriodicMap QuasiPeriodicMap::from_fundamental(std::vector<Anchor> anchors, Rational c) {
  if (c == 0) throw Error(ErrorCode::ZeroPeriod, "quasi-period constant is zero");
  if (anchors.size() < 2 || anchors.front().x != 0 || anchors.back().x != 1) {
    throw Error(ErrorCode::InvalidInput, "fundamental anchors must start at x=0 and end at x=1");
  }
  require_increasing_x(anchors);
  if (anchors.back().y - anchors.front().y != c) {
    throw Error(ErrorCode::EndpointMismatch, "f(1) - f(0) = " + to_string(Rational(anchors.back().y - anchors.front().y)) +
                                                 " differs from c = " + to_string(c));
  }
  const int s = sgn(c);
  for (std::size_t i = 1; i < anchors.size(); ++i) {
    if (sgn(Rational(anchors[i].y - anchors[i - 1].y)) != s) {
      throw Error(ErrorCode::NotMonotone, "fundamental anchors not strictly monotone in the direction of c");
    }
  }
  return QuasiPeriodicMap(drop_collinear_interior(anchors), std::move(c));
}

QuasiPeriodicMap QuasiPeriodicMap::from_affine(const MonotoneMap& affine) {
  if (!affine.is_affine()) throw Error(ErrorCode::NotQuasiPeriodic, "map is not affine");
  return from_fundamental({Anchor{Rational(0), affine(Rational(0))}, Anchor{Rational(1), affine(Rational(1))}},
                          affine.left_slope());
}

Rational QuasiPeriodicMap::eval_fundamental(const Rational& x) const { return interpolate(anchors_, x); }

Rational QuasiPeriodicMap::invert_fundamental(const Rational& y) const {
  for (std::size_t i = 1; i < anchors_.size(); ++i) {
    const Rational& y0 = anchors_[i - 1].y;
    const Rational& y1 = anchors_[i].y;
    if ((y0 <= y && y <= y1) || (y1 <= y && y <= y0)) {
      return Rational(anchors_[i - 1].x + (anchors_[i].x - anchors_[i - 1].x) * (y - y0) / (y1 - y0));
    }
  }
  throw Error(ErrorCode::NotMonotone, "value outside the fundamental range");
}

Rational QuasiPeriodicMap::operator()(const Rational& x) const {
  const mpz_class k = floor_of(x);
  const Rational r = x - Rational(k);
  return Rational(eval_fundamental(r) + Rational(k) * c_);
}

Rational QuasiPeriodicMap::inverse_at(const Rational& y) const {
  const Rational& y0 = anchors_.front().y;
  const mpz_class k = floor_of(Rational((y - y0) / c_));
  const Rational shifted = y - Rational(k) * c_;
  return Rational(invert_fundamental(shifted) + Rational(k));
}

MonotoneMap QuasiPeriodicMap::as_affine() const {
  if (!is_affine()) throw Error(ErrorCode::InvalidInput, "quasi-periodic map is not affine");
  return MonotoneMap::affine(c_, anchors_.front().y);
}

QuasiPeriodicMap qp_from_fundamental(std::vector<Anchor> anchors, Rational c) {
  return QuasiPeriodicMap::from_fundamental(std::move(anchors), std::move(c));
}

QuasiPeriodicMap qp_compose(const QuasiPeriodicMap& g, const QuasiPeriodicMap& f) {
  const Rational shift = f.c();
  const Rational total = g.c() * f.c();

  // y ↦ g(y + shift) − g(y) is 1-periodic and PL; it is constant iff it takes
  // the value `total` at all its breakpoints in one period.
  std::vector<Rational> probes{Rational(0)};
  for (const auto& a : g.fundamental()) {
    probes.push_back(frac_of(a.x));
    probes.push_back(frac_of(Rational(a.x - shift)));
  }
  for (const auto& y : probes) {
    if (g(Rational(y + shift)) - g(y) != total) {
      throw Error(ErrorCode::NotQuasiPeriodic,
                  "composite does not satisfy h(x+1) = h(x) + c (inner quasi-period " + to_string(shift) + ")");
    }
  }

  std::vector<Anchor> points;
  for (const auto& a : f.fundamental()) points.push_back(Anchor{a.x, g(f(a.x))});
  const Rational f0 = f(Rational(0));
  const Rational f1 = f(Rational(1));
  const Rational lo = std::min(f0, f1);
  const Rational hi = std::max(f0, f1);
  const mpz_class k_lo = floor_of(lo) - 1;
  const mpz_class k_hi = ceil_of(hi) + 1;
  for (mpz_class k = k_lo; k <= k_hi; ++k) {
    for (const auto& b : g.fundamental()) {
      const Rational y = Rational(k) + b.x;
      if (lo <= y && y <= hi) {
        const Rational x = f.inverse_at(y);
        points.push_back(Anchor{x, g(y)});
      }
    }
  }
  sort_unique_by_x(points);
  return QuasiPeriodicMap::from_fundamental(std::move(points), total);
}

LineMap qp_invert(const QuasiPeriodicMap& f) {
  if (f.is_affine()) return LineMap(pl_invert(f.as_affine()));
  if (abs(f.c()) != 1) {
    throw Error(ErrorCode::Unrepresentable,
                "inverse of a non-affine quasi-periodic map with |c| != 1 has no unit quasi-period");
  }
  const Rational& c = f.c();
  std::vector<Anchor> points{Anchor{Rational(0), f.inverse_at(Rational(0))},
                             Anchor{Rational(1), f.inverse_at(Rational(1))}};
  for (const auto& a : f.fundamental()) {
    // f(a + k) = f(a) + k·c lands in [0, 1] for k near −f(a)·c.
    const mpz_class center = floor_of(Rational(-a.y * c));
    for (mpz_class k = center - 2; k <= center + 2; ++k) {
      const Rational y = a.y + Rational(k) * c;
      if (0 <= y && y <= 1) points.push_back(Anchor{y, Rational(a.x + Rational(k))});
    }
  }
  sort_unique_by_x(points);
  return LineMap(QuasiPeriodicMap::from_fundamental(std::move(points), Rational(1 / c)));
}

// ---------------------------------------------------------------------------
// Quasi-period detection

std::optional<Rational> qp_quasi_period(const MonotoneMap& f) {
  if (f.left_slope() != f.right_slope()) return std::nullopt;
  const Rational c = f.left_slope();
  // Outside the anchor hull shifted by one, f(x+1) − f(x) is the tail slope;
  // inside, it is PL with breakpoints at anchors and anchors − 1.
  for (const auto& a : f.anchors()) {
    for (const Rational& x : {a.x, Rational(a.x - 1)}) {
      if (f(Rational(x + 1)) - f(x) != c) return std::nullopt;
    }
  }
  return c;
}

std::optional<Rational> qp_quasi_period(const QuasiPeriodicMap& f) { return f.c(); }

std::optional<Rational> qp_quasi_period(const LineMap& f) {
  if (const auto* p = f.plain()) return qp_quasi_period(*p);
  return qp_quasi_period(*f.periodic());
}

// ---------------------------------------------------------------------------
// LineMap

LineMap::LineMap(MonotoneMap map) : rep_(std::move(map)) {}

LineMap::LineMap(QuasiPeriodicMap map)
    : rep_(map.is_affine() ? std::variant<MonotoneMap, QuasiPeriodicMap>(map.as_affine())
                           : std::variant<MonotoneMap, QuasiPeriodicMap>(std::move(map))) {}

Rational LineMap::operator()(const Rational& x) const {
  return std::visit([&](const auto& m) { return m(x); }, rep_);
}

Rational LineMap::inverse_at(const Rational& y) const {
  return std::visit([&](const auto& m) { return m.inverse_at(y); }, rep_);
}

Direction LineMap::direction() const {
  return std::visit([](const auto& m) { return m.direction(); }, rep_);
}

namespace {

QuasiPeriodicMap as_periodic(const LineMap& m) {
  if (const auto* q = m.periodic()) return *q;
  const MonotoneMap& p = *m.plain();
  if (!p.is_affine()) {
    throw Error(ErrorCode::Unrepresentable,
                "composition of a non-affine plain map with a quasi-periodic map has no finite representation");
  }
  return QuasiPeriodicMap::from_affine(p);
}

}  // namespace

LineMap compose(const LineMap& g, const LineMap& f) {
  if (g.plain() != nullptr && f.plain() != nullptr) return LineMap(pl_compose(*g.plain(), *f.plain()));
  return LineMap(qp_compose(as_periodic(g), as_periodic(f)));
}

LineMap invert(const LineMap& f) {
  if (const auto* p = f.plain()) return LineMap(pl_invert(*p));
  return qp_invert(*f.periodic());
}

}  // namespace causal2d
