#include "causal2d/pl_function.hpp"

#include <algorithm>

#include "causal2d/errors.hpp"

namespace causal2d {

PLFunction::PLFunction(std::vector<Anchor> anchors, Rational left_slope, Rational right_slope)
    : anchors_(std::move(anchors)), left_slope_(std::move(left_slope)), right_slope_(std::move(right_slope)) {
  if (anchors_.empty()) {
    throw Error(ErrorCode::InvalidInput, "piecewise-linear function needs at least one anchor");
  }
  for (std::size_t i = 1; i < anchors_.size(); ++i) {
    if (!(anchors_[i - 1].x < anchors_[i].x)) {
      throw Error(ErrorCode::InvalidInput, "anchor x-values must be strictly increasing");
    }
  }
  normalize();
}

PLFunction PLFunction::affine(const Rational& slope, const Rational& intercept) {
  return PLFunction({Anchor{Rational(0), intercept}}, slope, slope);
}

std::vector<Rational> PLFunction::slopes() const {
  std::vector<Rational> out;
  out.reserve(anchors_.size() + 1);
  out.push_back(left_slope_);
  for (std::size_t i = 1; i < anchors_.size(); ++i) {
    out.push_back(Rational((anchors_[i].y - anchors_[i - 1].y) / (anchors_[i].x - anchors_[i - 1].x)));
  }
  out.push_back(right_slope_);
  return out;
}

std::vector<Rational> PLFunction::breakpoints() const {
  const auto s = slopes();
  std::vector<Rational> out;
  for (std::size_t i = 0; i < anchors_.size(); ++i) {
    if (s[i] != s[i + 1]) out.push_back(anchors_[i].x);
  }
  return out;
}

void PLFunction::normalize() {
  const auto s = slopes();
  std::vector<Anchor> kept;
  for (std::size_t i = 0; i < anchors_.size(); ++i) {
    if (s[i] != s[i + 1]) kept.push_back(anchors_[i]);
  }
  if (kept.size() >= 2) {
    anchors_ = std::move(kept);
    return;
  }
  // Zero or one breakpoint: pin the representation to (b, b+1) or (0, 1).
  const Rational base = kept.empty() ? Rational(0) : kept.front().x;
  const Rational next = base + 1;
  const Rational y0 = (*this)(base);
  const Rational y1 = (*this)(next);
  anchors_ = {Anchor{base, y0}, Anchor{next, y1}};
}

Rational PLFunction::operator()(const Rational& x) const {
  const Anchor& first = anchors_.front();
  const Anchor& last = anchors_.back();
  if (x <= first.x) return Rational(first.y + left_slope_ * (x - first.x));
  if (x >= last.x) return Rational(last.y + right_slope_ * (x - last.x));
  auto hi = std::upper_bound(anchors_.begin(), anchors_.end(), x,
                             [](const Rational& value, const Anchor& a) { return value < a.x; });
  auto lo = hi - 1;
  return Rational(lo->y + (hi->y - lo->y) * (x - lo->x) / (hi->x - lo->x));
}

Rational PLFunction::max_on(const Rational& lo, const Rational& hi) const {
  Rational best = std::max((*this)(lo), (*this)(hi));
  for (const auto& a : anchors_) {
    if (lo < a.x && a.x < hi) best = std::max(best, a.y);
  }
  return best;
}

Rational PLFunction::min_on(const Rational& lo, const Rational& hi) const {
  Rational best = std::min((*this)(lo), (*this)(hi));
  for (const auto& a : anchors_) {
    if (lo < a.x && a.x < hi) best = std::min(best, a.y);
  }
  return best;
}

namespace {

// Slope of `outer` far out in the direction the inner tail heads.
Rational tail_slope(const PLFunction& outer, const Rational& inner_slope, bool toward_plus_infinity) {
  const int s = sgn(inner_slope);
  if (s == 0) return Rational(0);
  const bool outer_right = (s > 0) == toward_plus_infinity;
  return Rational((outer_right ? outer.right_slope() : outer.left_slope()) * inner_slope);
}

}  // namespace

PLFunction compose(const PLFunction& outer, const PLFunction& inner) {
  const auto& a = inner.anchors();
  const auto outer_breaks = outer.breakpoints();
  std::vector<Rational> xs;
  for (const auto& anchor : a) xs.push_back(anchor.x);

  // Points where the inner function crosses one of the outer breakpoints.
  auto add_crossings = [&](const Anchor& base, const Rational& slope, const Rational* lo, const Rational* hi) {
    if (slope == 0) return;
    for (const auto& b : outer_breaks) {
      Rational x = base.x + (b - base.y) / slope;
      if ((lo == nullptr || x >= *lo) && (hi == nullptr || x <= *hi)) xs.push_back(x);
    }
  };
  add_crossings(a.front(), inner.left_slope(), nullptr, &a.front().x);
  for (std::size_t i = 1; i < a.size(); ++i) {
    const Rational slope = (a[i].y - a[i - 1].y) / (a[i].x - a[i - 1].x);
    add_crossings(a[i - 1], slope, &a[i - 1].x, &a[i].x);
  }
  add_crossings(a.back(), inner.right_slope(), &a.back().x, nullptr);

  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

  std::vector<Anchor> out;
  out.reserve(xs.size());
  for (const auto& x : xs) out.push_back(Anchor{x, outer(inner(x))});
  return PLFunction(std::move(out), tail_slope(outer, inner.left_slope(), false),
                    tail_slope(outer, inner.right_slope(), true));
}

PLFunction invert(const PLFunction& f) {
  const auto s = f.slopes();
  const int dir = sgn(s.front());
  for (const auto& slope : s) {
    if (dir == 0 || sgn(slope) != dir) {
      throw Error(ErrorCode::NotMonotone, "cannot invert a function that is not strictly monotone");
    }
  }
  std::vector<Anchor> swapped;
  swapped.reserve(f.anchors().size());
  for (const auto& a : f.anchors()) swapped.push_back(Anchor{a.y, a.x});
  if (dir < 0) {
    std::reverse(swapped.begin(), swapped.end());
    return PLFunction(std::move(swapped), Rational(1 / f.right_slope()), Rational(1 / f.left_slope()));
  }
  return PLFunction(std::move(swapped), Rational(1 / f.left_slope()), Rational(1 / f.right_slope()));
}

}  // namespace causal2d
