#pragma once

#include <vector>

#include "causal2d/rational.hpp"

namespace causal2d {

struct Anchor {
  Rational x;
  Rational y;

  friend bool operator==(const Anchor& a, const Anchor& b) { return a.x == b.x && a.y == b.y; }
};

/**
 * A continuous piecewise-linear function of the real line with rational data:
 * linear interpolation between anchors, affine extrapolation with the given
 * tail slopes beyond them. No monotonicity is assumed; constant pieces are
 * allowed (domain bounds use them).
 *
 * The stored anchors are canonical: exactly the points where the slope
 * changes, or two anchors at (b, b+1) when there is a single breakpoint b, or
 * at (0, 1) when the function is affine. Structural equality is therefore
 * functional equality.
 */
class PLFunction {
 public:
  /// Anchors must be non-empty with strictly increasing x; throws Error(InvalidInput).
  PLFunction(std::vector<Anchor> anchors, Rational left_slope, Rational right_slope);

  static PLFunction affine(const Rational& slope, const Rational& intercept);
  static PLFunction constant(const Rational& value) { return affine(Rational(0), value); }

  Rational operator()(const Rational& x) const;

  const std::vector<Anchor>& anchors() const noexcept { return anchors_; }
  const Rational& left_slope() const noexcept { return left_slope_; }
  const Rational& right_slope() const noexcept { return right_slope_; }

  /// x-coordinates where the slope changes (possibly empty).
  std::vector<Rational> breakpoints() const;

  bool is_affine() const { return left_slope_ == right_slope_ && breakpoints().empty(); }

  /// Every slope, tails included: left tail, interior segments, right tail.
  std::vector<Rational> slopes() const;

  /// Maximum / minimum over the closed interval [lo, hi] (lo <= hi).
  Rational max_on(const Rational& lo, const Rational& hi) const;
  Rational min_on(const Rational& lo, const Rational& hi) const;

  friend bool operator==(const PLFunction& a, const PLFunction& b) {
    return a.left_slope_ == b.left_slope_ && a.right_slope_ == b.right_slope_ && a.anchors_ == b.anchors_;
  }

 private:
  void normalize();

  std::vector<Anchor> anchors_;
  Rational left_slope_;
  Rational right_slope_;
};

/// outer ∘ inner, exact.
PLFunction compose(const PLFunction& outer, const PLFunction& inner);

/// Inverse of a strictly monotone function; throws Error(NotMonotone) otherwise.
PLFunction invert(const PLFunction& f);

}  // namespace causal2d
