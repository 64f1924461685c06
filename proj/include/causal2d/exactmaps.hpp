#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "causal2d/pl_function.hpp"
#include "causal2d/rational.hpp"

namespace causal2d {

enum class Direction { Increasing, Decreasing };

inline Direction operator*(Direction a, Direction b) {
  return a == b ? Direction::Increasing : Direction::Decreasing;
}

/// A strictly monotone piecewise-linear bijection of the real line.
class MonotoneMap {
 public:
  /// Throws NotMonotone when the data is not strictly monotone, DirectionMismatch
  /// when it is monotone the other way.
  MonotoneMap(std::vector<Anchor> anchors, Rational left_slope, Rational right_slope, Direction direction);

  /// Infers the direction; throws NotMonotone.
  static MonotoneMap from_function(PLFunction f);

  static MonotoneMap affine(const Rational& slope, const Rational& intercept);
  static MonotoneMap identity() { return affine(Rational(1), Rational(0)); }
  static MonotoneMap translation(const Rational& shift) { return affine(Rational(1), shift); }

  Rational operator()(const Rational& x) const { return fn_(x); }
  Rational inverse_at(const Rational& y) const;

  const PLFunction& function() const noexcept { return fn_; }
  const std::vector<Anchor>& anchors() const noexcept { return fn_.anchors(); }
  const Rational& left_slope() const noexcept { return fn_.left_slope(); }
  const Rational& right_slope() const noexcept { return fn_.right_slope(); }
  Direction direction() const noexcept { return direction_; }
  bool is_affine() const { return fn_.is_affine(); }

  friend bool operator==(const MonotoneMap& a, const MonotoneMap& b) {
    return a.direction_ == b.direction_ && a.fn_ == b.fn_;
  }

 private:
  MonotoneMap(PLFunction fn, Direction direction) : fn_(std::move(fn)), direction_(direction) {}

  PLFunction fn_;
  Direction direction_;
};

/**
 * A monotone bijection with f(x + 1) = f(x) + c, stored by its restriction to
 * [0, 1]. Evaluation uses f(x) = f(x - ⌊x⌋) + ⌊x⌋·c.
 */
class QuasiPeriodicMap {
 public:
  /// Anchors must start at x = 0 and end at x = 1. Throws ZeroPeriod,
  /// InvalidInput (span), EndpointMismatch, NotMonotone.
  static QuasiPeriodicMap from_fundamental(std::vector<Anchor> anchors, Rational c);

  /// An affine map a·x + b viewed as quasi-periodic with c = a.
  static QuasiPeriodicMap from_affine(const MonotoneMap& affine);

  Rational operator()(const Rational& x) const;
  Rational inverse_at(const Rational& y) const;

  const std::vector<Anchor>& fundamental() const noexcept { return anchors_; }
  const Rational& c() const noexcept { return c_; }
  Direction direction() const noexcept { return c_ > 0 ? Direction::Increasing : Direction::Decreasing; }
  bool is_affine() const noexcept { return anchors_.size() == 2; }

  /// The same map as a plain MonotoneMap; only valid when is_affine().
  MonotoneMap as_affine() const;

  friend bool operator==(const QuasiPeriodicMap& a, const QuasiPeriodicMap& b) {
    return a.c_ == b.c_ && a.anchors_ == b.anchors_;
  }

 private:
  QuasiPeriodicMap(std::vector<Anchor> anchors, Rational c) : anchors_(std::move(anchors)), c_(std::move(c)) {}

  Rational eval_fundamental(const Rational& x) const;
  Rational invert_fundamental(const Rational& y) const;

  std::vector<Anchor> anchors_;
  Rational c_;
};

/**
 * A monotone bijection of ℝ that is either a plain PL map or a quasi-periodic
 * one. Affine quasi-periodic maps are stored as plain maps, so equality is
 * functional equality.
 */
class LineMap {
 public:
  LineMap(MonotoneMap map);  // NOLINT(google-explicit-constructor)
  LineMap(QuasiPeriodicMap map);  // NOLINT(google-explicit-constructor)

  static LineMap identity() { return LineMap(MonotoneMap::identity()); }

  Rational operator()(const Rational& x) const;
  Rational inverse_at(const Rational& y) const;
  Direction direction() const;

  const MonotoneMap* plain() const { return std::get_if<MonotoneMap>(&rep_); }
  const QuasiPeriodicMap* periodic() const { return std::get_if<QuasiPeriodicMap>(&rep_); }

  friend bool operator==(const LineMap& a, const LineMap& b) { return a.rep_ == b.rep_; }

 private:
  std::variant<MonotoneMap, QuasiPeriodicMap> rep_;
};

// Operations named after their role in the map algebra.

inline Rational pl_eval(const MonotoneMap& f, const Rational& x) { return f(x); }
inline Rational pl_eval(const QuasiPeriodicMap& f, const Rational& x) { return f(x); }
inline Rational pl_eval(const LineMap& f, const Rational& x) { return f(x); }

/// g ∘ f.
MonotoneMap pl_compose(const MonotoneMap& g, const MonotoneMap& f);
MonotoneMap pl_invert(const MonotoneMap& f);

/// g ∘ f for quasi-periodic maps. The result is quasi-periodic with constant
/// c_g·c_f exactly when g(y + c_f) − g(y) ≡ c_g·c_f (always true for integer
/// c_f); otherwise throws NotQuasiPeriodic.
QuasiPeriodicMap qp_compose(const QuasiPeriodicMap& g, const QuasiPeriodicMap& f);

/// Inverse of a quasi-periodic map; representable with period 1 only when
/// |c| = 1 or the map is affine. Throws Unrepresentable otherwise.
LineMap qp_invert(const QuasiPeriodicMap& f);

QuasiPeriodicMap qp_from_fundamental(std::vector<Anchor> anchors, Rational c);

/// c with f(x + 1) = f(x) + c identically, if any.
std::optional<Rational> qp_quasi_period(const MonotoneMap& f);
std::optional<Rational> qp_quasi_period(const QuasiPeriodicMap& f);
std::optional<Rational> qp_quasi_period(const LineMap& f);

/// g ∘ f. Mixing a non-affine plain map with a non-affine quasi-periodic one
/// has no finite representation and throws Unrepresentable.
LineMap compose(const LineMap& g, const LineMap& f);
LineMap invert(const LineMap& f);

}  // namespace causal2d
