#include "causal2d/smoothconf.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "causal2d/errors.hpp"

namespace causal2d {

SmoothMonotoneMap SmoothMonotoneMap::affine(double a, double b) {
  if (a == 0.0 || !std::isfinite(a) || !std::isfinite(b)) {
    throw Error(ErrorCode::InvalidInput, "affine map needs finite a != 0");
  }
  return SmoothMonotoneMap(Affine{a, b});
}

SmoothMonotoneMap SmoothMonotoneMap::cubic_plus(double a, double b, double c0, double d) {
  if (!(a > 0.0) || !(c0 >= 0.0) || !std::isfinite(a) || !std::isfinite(b) || !std::isfinite(c0) ||
      !std::isfinite(d)) {
    throw Error(ErrorCode::InvalidInput, "cubicplus map needs a > 0 and c0 >= 0");
  }
  return SmoothMonotoneMap(CubicPlus{a, b, c0, d});
}

Direction SmoothMonotoneMap::direction() const {
  if (const auto* aff = std::get_if<Affine>(&family_)) {
    return aff->a > 0 ? Direction::Increasing : Direction::Decreasing;
  }
  return Direction::Increasing;
}

std::pair<double, double> sm_eval_deriv(const SmoothMonotoneMap& f, double x) {
  if (const auto* aff = std::get_if<Affine>(&f.family())) return {aff->a * x + aff->b, aff->a};
  const auto& c = std::get<CubicPlus>(f.family());
  const double s = x - c.b;
  return {c.a * s * s * s + c.c0 * s + c.d, 3.0 * c.a * s * s + c.c0};
}

double sm_inverse(const SmoothMonotoneMap& f, double y, double tol) {
  if (!(tol > 0.0)) throw Error(ErrorCode::InvalidInput, "tolerance must be positive");
  const double sign = f.direction() == Direction::Increasing ? 1.0 : -1.0;
  auto g = [&](double x) { return sign * (sm_eval_deriv(f, x).first - y); };  // increasing in x

  double lo = -1.0;
  double hi = 1.0;
  for (int i = 0; g(lo) > 0.0; ++i) {
    if (i > 2000) throw Error(ErrorCode::NoConvergence, "could not bracket the root from below");
    lo *= 2.0;
  }
  for (int i = 0; g(hi) < 0.0; ++i) {
    if (i > 2000) throw Error(ErrorCode::NoConvergence, "could not bracket the root from above");
    hi *= 2.0;
  }
  for (int iter = 0; iter < 200; ++iter) {
    const double mid = lo + 0.5 * (hi - lo);
    const double gm = g(mid);
    if (std::abs(gm) <= tol) return mid;
    if (mid == lo || mid == hi) break;
    (gm < 0.0 ? lo : hi) = mid;
  }
  throw Error(ErrorCode::NoConvergence, "bisection did not reach tolerance " + std::to_string(tol));
}

SmoothAutomorphism::SmoothAutomorphism(AutoKind kind, SmoothMonotoneMap phi, SmoothMonotoneMap psi)
    : kind_(kind), phi_(phi), psi_(psi) {
  const Direction want = kind == AutoKind::Proper ? Direction::Increasing : Direction::Decreasing;
  if (phi_.direction() != psi_.direction() || phi_.direction() != want) {
    throw Error(ErrorCode::DirectionMismatch, "phi' psi' must be positive and match the kind");
  }
}

std::pair<double, double> SmoothAutomorphism::operator()(double x, double t) const {
  const double u = x + t;
  const double v = x - t;
  const double a = sm_eval_deriv(phi_, kind_ == AutoKind::Proper ? u : v).first;
  const double b = sm_eval_deriv(psi_, kind_ == AutoKind::Proper ? v : u).first;
  return {0.5 * (a + b), 0.5 * (a - b)};
}

std::pair<double, double> SmoothAutomorphism::inverse(double x, double t, double tol) const {
  const double big_u = x + t;
  const double big_v = x - t;
  double u = 0;
  double v = 0;
  if (kind_ == AutoKind::Proper) {
    u = sm_inverse(phi_, big_u, tol);
    v = sm_inverse(psi_, big_v, tol);
  } else {
    u = sm_inverse(psi_, big_v, tol);
    v = sm_inverse(phi_, big_u, tol);
  }
  return {0.5 * (u + v), 0.5 * (u - v)};
}

double SmoothAutomorphism::exact_lambda(double x, double t) const {
  const double u = x + t;
  const double v = x - t;
  if (kind_ == AutoKind::Proper) return sm_eval_deriv(phi_, u).second * sm_eval_deriv(psi_, v).second;
  return sm_eval_deriv(phi_, v).second * sm_eval_deriv(psi_, u).second;
}

namespace {

Mat2 central(const SmoothAutomorphism& F, double x, double t, double h) {
  const auto [xp, tp] = F(x + h, t);
  const auto [xm, tm] = F(x - h, t);
  const auto [xq, tq] = F(x, t + h);
  const auto [xn, tn] = F(x, t - h);
  const double inv = 1.0 / (2.0 * h);
  return Mat2{(xp - xm) * inv, (xq - xn) * inv, (tp - tm) * inv, (tq - tn) * inv};
}

struct Metric {
  double gxx, gxt, gtt;
};

Metric pullback(const Mat2& j) {
  return Metric{j.xx * j.xx - j.tx * j.tx, j.xx * j.xt - j.tx * j.tt, j.xt * j.xt - j.tt * j.tt};
}

double deviation(const Metric& g, double lambda) {
  return std::max({std::abs(g.gxx - lambda), std::abs(g.gtt + lambda), std::abs(g.gxt)}) / std::abs(lambda);
}

}  // namespace

Mat2 jacobian(const SmoothAutomorphism& F, double x, double t, double h, bool richardson) {
  if (!(h > 0.0)) throw Error(ErrorCode::InvalidInput, "step must be positive");
  const Mat2 coarse = central(F, x, t, h);
  if (!richardson) return coarse;
  const Mat2 fine = central(F, x, t, 0.5 * h);
  auto extrapolate = [](double f, double c) { return (4.0 * f - c) / 3.0; };
  return Mat2{extrapolate(fine.xx, coarse.xx), extrapolate(fine.xt, coarse.xt), extrapolate(fine.tx, coarse.tx),
              extrapolate(fine.tt, coarse.tt)};
}

ConformalReport conformal_defect(const SmoothAutomorphism& F, double x, double t, double h, bool richardson) {
  const Mat2 j = jacobian(F, x, t, h, richardson);
  if (std::abs(j.det()) < 1e-300) {
    throw Error(ErrorCode::DegenerateJacobian, "Jacobian is singular at the probe point");
  }
  const Metric g = pullback(j);
  ConformalReport r;
  r.lambda = 0.5 * (g.gxx - g.gtt);
  r.defect = deviation(g, r.lambda);
  r.reference_lambda = F.exact_lambda(x, t);
  r.reference_defect = r.reference_lambda != 0.0 ? deviation(g, r.reference_lambda) : INFINITY;

  // A null direction d has dᵀ(λη)d = 0, so |dᵀGd| ≤ 4·defect·|λ|.
  const double scale = 4.0 * std::abs(r.lambda);
  r.null_preserved = true;
  for (double s : {1.0, -1.0}) {
    const double wx = j.xx + s * j.xt;
    const double wt = j.tx + s * j.tt;
    if (std::abs(wx * wx - wt * wt) > (r.defect + 1e-12) * scale) r.null_preserved = false;
  }
  return r;
}

double wave_residual(const SmoothAutomorphism& F, double x, double t, double h) {
  auto second = [h](auto&& f) {
    return (-f(2.0 * h) + 16.0 * f(h) - 30.0 * f(0.0) + 16.0 * f(-h) - f(-2.0 * h)) / (12.0 * h * h);
  };
  auto along_x = [&](int comp) {
    return second([&](double s) { auto p = F(x + s, t); return comp == 0 ? p.first : p.second; });
  };
  auto along_t = [&](int comp) {
    return second([&](double s) { auto p = F(x, t + s); return comp == 0 ? p.first : p.second; });
  };
  return std::max(std::abs(along_t(0) - along_x(0)), std::abs(along_t(1) - along_x(1)));
}

double inverse_axis_slope(const SmoothAutomorphism& F, double h) {
  const double tol = h * 1e-6;
  const double at_h = F.inverse(h, 0.0, tol).first;
  const double at_0 = F.inverse(0.0, 0.0, tol).first;
  return std::abs(at_h - at_0) / h;
}

}  // namespace causal2d
