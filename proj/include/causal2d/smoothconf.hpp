#pragma once

#include <utility>
#include <variant>

#include "causal2d/flatcone.hpp"

namespace causal2d {

/// x ↦ a·x + b.
struct Affine {
  double a;
  double b;
};

/// x ↦ a(x − b)³ + c0(x − b) + d.
struct CubicPlus {
  double a;
  double b;
  double c0;
  double d;
};

/// A smooth monotone bijection of ℝ from one of two closed-form families.
class SmoothMonotoneMap {
 public:
  /// Throws InvalidInput when a == 0.
  static SmoothMonotoneMap affine(double a, double b);
  /// Throws InvalidInput unless a > 0 and c0 ≥ 0.
  static SmoothMonotoneMap cubic_plus(double a, double b, double c0, double d);

  const std::variant<Affine, CubicPlus>& family() const noexcept { return family_; }
  Direction direction() const;

 private:
  explicit SmoothMonotoneMap(std::variant<Affine, CubicPlus> f) : family_(f) {}

  std::variant<Affine, CubicPlus> family_;
};

/// Closed-form (value, derivative).
std::pair<double, double> sm_eval_deriv(const SmoothMonotoneMap& f, double x);

/// Bracketed bisection for f(x) = y with |f(x) − y| ≤ tol. Throws NoConvergence
/// after 200 halvings, or earlier if the bracket stops shrinking in floating point.
double sm_inverse(const SmoothMonotoneMap& f, double y, double tol);

/// Smooth analogue of CausalAutomorphism, same null-coordinate action.
class SmoothAutomorphism {
 public:
  /// Throws DirectionMismatch when derivative signs disagree with each other or the kind.
  SmoothAutomorphism(AutoKind kind, SmoothMonotoneMap phi, SmoothMonotoneMap psi);

  AutoKind kind() const noexcept { return kind_; }
  const SmoothMonotoneMap& phi() const noexcept { return phi_; }
  const SmoothMonotoneMap& psi() const noexcept { return psi_; }

  /// F(x, t) = ½(φ(u) + ψ(v), φ(u) − ψ(v)) or the flip form.
  std::pair<double, double> operator()(double x, double t) const;

  /// Inverse through null coordinates with bisection at tolerance tol.
  std::pair<double, double> inverse(double x, double t, double tol) const;

  /// Exact conformal factor φ′ψ′ at (x, t).
  double exact_lambda(double x, double t) const;

 private:
  AutoKind kind_;
  SmoothMonotoneMap phi_;
  SmoothMonotoneMap psi_;
};

/// Rows (X, T), columns (x, t).
struct Mat2 {
  double xx;  ///< ∂X/∂x
  double xt;  ///< ∂X/∂t
  double tx;  ///< ∂T/∂x
  double tt;  ///< ∂T/∂t

  double det() const { return xx * tt - xt * tx; }
};

/// Central differences with step h, then (by default) one Richardson step.
Mat2 jacobian(const SmoothAutomorphism& F, double x, double t, double h, bool richardson = true);

struct ConformalReport {
  double lambda = 0;            ///< mean of the diagonal ratios of JᵀηJ against η
  double defect = 0;            ///< max |JᵀηJ − λη| / |λ|
  bool null_preserved = false;  ///< images of (1, ±1) stay null to within the defect
  double reference_lambda = 0;  ///< closed-form φ′ψ′
  double reference_defect = 0;  ///< max |JᵀηJ − λ_ref·η| / |λ_ref|, the truncation error of J
};

/// η = diag(+1 for x, −1 for t). Throws DegenerateJacobian when |det J| < 1e−300.
ConformalReport conformal_defect(const SmoothAutomorphism& F, double x, double t, double h,
                                 bool richardson = true);

/// max(|X_tt − X_xx|, |T_tt − T_xx|) from 5-point stencils.
double wave_residual(const SmoothAutomorphism& F, double x, double t, double h);

/// Forward difference of F⁻¹ along the x-axis at the origin:
/// |X(F⁻¹(h, 0)) − X(F⁻¹(0, 0))| / h.
double inverse_axis_slope(const SmoothAutomorphism& F, double h);

}  // namespace causal2d
