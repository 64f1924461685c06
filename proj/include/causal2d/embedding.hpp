#pragma once

#include <optional>
#include <vector>

#include "causal2d/exactmaps.hpp"
#include "causal2d/flatcone.hpp"
#include "causal2d/pl_function.hpp"

namespace causal2d {

/**
 * A globally hyperbolic open subset of ℝ²₁ with the x-axis (the diagonal
 * u = v) as Cauchy surface, in null-coordinate form:
 *   (u, v) ∈ D  ⟺  u ∈ (u_lo, u_hi) and lower(u) < v < upper(u).
 * Missing endpoints or bounds stand for ∓∞.
 */
class Domain {
 public:
  /// Throws InvalidInput when the interval is empty or the diagonal leaves the domain.
  Domain(std::optional<Rational> u_lo, std::optional<Rational> u_hi, std::optional<PLFunction> lower,
         std::optional<PLFunction> upper);

  static Domain plane() { return Domain(std::nullopt, std::nullopt, std::nullopt, std::nullopt); }
  /// |t| < half_height, i.e. u − 2h < v < u + 2h.
  static Domain strip(const Rational& half_height);
  /// The null square u, v ∈ (−a, a).
  static Domain diamond(const Rational& a);

  bool contains(const NullEvent& n) const;
  bool contains(const Event& e) const { return contains(null_coords(e)); }

  const std::optional<Rational>& u_lo() const noexcept { return u_lo_; }
  const std::optional<Rational>& u_hi() const noexcept { return u_hi_; }
  const std::optional<PLFunction>& lower() const noexcept { return lower_; }
  const std::optional<PLFunction>& upper() const noexcept { return upper_; }

  friend bool operator==(const Domain& a, const Domain& b) {
    return a.u_lo_ == b.u_lo_ && a.u_hi_ == b.u_hi_ && a.lower_ == b.lower_ && a.upper_ == b.upper_;
  }

 private:
  std::optional<Rational> u_lo_;
  std::optional<Rational> u_hi_;
  std::optional<PLFunction> lower_;
  std::optional<PLFunction> upper_;
};

/// Closed interval of the x-axis.
struct ShadowInterval {
  Rational left;
  Rational right;

  friend bool operator==(const ShadowInterval& a, const ShadowInterval& b) {
    return a.left == b.left && a.right == b.right;
  }
};

/// J⁻(p) ∩ axis for t ≥ 0, J⁺(p) ∩ axis for t < 0. Throws OutsideDomain.
ShadowInterval shadow(const Event& p, const Domain& d);

/// The unique event on the given side of the axis whose shadow is `s`.
Event event_with_shadow(const ShadowInterval& s, bool past_side);

/// The extension i_f of an increasing homeomorphism f of the Cauchy surface.
class EmbeddingMap {
 public:
  EmbeddingMap(MonotoneMap f, Domain domain);

  /// (u, v) ↦ (f(u), f(v)). Throws OutsideDomain.
  Event operator()(const Event& p) const;

  /// Transport the shadow: the unique q with shadow(q) = f(shadow(p)).
  Event via_shadow(const Event& p) const;

  const MonotoneMap& f() const noexcept { return f_; }
  const Domain& domain() const noexcept { return domain_; }

 private:
  MonotoneMap f_;
  Domain domain_;
};

/// Throws NotIncreasing.
EmbeddingMap extend_embedding(const MonotoneMap& f, const Domain& d);

/// u-range ↦ f(u-range), bounds B ↦ f ∘ B ∘ f⁻¹. Throws NotIncreasing.
Domain image_domain(const MonotoneMap& f, const Domain& d);

struct CauchyReport {
  std::size_t checked = 0;
  std::vector<Event> failures;

  bool passed() const noexcept { return failures.empty(); }
};

/// Deterministic sample of events inside the domain (drawn from the SampleSpec window).
std::vector<Event> sample_domain(const Domain& d, const SampleSpec& spec, std::size_t count);

/// Both null segments from p to the axis lie in the domain (exact).
bool axis_segments_inside(const Domain& d, const Event& p);

/// For each sampled point, both null segments running to the axis must stay in the domain.
CauchyReport verify_cauchy_axis(const Domain& d, const SampleSpec& spec);

/// Proper(g ∘ f⁻¹, g ∘ f⁻¹), carrying i_f(D) onto i_g(D). Throws NotIncreasing.
CausalAutomorphism conjugating_auto(const MonotoneMap& f, const MonotoneMap& g);

}  // namespace causal2d
