#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "causal2d/cylinder.hpp"
#include "causal2d/embedding.hpp"

namespace causal2d {

enum class SpaceKind { Flat, Cylinder };

/// A finite sample of a spacetime with the causal relation ≤ restricted to it.
class CausalGrid {
 public:
  using Points = std::variant<std::vector<Event>, std::vector<CylPoint>>;

  /// Flat grid over the given points; edges from causally_leq.
  explicit CausalGrid(std::vector<Event> points, std::optional<Domain> domain = std::nullopt);
  /// Cylinder grid; edges from cyl_leq.
  explicit CausalGrid(std::vector<CylPoint> points);

  SpaceKind space() const noexcept { return points_.index() == 0 ? SpaceKind::Flat : SpaceKind::Cylinder; }
  const Points& points() const noexcept { return points_; }
  const std::vector<Event>& events() const { return std::get<0>(points_); }
  const std::vector<CylPoint>& cyl_points() const { return std::get<1>(points_); }
  const std::optional<Domain>& domain() const noexcept { return domain_; }

  std::size_t size() const noexcept { return successors_.size(); }
  /// i ≤ j (reflexive).
  bool leq(std::size_t i, std::size_t j) const;
  /// Strict successors of i, ascending.
  const std::vector<std::size_t>& successors(std::size_t i) const { return successors_[i]; }
  /// Number of pairs i ≠ j with i ≤ j.
  std::size_t edge_count() const;

  /// Reflexive, antisymmetric and transitive on the point set (exhaustive).
  bool is_partial_order() const;

 private:
  void build_edges();

  Points points_;
  std::optional<Domain> domain_;
  std::vector<std::vector<std::size_t>> successors_;
};

/// Flat: the (2n+1)² lattice {i/n, j/n} over [−1, 1]² clipped to the domain
/// (full plane when none). Points ordered lexicographically by (x, t).
CausalGrid build_flat_grid(long n, const std::optional<Domain>& domain = std::nullopt);
/// Cylinder: theta = k/(2n+1), t = j/n for j ∈ [−n, n].
CausalGrid build_cyl_grid(long n);

struct OrderIsoResult {
  bool iso = true;
  /// First (i, j) pair whose relation is not transported, if any.
  std::optional<std::pair<std::size_t, std::size_t>> witness;
};

using FlatPointMap = std::function<Event(const Event&)>;
using CylPointMap = std::function<CylPoint(const CylPoint&)>;

/// i ≤ j ⟺ map(i) ≤ map(j) for all grid pairs. With `target`, every image
/// must be one of its points (ImageOffGrid otherwise) and the target's edges
/// are used; without it the images are compared by the exact predicate.
OrderIsoResult check_order_iso(const FlatPointMap& map, const CausalGrid& grid,
                               const CausalGrid* target = nullptr);
OrderIsoResult check_order_iso(const CylPointMap& map, const CausalGrid& grid,
                               const CausalGrid* target = nullptr);

struct BruteDescentResult {
  DescentVerdict verdict = DescentVerdict::Automorphism;
  /// Two lifts with inequivalent images, or two inequivalent points with equal images.
  std::optional<std::pair<Event, Event>> witness;
  /// Cylinder order check of the descended map (only run for Automorphism).
  bool order_iso = true;
};

/**
 * Decides descent by evaluation only: compares images of deck-equivalent
 * lifts of every flat grid point (well-definedness), searches for a second
 * preimage among deck translates of each image (injectivity), then checks the
 * descended map against cyl_leq on the projected grid.
 */
BruteDescentResult check_descent_brute(const CausalAutomorphism& g, long n);

}  // namespace causal2d
