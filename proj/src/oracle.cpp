#include "causal2d/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <map>

#include "causal2d/errors.hpp"

namespace causal2d {

namespace {

struct EventLess {
  bool operator()(const Event& a, const Event& b) const { return a.x < b.x || (a.x == b.x && a.t < b.t); }
};

struct CylLess {
  bool operator()(const CylPoint& a, const CylPoint& b) const {
    return a.theta < b.theta || (a.theta == b.theta && a.t < b.t);
  }
};

bool predicate(const Event& a, const Event& b) { return causally_leq(a, b); }
bool predicate(const CylPoint& a, const CylPoint& b) { return cyl_leq(a, b); }

template <typename Point, typename Less>
OrderIsoResult transport_check(const std::function<Point(const Point&)>& map, const CausalGrid& grid,
                               const std::vector<Point>& points, const CausalGrid* target,
                               const std::vector<Point>* target_points) {
  std::vector<Point> images;
  images.reserve(points.size());
  for (const auto& p : points) images.push_back(map(p));

  std::vector<std::size_t> index;
  if (target != nullptr) {
    std::map<Point, std::size_t, Less> lookup;
    for (std::size_t i = 0; i < target_points->size(); ++i) lookup.emplace((*target_points)[i], i);
    for (const auto& img : images) {
      auto it = lookup.find(img);
      if (it == lookup.end()) throw Error(ErrorCode::ImageOffGrid, "image point is not a point of the target grid");
      index.push_back(it->second);
    }
  }

  OrderIsoResult result;
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = 0; j < points.size(); ++j) {
      if (i == j) continue;
      const bool image_leq = target != nullptr ? target->leq(index[i], index[j]) : predicate(images[i], images[j]);
      if (grid.leq(i, j) != image_leq) {
        result.iso = false;
        result.witness = std::make_pair(i, j);
        return result;
      }
    }
  }
  return result;
}

}  // namespace

CausalGrid::CausalGrid(std::vector<Event> points, std::optional<Domain> domain)
    : points_(std::move(points)), domain_(std::move(domain)) {
  build_edges();
}

CausalGrid::CausalGrid(std::vector<CylPoint> points) : points_(std::move(points)) { build_edges(); }

void CausalGrid::build_edges() {
  std::visit(
      [this](const auto& pts) {
        successors_.assign(pts.size(), {});
        for (std::size_t i = 0; i < pts.size(); ++i) {
          for (std::size_t j = 0; j < pts.size(); ++j) {
            if (i != j && predicate(pts[i], pts[j])) successors_[i].push_back(j);
          }
        }
      },
      points_);
}

bool CausalGrid::leq(std::size_t i, std::size_t j) const {
  if (i == j) return true;
  const auto& s = successors_[i];
  return std::binary_search(s.begin(), s.end(), j);
}

std::size_t CausalGrid::edge_count() const {
  std::size_t total = 0;
  for (const auto& s : successors_) total += s.size();
  return total;
}

bool CausalGrid::is_partial_order() const {
  const std::size_t n = size();
  const std::size_t words = (n + 63) / 64;
  std::vector<std::vector<std::uint64_t>> rows(n, std::vector<std::uint64_t>(words, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (auto j : successors_[i]) rows[i][j / 64] |= std::uint64_t{1} << (j % 64);
  }
  const bool reflexive = std::visit(
      [](const auto& pts) {
        return std::all_of(pts.begin(), pts.end(), [](const auto& p) { return predicate(p, p); });
      },
      points_);
  if (!reflexive) return false;
  for (std::size_t i = 0; i < n; ++i) {
    for (auto j : successors_[i]) {
      if (leq(j, i)) return false;  // antisymmetry
      for (std::size_t w = 0; w < words; ++w) {
        std::uint64_t extra = rows[j][w] & ~rows[i][w];
        if (w == i / 64) extra &= ~(std::uint64_t{1} << (i % 64));
        if (extra != 0) return false;  // transitivity
      }
    }
  }
  return true;
}

CausalGrid build_flat_grid(long n, const std::optional<Domain>& domain) {
  if (n < 1) throw Error(ErrorCode::InvalidInput, "grid size n must be >= 1");
  std::vector<Event> pts;
  for (long i = -n; i <= n; ++i) {
    for (long j = -n; j <= n; ++j) {
      Event e{make_rational(i, n), make_rational(j, n)};
      if (!domain || domain->contains(e)) pts.push_back(std::move(e));
    }
  }
  return CausalGrid(std::move(pts), domain);
}

CausalGrid build_cyl_grid(long n) {
  if (n < 1) throw Error(ErrorCode::InvalidInput, "grid size n must be >= 1");
  std::vector<CylPoint> pts;
  for (long k = 0; k < 2 * n + 1; ++k) {
    for (long j = -n; j <= n; ++j) pts.push_back(CylPoint{make_rational(k, 2 * n + 1), make_rational(j, n)});
  }
  return CausalGrid(std::move(pts));
}

OrderIsoResult check_order_iso(const FlatPointMap& map, const CausalGrid& grid, const CausalGrid* target) {
  if (grid.space() != SpaceKind::Flat || (target != nullptr && target->space() != SpaceKind::Flat)) {
    throw Error(ErrorCode::InvalidInput, "flat point map needs flat grids");
  }
  return transport_check<Event, EventLess>(map, grid, grid.events(), target,
                                           target != nullptr ? &target->events() : nullptr);
}

OrderIsoResult check_order_iso(const CylPointMap& map, const CausalGrid& grid, const CausalGrid* target) {
  if (grid.space() != SpaceKind::Cylinder || (target != nullptr && target->space() != SpaceKind::Cylinder)) {
    throw Error(ErrorCode::InvalidInput, "cylinder point map needs cylinder grids");
  }
  return transport_check<CylPoint, CylLess>(map, grid, grid.cyl_points(), target,
                                            target != nullptr ? &target->cyl_points() : nullptr);
}

BruteDescentResult check_descent_brute(const CausalAutomorphism& g, long n) {
  const CausalGrid grid = build_flat_grid(n);
  const auto& pts = grid.events();
  auto shifted = [](const Event& e, long m) { return Event{Rational(e.x + m), e.t}; };
  BruteDescentResult result;

  // Deck-equivalent lifts must land on the same cylinder point.
  for (const auto& p : pts) {
    const CylPoint image = project(g(p));
    for (long m : {-2L, -1L, 1L, 2L}) {
      const Event lift = shifted(p, m);
      if (project(g(lift)) != image) {
        result.verdict = DescentVerdict::NotWellDefined;
        result.witness = std::make_pair(p, lift);
        return result;
      }
    }
  }

  // Inequivalent points must not share an image: among grid points directly,
  // and among the deck translates of each image pulled back through g.
  std::map<CylPoint, Event, CylLess> seen;
  for (const auto& p : pts) {
    const CylPoint image = project(g(p));
    auto [it, inserted] = seen.emplace(image, p);
    if (!inserted && project(it->second) != project(p)) {
      result.verdict = DescentVerdict::WellDefinedNotInjective;
      result.witness = std::make_pair(it->second, p);
      return result;
    }
    const Event q = g(p);
    for (long k : {-2L, -1L, 1L, 2L}) {
      const Event other = g.inverse_at(shifted(q, k));
      if (project(other) != project(p)) {
        result.verdict = DescentVerdict::WellDefinedNotInjective;
        result.witness = std::make_pair(p, other);
        return result;
      }
    }
  }

  std::vector<CylPoint> projected;
  for (const auto& p : pts) projected.push_back(project(p));
  std::sort(projected.begin(), projected.end(), CylLess{});
  projected.erase(std::unique(projected.begin(), projected.end()), projected.end());
  const CausalGrid cyl(std::move(projected));
  const CylPointMap descended = [&g](const CylPoint& c) { return project(g(Event{c.theta, c.t})); };
  result.order_iso = check_order_iso(descended, cyl).iso;
  return result;
}

}  // namespace causal2d
