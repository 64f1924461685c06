#include "causal2d/random.hpp"

#include <algorithm>
#include <set>

namespace causal2d {

long Sampler::integer(long lo, long hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<long>(rng_() % span);
}

Rational Sampler::rational(long window, long max_den) {
  const long den = integer(1, max_den);
  return make_rational(integer(-window * den, window * den), den);
}

Rational Sampler::positive(long max_num, long max_den) {
  return make_rational(integer(1, max_num), integer(1, max_den));
}

Event Sampler::event(long window, long max_den) { return Event{rational(window, max_den), rational(window, max_den)}; }

MonotoneMap Sampler::monotone_map(Direction direction, int max_anchors) {
  const int count = static_cast<int>(integer(2, max_anchors));
  std::set<Rational> xs;
  while (static_cast<int>(xs.size()) < count) xs.insert(rational(3, 6));
  const int sign = direction == Direction::Increasing ? 1 : -1;
  std::vector<Anchor> anchors;
  Rational y = rational(3, 4);
  for (const auto& x : xs) {
    if (!anchors.empty()) y += sign * positive(4, 3) * (x - anchors.back().x);
    anchors.push_back(Anchor{x, y});
  }
  return MonotoneMap(std::move(anchors), Rational(sign * positive(4, 3)), Rational(sign * positive(4, 3)), direction);
}

QuasiPeriodicMap Sampler::quasi_periodic(const Rational& c, int max_interior) {
  const int interior = static_cast<int>(integer(0, max_interior));
  std::set<Rational> xs;
  while (static_cast<int>(xs.size()) < interior) {
    const long den = integer(2, 8);
    xs.insert(make_rational(integer(1, den - 1), den));
  }
  // Interior values: random increasing weights normalised to the total rise c.
  std::vector<Rational> weights;
  Rational total = 0;
  for (std::size_t i = 0; i <= xs.size(); ++i) {
    weights.push_back(positive(5, 2));
    total += weights.back();
  }
  std::vector<Anchor> anchors;
  Rational y = rational(2, 4);
  anchors.push_back(Anchor{Rational(0), y});
  std::size_t i = 0;
  for (const auto& x : xs) {
    y += c * weights[i++] / total;
    anchors.push_back(Anchor{x, y});
  }
  anchors.push_back(Anchor{Rational(1), Rational(anchors.front().y + c)});
  return QuasiPeriodicMap::from_fundamental(std::move(anchors), c);
}

CausalAutomorphism Sampler::automorphism(AutoKind kind, int max_anchors) {
  const Direction d = kind == AutoKind::Proper ? Direction::Increasing : Direction::Decreasing;
  LineMap phi = monotone_map(d, max_anchors);
  LineMap psi = monotone_map(d, max_anchors);
  return CausalAutomorphism(kind, std::move(phi), std::move(psi));
}

}  // namespace causal2d
