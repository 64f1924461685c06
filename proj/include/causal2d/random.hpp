#pragma once

#include <cstdint>
#include <random>

#include "causal2d/exactmaps.hpp"
#include "causal2d/flatcone.hpp"

namespace causal2d {

/// Seeded generator of exact test data. Output depends only on the seed.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  /// Uniform integer in [lo, hi].
  long integer(long lo, long hi);

  /// p/q with q in [1, max_den] and p/q in [−window, window].
  Rational rational(long window, long max_den);

  /// p/q with p in [1, max_num], q in [1, max_den].
  Rational positive(long max_num, long max_den);

  Event event(long window, long max_den);

  /// Random strictly monotone PL map with up to `max_anchors` anchors.
  MonotoneMap monotone_map(Direction direction, int max_anchors = 5);

  /// Random quasi-periodic map with constant c and up to `max_interior` interior anchors.
  QuasiPeriodicMap quasi_periodic(const Rational& c, int max_interior = 3);

  CausalAutomorphism automorphism(AutoKind kind, int max_anchors = 5);

 private:
  std::mt19937_64 rng_;
};

}  // namespace causal2d
