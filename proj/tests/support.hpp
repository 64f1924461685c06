#pragma once

#include <string>
#include <vector>

#include "causal2d/exactmaps.hpp"
#include "causal2d/rational.hpp"

namespace causal2d::testing {

inline Rational R(const char* text) { return parse_rational(text); }
inline Rational R(long n, long d = 1) { return make_rational(n, d); }
inline Rational R(int n) { return make_rational(n, 1); }

inline std::vector<Anchor> anchors(std::initializer_list<std::pair<const char*, const char*>> pts) {
  std::vector<Anchor> out;
  for (const auto& [x, y] : pts) out.push_back(Anchor{R(x), R(y)});
  return out;
}

inline MonotoneMap affine(const char* slope, const char* intercept) { return MonotoneMap::affine(R(slope), R(intercept)); }

}  // namespace causal2d::testing
