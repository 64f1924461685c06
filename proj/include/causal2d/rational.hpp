#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace causal2d {

/// Arbitrary-precision rational, always canonical (lowest terms, positive denominator).
using Rational = mpq_class;

/// Parses "p/q" or an integer string. Throws Error(InvalidInput) on malformed text or q == 0.
Rational parse_rational(std::string_view text);

/// "p/q", or just "p" when the denominator is 1.
std::string to_string(const Rational& value);

mpz_class floor_of(const Rational& value);
mpz_class ceil_of(const Rational& value);

/// value - floor(value), in [0, 1).
Rational frac_of(const Rational& value);

bool is_integer(const Rational& value);

/// Throws Error(InvalidInput) when the value does not fit.
std::int64_t to_int64(const mpz_class& value);

inline Rational make_rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline double to_double(const Rational& value) { return value.get_d(); }

inline int sign_of(const Rational& value) { return sgn(value); }

}  // namespace causal2d
