#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "causal2d/errors.hpp"
#include "causal2d/exactmaps.hpp"
#include "causal2d/random.hpp"
#include "support.hpp"

using namespace causal2d;
using causal2d::testing::affine;
using causal2d::testing::anchors;
using causal2d::testing::R;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::InvalidInput;
}

}  // namespace

TEST_CASE("pl_eval interpolates and extrapolates") {
  const MonotoneMap f(anchors({{"0", "0"}, {"1", "2"}}), R(1), R(3), Direction::Increasing);
  CHECK(pl_eval(f, R("1/2")) == 1);
  CHECK(pl_eval(f, R(-2)) == -2);
  CHECK(pl_eval(f, R(2)) == 5);
  CHECK(pl_eval(MonotoneMap::identity(), R("7/3")) == R("7/3"));
}

TEST_CASE("quasi-periodic evaluation matches repeated translation") {
  const auto halving = qp_from_fundamental(anchors({{"0", "0"}, {"1", "1/2"}}), R("1/2"));
  CHECK(pl_eval(halving, R("5/2")) == R("5/4"));

  // Oracle: step from the fundamental domain using f(x+1) = f(x) + c only.
  const auto f = qp_from_fundamental(anchors({{"0", "1/3"}, {"1/4", "1/2"}, {"2/3", "3/4"}, {"1", "4/3"}}), R(1));
  for (const char* base : {"0", "1/8", "1/4", "1/2", "2/3", "9/10"}) {
    Rational expected = pl_eval(f, R(base));
    for (int n = 1; n <= 4; ++n) {
      expected += f.c();
      CHECK(pl_eval(f, R(base) + n) == expected);
    }
  }
}

TEST_CASE("pl_compose") {
  CHECK(pl_compose(affine("1", "1"), affine("1", "2")) == affine("1", "3"));

  const MonotoneMap f(anchors({{"0", "0"}, {"1", "2"}}), R(1), R(3), Direction::Increasing);
  const MonotoneMap expected(anchors({{"0", "0"}, {"1", "4"}}), R(2), R(6), Direction::Increasing);
  CHECK(pl_compose(affine("2", "0"), f) == expected);

  // Decreasing ∘ decreasing is increasing.
  const auto dd = pl_compose(affine("-1", "0"), affine("-2", "1"));
  CHECK(dd.direction() == Direction::Increasing);
  CHECK(dd == affine("2", "-1"));
}

TEST_CASE("pl_invert") {
  CHECK(pl_invert(affine("2", "0")) == affine("1/2", "0"));
  CHECK(pl_invert(affine("-1", "0")) == affine("-1", "0"));

  const MonotoneMap f(anchors({{"0", "0"}, {"1", "2"}}), R(1), R(3), Direction::Increasing);
  const MonotoneMap expected(anchors({{"0", "0"}, {"2", "1"}}), R(1), R("1/3"), Direction::Increasing);
  CHECK(pl_invert(f) == expected);

  const MonotoneMap g(anchors({{"-1", "3"}, {"0", "1"}, {"2", "0"}}), R(-1), R(-4), Direction::Decreasing);
  const MonotoneMap gi = pl_invert(g);
  for (const char* x : {"-5", "-1", "-1/2", "0", "1", "2", "7/3"}) CHECK(pl_eval(gi, pl_eval(g, R(x))) == R(x));
}

TEST_CASE("normalisation makes representation equality functional equality") {
  const MonotoneMap padded(anchors({{"-3", "-3"}, {"0", "0"}, {"1/2", "1/2"}, {"5", "5"}}), R(1), R(1),
                           Direction::Increasing);
  CHECK(padded == MonotoneMap::identity());
  CHECK(padded.anchors().size() == 2);

  const MonotoneMap kink(anchors({{"-1", "-1"}, {"0", "0"}, {"2", "4"}}), R(1), R(2), Direction::Increasing);
  CHECK(kink.anchors() == anchors({{"0", "0"}, {"1", "2"}}));
}

TEST_CASE("monotone map validation") {
  CHECK(code_of([] { MonotoneMap(anchors({{"0", "0"}, {"1", "1"}}), R(1), R(1), Direction::Decreasing); }) ==
        ErrorCode::DirectionMismatch);
  CHECK(code_of([] { MonotoneMap(anchors({{"0", "0"}, {"1", "-1"}}), R(1), R(1), Direction::Increasing); }) ==
        ErrorCode::NotMonotone);
  CHECK(code_of([] { MonotoneMap(anchors({{"0", "0"}, {"1", "1"}}), R(0L), R(1), Direction::Increasing); }) ==
        ErrorCode::NotMonotone);
  CHECK(code_of([] { MonotoneMap(anchors({{"1", "0"}, {"0", "1"}}), R(1), R(1), Direction::Increasing); }) ==
        ErrorCode::NotMonotone);
}

TEST_CASE("qp_from_fundamental") {
  const auto id = qp_from_fundamental(anchors({{"0", "0"}, {"1", "1"}}), R(1));
  CHECK(id.c() == 1);
  CHECK(LineMap(id) == LineMap::identity());

  const auto half = qp_from_fundamental(anchors({{"0", "0"}, {"1", "1/2"}}), R("1/2"));
  for (const char* x : {"-3/2", "0", "1/3", "4"}) CHECK(pl_eval(half, R(x) + 1) == pl_eval(half, R(x)) + R("1/2"));

  CHECK(code_of([] { qp_from_fundamental(anchors({{"0", "0"}, {"1", "1"}}), R("1/2")); }) ==
        ErrorCode::EndpointMismatch);
  CHECK(code_of([] { qp_from_fundamental(anchors({{"0", "0"}, {"1/2", "2"}, {"1", "1"}}), R(1)); }) ==
        ErrorCode::NotMonotone);
  CHECK(code_of([] { qp_from_fundamental(anchors({{"0", "0"}, {"1", "0"}}), R(0L)); }) == ErrorCode::ZeroPeriod);
  CHECK(code_of([] { qp_from_fundamental(anchors({{"0", "0"}, {"2", "1"}}), R(1)); }) == ErrorCode::InvalidInput);
}

TEST_CASE("qp_quasi_period") {
  CHECK(qp_quasi_period(MonotoneMap::identity()) == R(1));
  CHECK(qp_quasi_period(affine("1/2", "0")) == R("1/2"));
  const MonotoneMap f(anchors({{"0", "0"}, {"1", "2"}}), R(1), R(1), Direction::Increasing);
  CHECK_FALSE(qp_quasi_period(f).has_value());
  CHECK(qp_quasi_period(affine("-1", "3")) == R(-1));
}

TEST_CASE("group laws on random PL maps") {
  Sampler s(2024);
  for (int i = 0; i < 200; ++i) {
    const auto f = s.monotone_map(s.integer(0, 1) ? Direction::Increasing : Direction::Decreasing);
    const auto g = s.monotone_map(s.integer(0, 1) ? Direction::Increasing : Direction::Decreasing);
    const auto h = s.monotone_map(s.integer(0, 1) ? Direction::Increasing : Direction::Decreasing);
    CHECK(pl_compose(pl_compose(h, g), f) == pl_compose(h, pl_compose(g, f)));
    CHECK(pl_compose(f, pl_invert(f)) == MonotoneMap::identity());
    CHECK(pl_compose(pl_invert(f), f) == MonotoneMap::identity());
    CHECK(pl_invert(pl_compose(g, f)) == pl_compose(pl_invert(f), pl_invert(g)));

    const auto gf = pl_compose(g, f);
    CHECK(gf.direction() == g.direction() * f.direction());
    const int want = gf.direction() == Direction::Increasing ? 1 : -1;
    for (const auto& slope : gf.function().slopes()) CHECK(sgn(slope) == want);
    for (const char* x : {"-7/2", "0", "1/3", "5"}) CHECK(pl_eval(gf, R(x)) == pl_eval(g, pl_eval(f, R(x))));
  }
}

TEST_CASE("quasi-periodic translation identity holds for n in [-5, 5]") {
  Sampler s(7);
  for (int i = 0; i < 30; ++i) {
    const Rational c = i % 2 == 0 ? s.positive(3, 2) : Rational(-s.positive(3, 2));
    const auto f = s.quasi_periodic(c);
    for (int k = 0; k < 5; ++k) {
      const Rational x = s.rational(3, 7);
      for (long n = -5; n <= 5; ++n) CHECK(pl_eval(f, x + n) - pl_eval(f, x) == c * n);
    }
  }
}

TEST_CASE("quasi-periodic composition") {
  Sampler s(11);
  for (int i = 0; i < 20; ++i) {
    const Rational c1 = s.integer(1, 3) * (i % 2 ? 1 : -1);
    const Rational c2 = s.integer(1, 3) * (i % 3 ? 1 : -1);
    const auto g = s.quasi_periodic(c1);
    const auto f = s.quasi_periodic(c2);
    const auto gf = qp_compose(g, f);
    CHECK(gf.c() == c1 * c2);
    for (int k = 0; k < 6; ++k) {
      const Rational x = s.rational(3, 9);
      CHECK(pl_eval(gf, x) == pl_eval(g, pl_eval(f, x)));
    }
  }

  // Halving twice stays quasi-periodic (affine case).
  const LineMap halving = affine("1/2", "0");
  CHECK(qp_quasi_period(compose(halving, halving)) == R("1/4"));

  // A non-affine fundamental with c = 1/2 composed with itself is not.
  const auto bent = qp_from_fundamental(anchors({{"0", "0"}, {"1/2", "1/8"}, {"1", "1/2"}}), R("1/2"));
  CHECK_THROWS_AS(qp_compose(bent, bent), Error);
  // Independent counterexample search on h(x) = f(f(x)).
  bool found = false;
  for (long k = 0; k < 40 && !found; ++k) {
    const Rational x = R(k, 40);
    const Rational h0 = pl_eval(bent, pl_eval(bent, x));
    const Rational h1 = pl_eval(bent, pl_eval(bent, x + 1));
    found = h1 - h0 != R("1/4");
  }
  CHECK(found);
}

TEST_CASE("quasi-periodic inversion") {
  Sampler s(5);
  for (int i = 0; i < 20; ++i) {
    const Rational c = i % 2 ? 1 : -1;
    const auto f = s.quasi_periodic(c);
    const LineMap fi = qp_invert(f);
    CHECK(qp_quasi_period(fi) == c);
    for (int k = 0; k < 6; ++k) {
      const Rational x = s.rational(4, 9);
      CHECK(pl_eval(fi, pl_eval(f, x)) == x);
      CHECK(f.inverse_at(pl_eval(f, x)) == x);
    }
    CHECK(compose(fi, LineMap(f)) == LineMap::identity());
  }
  const auto doubled = qp_from_fundamental(anchors({{"0", "0"}, {"1/2", "1/2"}, {"1", "2"}}), R(2));
  CHECK(code_of([&] { qp_invert(doubled); }) == ErrorCode::Unrepresentable);
}

TEST_CASE("LineMap mixes plain and quasi-periodic maps") {
  Sampler s(3);
  const auto q = s.quasi_periodic(R(1), 3);
  const LineMap shifted = compose(LineMap(q), LineMap(MonotoneMap::translation(R(2))));
  CHECK(pl_eval(shifted, R("1/3")) == pl_eval(q, R("7/3")));

  const MonotoneMap bent(anchors({{"0", "0"}, {"1", "2"}}), R(1), R(1), Direction::Increasing);
  if (q.is_affine()) return;
  CHECK(code_of([&] { compose(LineMap(q), LineMap(bent)); }) == ErrorCode::Unrepresentable);
}
