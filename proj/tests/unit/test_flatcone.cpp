#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "causal2d/errors.hpp"
#include "causal2d/flatcone.hpp"
#include "causal2d/random.hpp"
#include "support.hpp"

using namespace causal2d;
using causal2d::testing::affine;
using causal2d::testing::R;

namespace {

Event E(const char* x, const char* t) { return Event{R(x), R(t)}; }

CausalAutomorphism proper(const MonotoneMap& phi, const MonotoneMap& psi) {
  return CausalAutomorphism(AutoKind::Proper, phi, psi);
}

}  // namespace

TEST_CASE("null coordinates") {
  CHECK(null_coords(E("1", "2")) == NullEvent{R(3), R(-1)});
  CHECK(event_coords(NullEvent{R(3), R(-1)}) == E("1", "2"));
  CHECK(event_coords(null_coords(E("-5/7", "1/3"))) == E("-5/7", "1/3"));
}

TEST_CASE("causal and chronological order") {
  CHECK(causally_leq(E("0", "0"), E("1", "1")));
  CHECK_FALSE(chronologically_ll(E("0", "0"), E("1", "1")));
  CHECK(chronologically_ll(E("0", "0"), E("1/2", "1")));
  CHECK_FALSE(causally_leq(E("0", "0"), E("2", "1")));
  CHECK_FALSE(causally_leq(E("0", "1"), E("0", "0")));
  CHECK(causally_leq(E("3", "3"), E("3", "3")));
  CHECK_FALSE(chronologically_ll(E("3", "3"), E("3", "3")));
}

TEST_CASE("automorphism action in event coordinates") {
  const auto F = proper(affine("2", "0"), affine("2", "0"));
  CHECK(F(E("1", "1")) == E("2", "2"));

  // φ = id, ψ = x + 2 shifts u fixed and v by 2: x += 1, t −= 1.
  const auto G = proper(MonotoneMap::identity(), affine("1", "2"));
  CHECK(G(E("0", "0")) == E("1", "-1"));

  // Space reflection x ↦ −x is the flip with φ = ψ = −id.
  const CausalAutomorphism P(AutoKind::Flip, affine("-1", "0"), affine("-1", "0"));
  CHECK(P(E("2", "5")) == E("-2", "5"));
  CHECK(auto_apply(P, E("-1/3", "1")) == E("1/3", "1"));
}

TEST_CASE("kind and direction must agree") {
  CHECK_THROWS_AS(CausalAutomorphism(AutoKind::Proper, affine("-1", "0"), affine("-1", "0")), Error);
  CHECK_THROWS_AS(CausalAutomorphism(AutoKind::Flip, affine("1", "0"), affine("1", "0")), Error);
  try {
    auto_from_pair(AutoKind::Proper, affine("1", "0"), affine("-1", "0"));
    FAIL("expected DirectionMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DirectionMismatch);
  }
}

TEST_CASE("group action on random automorphisms") {
  Sampler s(99);
  for (int i = 0; i < 100; ++i) {
    const auto F = s.automorphism(i % 2 ? AutoKind::Proper : AutoKind::Flip);
    const auto G = s.automorphism(i % 3 ? AutoKind::Proper : AutoKind::Flip);
    const auto GF = auto_compose(G, F);
    CHECK(GF.kind() == (G.kind() == F.kind() ? AutoKind::Proper : AutoKind::Flip));
    const auto Fi = auto_invert(F);
    CHECK(auto_compose(Fi, F) == CausalAutomorphism::identity());
    CHECK(auto_compose(F, Fi) == CausalAutomorphism::identity());
    for (int k = 0; k < 10; ++k) {
      const Event p = s.event(4, 9);
      CHECK(GF(p) == G(F(p)));
      CHECK(Fi(F(p)) == p);
      CHECK(F.inverse_at(F(p)) == p);
    }
  }
}

TEST_CASE("automorphisms preserve both orders") {
  Sampler s(123);
  for (int i = 0; i < 20; ++i) {
    const auto F = s.automorphism(i % 2 ? AutoKind::Proper : AutoKind::Flip);
    SampleSpec spec;
    spec.seed = 1000 + i;
    spec.pairs = 500;
    const auto report = verify_order_iso(F, spec);
    CHECK(report.checked == 500);
    CHECK(report.passed());
  }
}

TEST_CASE("null lines map to null lines") {
  Sampler s(8);
  for (int i = 0; i < 30; ++i) {
    const auto F = s.automorphism(i % 2 ? AutoKind::Proper : AutoKind::Flip);
    const Event p = s.event(3, 6);
    for (const char* step : {"1/3", "1", "5/2"}) {
      const Rational d = R(step);
      const Event right{p.x + d, p.t + d};
      const Event left{p.x - d, p.t + d};
      for (const Event& q : {right, left}) {
        const NullEvent a = null_coords(F(p));
        const NullEvent b = null_coords(F(q));
        CHECK((a.u == b.u || a.v == b.v));
        CHECK(causally_leq(F(p), F(q)));
        CHECK_FALSE(chronologically_ll(F(p), F(q)));
      }
    }
  }
}

TEST_CASE("time reversal and a shear are caught") {
  const PointMap reverse = [](const Event& e) { return Event{e.x, -e.t}; };
  CHECK_FALSE(verify_order_iso(reverse, SampleSpec{}).passed());

  // (u, v) ↦ ((3u − v)/2, v) is linear and invertible but not causal.
  const PointMap shear = [](const Event& e) {
    const NullEvent n = null_coords(e);
    return event_coords(NullEvent{Rational((3 * n.u - n.v) / 2), n.v});
  };
  const auto report = verify_order_iso(shear, SampleSpec{});
  REQUIRE_FALSE(report.passed());
  const auto& w = report.failures.front();
  CHECK(causally_leq(w.p, w.q) != causally_leq(shear(w.p), shear(w.q)));
}

TEST_CASE("sampled pairs cover each separation type") {
  const auto pairs = sample_event_pairs(SampleSpec{});
  std::size_t chrono = 0, null = 0, spacelike = 0;
  for (const auto& [p, q] : pairs) {
    if (chronologically_ll(p, q) || chronologically_ll(q, p)) {
      ++chrono;
    } else if (causally_leq(p, q) || causally_leq(q, p)) {
      ++null;
    } else {
      ++spacelike;
    }
  }
  CHECK(chrono > 100);
  CHECK(null > 100);
  CHECK(spacelike > 100);
}
