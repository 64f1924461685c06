// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "causal2d/cylinder.hpp"
#include "causal2d/embedding.hpp"
#include "causal2d/errors.hpp"
#include "causal2d/oracle.hpp"
#include "causal2d/random.hpp"
#include "causal2d/smoothconf.hpp"

using namespace causal2d;

namespace {

// Pinned limits.
constexpr double kGroupLawSeconds = 10.0;
constexpr double kConformalSeconds = 5.0;
constexpr double kAffineDefect = 1e-10;
constexpr double kCubicLambda = 9.0;
constexpr double kCubicLambdaTol = 1e-4;
constexpr double kCubicDefect = 1e-6;
constexpr double kMinOrder = 1.8;
constexpr double kInverseSlope = 1e6;
constexpr double kSlopeStep = 1e-10;

constexpr std::size_t kTriples = 1000;
constexpr std::size_t kAutosPerKind = 100;
constexpr std::size_t kPairsPerAuto = 10000;
constexpr std::size_t kCylPoints = 1000;
constexpr std::size_t kQuotientPairs = 50;
constexpr std::size_t kEmbeddingMaps = 20;
constexpr std::size_t kDomainPoints = 1000;
constexpr long kBruteMaxN = 8;
constexpr long kPosetMaxN = 4;
// Recorded by hand enumeration of the 3×3 lattice before the grid builder existed.
constexpr std::size_t kFlatEdgesN1 = 23;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

int failures = 0;

void report(int id, const char* name, const Outcome& o) {
  std::printf("%s [%d] %s: %s\n", o.pass ? "PASS" : "FAIL", id, name, o.detail.c_str());
  std::fflush(stdout);
  if (!o.pass) ++failures;
}

template <typename F>
void run(int id, const char* name, F&& body) {
  Outcome o;
  try {
    body(o);
  } catch (const std::exception& e) {
    o.fail(std::string("unexpected exception: ") + e.what());
  }
  report(id, name, o);
}

std::string str(const Rational& r) { return to_string(r); }

std::string str(const CylPoint& p) { return "(" + str(p.theta) + ", " + str(p.t) + ")"; }

Direction random_direction(Sampler& s) { return s.integer(0, 1) ? Direction::Increasing : Direction::Decreasing; }

void group_laws(Outcome& o) {
  const auto start = Clock::now();
  Sampler s(1);
  std::size_t checked = 0;
  for (std::size_t i = 0; i < kTriples; ++i) {
    const auto f = s.monotone_map(random_direction(s));
    const auto g = s.monotone_map(random_direction(s));
    const auto h = s.monotone_map(random_direction(s));
    if (!(pl_compose(h, pl_compose(g, f)) == pl_compose(pl_compose(h, g), f))) o.fail("associativity, triple " + std::to_string(i));
    if (!(pl_compose(f, pl_invert(f)) == MonotoneMap::identity()) ||
        !(pl_compose(pl_invert(f), f) == MonotoneMap::identity())) {
      o.fail("inverse law, triple " + std::to_string(i));
    }
    if (!(pl_invert(pl_compose(g, f)) == pl_compose(pl_invert(f), pl_invert(g)))) {
      o.fail("(g∘f)⁻¹ = f⁻¹∘g⁻¹, triple " + std::to_string(i));
    }
    ++checked;
  }
  const double secs = seconds_since(start);
  if (secs >= kGroupLawSeconds) o.fail("runtime " + std::to_string(secs) + " s");
  if (o.pass) {
    std::ostringstream out;
    out << checked << " triples exact, " << secs << " s";
    o.detail = out.str();
  }
}

void automorphism_theorem(Outcome& o) {
  std::size_t pairs = 0;
  Sampler s(2);
  for (AutoKind kind : {AutoKind::Proper, AutoKind::Flip}) {
    for (std::size_t i = 0; i < kAutosPerKind; ++i) {
      const auto F = s.automorphism(kind);
      SampleSpec spec;
      spec.seed = 100000 + i + (kind == AutoKind::Flip ? kAutosPerKind : 0);
      spec.pairs = kPairsPerAuto;
      const auto r = verify_order_iso(F, spec);
      pairs += r.checked;
      if (!r.passed()) {
        o.fail(std::string(kind == AutoKind::Proper ? "proper" : "flip") + " automorphism " + std::to_string(i) +
               " broke " + r.failures.front().relation);
      }
    }
  }
  const PointMap planted = [](const Event& e) {
    const NullEvent n = null_coords(e);
    return event_coords(NullEvent{Rational((3 * n.u - n.v) / 2), n.v});
  };
  SampleSpec spec;
  spec.seed = 7;
  spec.pairs = kPairsPerAuto;
  const auto r = verify_order_iso(planted, spec);
  if (r.passed()) o.fail("planted map (u,v) -> ((3u-v)/2, v) was not caught");
  if (o.pass) {
    o.detail = std::to_string(pairs) + " pairs, 0 failures; planted map caught with " +
               std::to_string(r.failures.size()) + " witnesses";
  }
}

void deck_descent(Outcome& o) {
  Sampler s(3);
  const LineMap half_shift = MonotoneMap::translation(make_rational(1, 2));
  const LineMap minus = MonotoneMap::affine(Rational(-1), Rational(0));
  const CylinderAutomorphism id = CylinderAutomorphism::identity();
  const CylinderAutomorphism half(CausalAutomorphism(AutoKind::Proper, half_shift, half_shift));
  const CylinderAutomorphism reflect(CausalAutomorphism(AutoKind::Flip, minus, minus));
  std::vector<CylinderAutomorphism> decks;
  for (std::int64_t m = -3; m <= 3; ++m) decks.emplace_back(deck(m));

  for (std::size_t i = 0; i < kCylPoints; ++i) {
    const CylPoint p = CylPoint::make(s.rational(1, 24), s.rational(3, 24));
    if (!(descend_apply(id, p) == p)) o.fail("identity moved " + str(p));
    if (!(descend_apply(half, p) == CylPoint::make(p.theta + make_rational(1, 2), p.t))) o.fail("half rotation at " + str(p));
    if (!(descend_apply(reflect, p) == CylPoint::make(-p.theta, p.t))) o.fail("reflection at " + str(p));
    for (const auto& d : decks) {
      if (!(descend_apply(d, p) == p)) o.fail("deck transformation moved " + str(p));
    }
  }
  if (o.pass) o.detail = std::to_string(kCylPoints) + " points; deck(m), m in [-3, 3], acts trivially";
}

void literal_condition(Outcome& o) {
  struct Case {
    const char* c;
    DescentVerdict expected;
  };
  const Case cases[] = {{"1/2", DescentVerdict::NotWellDefined},
                        {"1", DescentVerdict::Automorphism},
                        {"3/2", DescentVerdict::NotWellDefined},
                        {"2", DescentVerdict::WellDefinedNotInjective},
                        {"-1", DescentVerdict::Automorphism}};
  Sampler s(4);
  std::string discrepancy;
  for (const auto& cs : cases) {
    const Rational c = parse_rational(cs.c);
    const LineMap f = MonotoneMap::affine(c, s.rational(1, 6));
    const CausalAutomorphism g(c > 0 ? AutoKind::Proper : AutoKind::Flip, f, f);
    const bool literal = satisfies_paper_condition(g.phi(), g.psi());
    if (!literal) o.fail(std::string("literal condition rejects c = ") + cs.c);
    const DescentVerdict analytic = descends(g);
    if (analytic != cs.expected) o.fail(std::string("analytic verdict for c = ") + cs.c);
    for (long n = 1; n <= kBruteMaxN; ++n) {
      const auto brute = check_descent_brute(g, n);
      if (brute.verdict != analytic) {
        o.fail(std::string("brute verdict disagrees for c = ") + cs.c + " at n = " + std::to_string(n));
      }
      if (brute.verdict == DescentVerdict::Automorphism && !brute.order_iso) {
        o.fail(std::string("descended map not order-preserving for c = ") + cs.c);
      }
    }
    if (literal && analytic != DescentVerdict::Automorphism) {
      discrepancy += std::string(discrepancy.empty() ? "" : ", ") + "c=" + cs.c + " -> " + std::string(to_string(analytic));
    }
  }
  if (o.pass) {
    o.detail = "verdicts agree for n <= " + std::to_string(kBruteMaxN) +
               "; literal c in Z/2 condition accepts maps that do not descend: " + discrepancy;
  }
}

CylinderAutomorphism random_coset(Sampler& s) {
  const bool flip = s.integer(0, 1) == 1;
  const Rational c = flip ? -1 : 1;
  return canonical_rep(
      CausalAutomorphism(flip ? AutoKind::Flip : AutoKind::Proper, s.quasi_periodic(c), s.quasi_periodic(c)));
}

void quotient(Outcome& o) {
  Sampler s(5);
  const auto id = CylinderAutomorphism::identity();
  for (std::size_t i = 0; i < kQuotientPairs; ++i) {
    const auto g = random_coset(s);
    const auto h = random_coset(s);
    if (!g.canonical() || !h.canonical()) o.fail("representative not canonical");
    const auto gh = quotient_compose(g, h);
    for (std::size_t k = 0; k < kCylPoints; ++k) {
      const CylPoint p = CylPoint::make(s.rational(1, 16), s.rational(2, 16));
      if (!(descend_apply(gh, p) == descend_apply(g, descend_apply(h, p)))) {
        o.fail("homomorphism fails at " + str(p) + " for pair " + std::to_string(i));
        break;
      }
    }
    if (!(quotient_compose(id, g) == g) || !(quotient_compose(g, id) == g)) o.fail("identity coset, pair " + std::to_string(i));
    if (!(quotient_compose(g, quotient_invert(g)) == id) || !(quotient_compose(quotient_invert(g), g) == id)) {
      o.fail("g g^-1 outside identity coset, pair " + std::to_string(i));
    }
  }
  if (o.pass) o.detail = std::to_string(kQuotientPairs) + " pairs x " + std::to_string(kCylPoints) + " points exact";
}

void embedding(Outcome& o) {
  Sampler s(6);
  const std::vector<std::pair<const char*, Domain>> domains = {
      {"plane", Domain::plane()}, {"strip", Domain::strip(Rational(1))}, {"diamond", Domain::diamond(Rational(2))}};
  std::size_t points = 0;
  for (const auto& [name, d] : domains) {
    SampleSpec spec;
    spec.seed = 60;
    spec.window = 3;
    spec.denominator = 16;
    const auto sample = sample_domain(d, spec, kDomainPoints);
    if (sample.size() != kDomainPoints) o.fail(std::string("could not sample ") + name);
    spec.seed = 61;
    const auto anywhere = sample_domain(Domain::plane(), spec, kDomainPoints);
    for (std::size_t i = 0; i < kEmbeddingMaps; ++i) {
      const auto f = s.monotone_map(Direction::Increasing);
      const auto g = s.monotone_map(Direction::Increasing);
      const auto i_f = extend_embedding(f, d);
      const auto i_g = extend_embedding(g, d);
      const auto on_plane = extend_embedding(f, Domain::plane());
      const Domain fD = image_domain(f, d);
      const Domain gD = image_domain(g, d);
      const auto C = conjugating_auto(f, g);
      std::vector<std::pair<Event, Event>> pairs;
      for (std::size_t k = 0; k < sample.size(); ++k) {
        const Event& p = sample[k];
        const Event q = i_f(p);
        if (!(q == i_f.via_shadow(p))) o.fail(std::string("null and shadow rules differ on ") + name);
        if (!fD.contains(q)) o.fail(std::string("image leaves f(D) on ") + name);
        if (!(C(q) == i_g(p))) o.fail(std::string("conjugating automorphism on ") + name);
        if (!gD.contains(C(q))) o.fail(std::string("conjugate leaves g(D) on ") + name);
        if (d.contains(anywhere[k]) != fD.contains(on_plane(anywhere[k]))) {
          o.fail(std::string("membership not equivariant on ") + name);
        }
        pairs.emplace_back(p, sample[(k * 7 + 3) % sample.size()]);
      }
      const auto r = verify_order_iso(PointMap([&](const Event& e) { return i_f(e); }), pairs);
      if (!r.passed()) o.fail(std::string("order not transported on ") + name);
      points += sample.size();
    }
  }
  if (o.pass) o.detail = std::to_string(points) + " map-point evaluations on plane, strip, diamond";
}

void conformality(Outcome& o) {
  const auto start = Clock::now();
  const auto cube = SmoothMonotoneMap::cubic_plus(1, 0, 0, 0);
  std::ostringstream out;

  double worst_affine = 0;
  const double slopes[][2] = {{2, 3}, {0.5, 7}, {1, 1}, {4, 0.25}};
  for (const auto& ab : slopes) {
    const SmoothAutomorphism F(AutoKind::Proper, SmoothMonotoneMap::affine(ab[0], 1), SmoothMonotoneMap::affine(ab[1], -2));
    const SmoothAutomorphism P(AutoKind::Flip, SmoothMonotoneMap::affine(-ab[0], 1), SmoothMonotoneMap::affine(-ab[1], -2));
    for (double x : {-1.5, 0.0, 2.25}) {
      for (double t : {-0.5, 0.75}) {
        worst_affine = std::max(worst_affine, conformal_defect(F, x, t, 1e-3).defect);
        worst_affine = std::max(worst_affine, conformal_defect(P, x, t, 1e-3).defect);
      }
    }
  }
  if (!(worst_affine < kAffineDefect)) o.fail("affine defect " + std::to_string(worst_affine));

  const SmoothAutomorphism C(AutoKind::Proper, cube, cube);
  const auto at = conformal_defect(C, 1, 0, 1e-3);
  if (!(std::abs(at.lambda - kCubicLambda) <= kCubicLambdaTol)) o.fail("cubic lambda " + std::to_string(at.lambda));
  if (!(at.defect < kCubicDefect)) o.fail("cubic defect " + std::to_string(at.defect));

  // Truncation error of the raw central-difference Jacobian against φ′ψ′.
  const double steps[] = {1e-3, 5e-4, 2.5e-4};
  double errors[3];
  for (int i = 0; i < 3; ++i) errors[i] = conformal_defect(C, 1, 0, steps[i], false).reference_defect;
  double min_order = INFINITY;
  for (int i = 0; i + 1 < 3; ++i) min_order = std::min(min_order, std::log(errors[i] / errors[i + 1]) / std::log(steps[i] / steps[i + 1]));
  if (!(min_order >= kMinOrder)) o.fail("observed order " + std::to_string(min_order));

  const double slope = inverse_axis_slope(C, kSlopeStep);
  if (!(slope > kInverseSlope)) o.fail("inverse slope " + std::to_string(slope));

  const double secs = seconds_since(start);
  if (!(secs < kConformalSeconds)) o.fail("runtime " + std::to_string(secs) + " s");
  if (o.pass) {
    out << "affine defect " << worst_affine << ", lambda " << at.lambda << ", defect " << at.defect << ", order "
        << min_order << ", inverse slope " << slope << ", " << secs << " s";
    o.detail = out.str();
  }
}

std::size_t enumerate_lattice_pairs(long n) {
  std::size_t count = 0;
  for (long x1 = -n; x1 <= n; ++x1)
    for (long t1 = -n; t1 <= n; ++t1)
      for (long x2 = -n; x2 <= n; ++x2)
        for (long t2 = -n; t2 <= n; ++t2)
          if ((x1 != x2 || t1 != t2) && t2 - t1 >= std::labs(x2 - x1)) ++count;
  return count;
}

void oracle(Outcome& o) {
  for (long n = 1; n <= kPosetMaxN; ++n) {
    if (!build_flat_grid(n).is_partial_order()) o.fail("flat grid n = " + std::to_string(n));
    if (!build_flat_grid(n, Domain::diamond(Rational(1))).is_partial_order()) o.fail("diamond grid n = " + std::to_string(n));
    if (!build_cyl_grid(n).is_partial_order()) o.fail("cylinder grid n = " + std::to_string(n));
  }
  const std::size_t edges = build_flat_grid(1).edge_count();
  const std::size_t enumerated = enumerate_lattice_pairs(1);
  if (edges != kFlatEdgesN1 || enumerated != kFlatEdgesN1) {
    o.fail("n = 1 edges " + std::to_string(edges) + ", enumeration " + std::to_string(enumerated));
  }
  if (o.pass) o.detail = "flat, diamond, cylinder grids n <= 4 are partial orders; n = 1 edge count 23";
}

}  // namespace

int main() {
  run(1, "group-law exactness", group_laws);
  run(2, "automorphisms preserve order both ways", automorphism_theorem);
  run(3, "deck transformations and descent", deck_descent);
  run(4, "normalizer condition stress test", literal_condition);
  run(5, "quotient homomorphism", quotient);
  run(6, "embedding of Cauchy-surface maps", embedding);
  run(7, "conformality", conformality);
  run(8, "oracle self-consistency", oracle);
  std::printf("%d of 8 criteria failed\n", failures);
  return failures == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
