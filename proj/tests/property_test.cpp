#include <gtest/gtest.h>

#include "newtonpoly/generate.hpp"
#include "newtonpoly/lemmas.hpp"

using namespace newtonpoly;

namespace {

constexpr std::array<std::uint64_t, 3> kPrimes{2, 3, 5};

// Smaller budget than the acceptance sweep so the unit suite stays quick.
constexpr std::uint64_t kBudget = 400;

}  // namespace

TEST(Generators, ProduceRequestedValuations) {
  Rng rng(5);
  for (long v = -3; v <= 4; ++v) {
    for (int i = 0; i < 20; ++i) EXPECT_EQ(vp(random_with_valuation(rng, Prime(3), v, true), Prime(3)), Valuation(v));
  }
  const RationalPoly f = random_poly(rng, Prime(2), {2, std::nullopt, 0});
  EXPECT_EQ(f.degree(), 2);
  EXPECT_EQ(f.coefficient(1), 0);
  EXPECT_EQ(vp(f.constant_term(), Prime(2)), Valuation(2));
}

TEST(Generators, SeedsAreReproducible) {
  Rng a(sweep_seed(9, 3)), b(sweep_seed(9, 3));
  const RandomInstance x = random_satisfied_instance(a, TheoremId::Composition, Prime(3), kBudget);
  const RandomInstance y = random_satisfied_instance(b, TheoremId::Composition, Prime(3), kBudget);
  EXPECT_EQ(x.g, y.g);
  EXPECT_EQ(x.f, y.f);
  EXPECT_NE(sweep_seed(9, 3), sweep_seed(9, 4));
}

TEST(Soundness, CompositionPredictionsMatchOracle) {
  for (std::uint64_t i = 0; i < 30; ++i) {
    Rng rng(sweep_seed(100, i));
    const Prime p(kPrimes[i % 3]);
    const RandomInstance inst = random_satisfied_instance(rng, TheoremId::Composition, p, kBudget);
    const CompositionHypotheses h = composition_hypotheses(inst.g, inst.f, p);
    ASSERT_TRUE(check_vertex_height_bound(h).holds);
    ASSERT_TRUE(check_telescoping(h).holds);
    for (std::uint64_t n = 1; n <= inst.max_n; ++n) {
      const RationalPoly composed = compose_iterated(inst.g, inst.f, n);
      ASSERT_EQ(predict_composition(inst.g, inst.f, p, n), newton_polygon(composed, p))
          << "g = " << render(inst.g) << ", f = " << render(inst.f) << ", p = " << p.value() << ", n = " << n;
      ASSERT_TRUE(check_vertex_valuations(h, composed, p, n).holds);
      ASSERT_TRUE(check_coefficient_lower_bounds(h, composed, p, n).holds);
    }
  }
}

TEST(Soundness, IteratePredictionsMatchOracle) {
  for (std::uint64_t i = 0; i < 30; ++i) {
    Rng rng(sweep_seed(200, i));
    const Prime p(kPrimes[i % 3]);
    const RandomInstance inst = random_satisfied_instance(rng, TheoremId::Iterate, p, kBudget);
    for (std::uint64_t n = 1; n <= inst.max_n; ++n) {
      const TheoremCertificate c = check_iterate(inst.f, p, n);
      ASSERT_TRUE(c.satisfied());
      ASSERT_EQ(*c.predicted_polygon, newton_polygon(iterate(inst.f, n), p))
          << "f = " << render(inst.f) << ", p = " << p.value() << ", n = " << n;
    }
  }
}

TEST(Soundness, NegativeSlopePredictionsMatchOracle) {
  for (std::uint64_t i = 0; i < 30; ++i) {
    Rng rng(sweep_seed(300, i));
    const Prime p(kPrimes[i % 3]);
    const RandomInstance inst = random_satisfied_instance(rng, TheoremId::NegativeSlopeComposition, p, kBudget);
    for (std::uint64_t n = 1; n <= inst.max_n; ++n) {
      const TheoremCertificate c = check_negative_slope_composition(inst.g, inst.f, p, n);
      ASSERT_TRUE(c.satisfied());
      ASSERT_EQ(*c.predicted_polygon, newton_polygon(compose_iterated(inst.g, inst.f, n), p))
          << "g = " << render(inst.g) << ", f = " << render(inst.f) << ", p = " << p.value() << ", n = " << n;
    }
  }
}

TEST(Soundness, VerifyNeverMatchesUnequalVertices) {
  for (std::uint64_t i = 0; i < 60; ++i) {
    Rng rng(sweep_seed(400, i));
    const Prime p(kPrimes[i % 3]);
    const RandomInstance inst = random_boundary_instance(rng, p);
    const ComparisonReport r = verify_prediction(inst.g, inst.f, p, 1);
    const bool same = std::equal(r.predicted.vertices().begin(), r.predicted.vertices().end(),
                                 r.oracle.vertices().begin(), r.oracle.vertices().end());
    ASSERT_EQ(r.match, same);
    if (r.certificate.satisfied() && r.certificate.theorem == TheoremId::Composition) ASSERT_TRUE(r.match);
  }
}

TEST(Congruence, IteratesStayXPowerModP) {
  // f = x^d mod p gives f^n = x^(d^n) mod p and vp(f^n(0)) = vp(f(0)).
  Rng rng(77);
  for (int trial = 0; trial < 40; ++trial) {
    const Prime p(kPrimes[static_cast<std::size_t>(trial) % 3]);
    const long d = 2 + trial % 3;
    std::vector<std::optional<long>> v(static_cast<std::size_t>(d) + 1);
    v[static_cast<std::size_t>(d)] = 0;
    for (long i = 0; i < d; ++i) v[static_cast<std::size_t>(i)] = 1 + (trial + i) % 3;
    const RationalPoly f = random_poly(rng, p, v);
    const RationalPoly f3 = iterate(f, 3);
    const long top = f3.degree();
    for (long i = 0; i < top; ++i) ASSERT_GT(vp(f3.coefficient(static_cast<std::size_t>(i)), p), Valuation(0));
    ASSERT_EQ(vp(f3.leading(), p), Valuation(0));
    ASSERT_EQ(vp(f3.constant_term(), p), vp(f.constant_term(), p));
  }
}
