#include <gtest/gtest.h>

#include <map>

#include "newtonpoly/ffield.hpp"

using namespace newtonpoly;

namespace {

FqPoly over(const FieldRef& k, std::vector<std::uint64_t> coeffs) {
  std::vector<FpPoly> cs;
  for (std::uint64_t c : coeffs) cs.push_back(k->element(c));
  return FqPoly(k, std::move(cs));
}

// Every monic polynomial of degree `deg` over a prime field, as coefficient vectors.
std::vector<std::vector<std::uint64_t>> all_monic(std::uint64_t p, unsigned deg) {
  std::vector<std::vector<std::uint64_t>> out;
  std::vector<std::uint64_t> c(deg + 1, 0);
  c[deg] = 1;
  for (;;) {
    out.push_back(c);
    unsigned i = 0;
    while (i < deg && ++c[i] == p) c[i++] = 0;
    if (i == deg) break;
  }
  return out;
}

bool has_factor_of_degree_below(const FqPoly& a, const FieldRef& k, unsigned h) {
  for (unsigned d = 1; d < h; ++d) {
    for (const auto& c : all_monic(k->characteristic(), d)) {
      if ((a % over(k, c)).is_zero()) return true;
    }
  }
  return false;
}

}  // namespace

TEST(FpPoly, Arithmetic) {
  const FpPoly a(5, {1, 2, 3});
  const FpPoly b(5, {4, 3});
  EXPECT_EQ(a + b, FpPoly(5, {0, 0, 3}));
  const auto [q, r] = (a * b + FpPoly(5, {2})).divmod(b);
  EXPECT_EQ(q, a);
  EXPECT_EQ(r, FpPoly(5, {2}));
  EXPECT_EQ(gcd(a * b, b * FpPoly(5, {1, 1})), b.monic());
  EXPECT_EQ(inv_mod(3, 7), 5u);
  EXPECT_TRUE(is_irreducible(FpPoly(2, {1, 1, 1})));
  EXPECT_FALSE(is_irreducible(FpPoly(2, {1, 0, 1})));
  EXPECT_THROW(a.divmod(FpPoly(5)), Error);
}

TEST(FiniteField, ExtensionArithmetic) {
  const FieldRef f4 = FiniteField::extension(FpPoly(2, {1, 1, 1}));
  EXPECT_EQ(f4->order(), 4);
  const FpPoly t = FpPoly::x(2);
  EXPECT_EQ(f4->mul(t, t), FpPoly(2, {1, 1}));
  EXPECT_EQ(f4->mul(t, f4->inv(t)), f4->one());
  EXPECT_EQ(f4->pow(t, 3), f4->one());
  EXPECT_EQ(f4->pow(f4->pth_root(t), 2), t);
  EXPECT_THROW(FiniteField(FpPoly(2, {1, 0, 1})), Error);
  EXPECT_THROW(f4->inv(f4->zero()), Error);
}

TEST(FqPoly, GcdAndSquarefree) {
  const FieldRef f2 = FiniteField::prime_field(2);
  EXPECT_TRUE(gcd_fq(over(f2, {1, 1, 1}), over(f2, {1, 1})).degree() == 0);
  EXPECT_FALSE(is_squarefree(over(f2, {0, 0, 1})));
  EXPECT_TRUE(is_squarefree(over(f2, {1, 1, 1})));
  EXPECT_FALSE(is_squarefree(over(f2, {1, 0, 1})));
}

TEST(FqPoly, DistinctDegreeProfiles) {
  const FieldRef f2 = FiniteField::prime_field(2);
  using Entries = std::vector<std::pair<unsigned, unsigned>>;
  EXPECT_EQ(distinct_degree_profile(over(f2, {1, 1, 1})).entries, (Entries{{2, 1}}));
  EXPECT_EQ(distinct_degree_profile(over(f2, {0, 1, 1})).entries, (Entries{{1, 2}}));
  EXPECT_EQ(distinct_degree_profile(over(f2, {1, 1, 0, 1})).entries, (Entries{{3, 1}}));
  EXPECT_THROW(distinct_degree_profile(over(f2, {0, 0, 1})), Error);
}

TEST(FqPoly, DistinctDegreeAgreesWithBruteForce) {
  for (std::uint64_t p : {2, 3}) {
    const FieldRef k = FiniteField::prime_field(p);
    for (unsigned deg = 1; deg <= (p == 2 ? 6u : 4u); ++deg) {
      for (const auto& c : all_monic(p, deg)) {
        const FqPoly a = over(k, c);
        if (!is_squarefree(a)) continue;
        // Count irreducible factors of each degree by trial division.
        std::map<unsigned, unsigned> brute;
        FqPoly rest = a;
        for (unsigned h = 1; h <= deg; ++h) {
          for (const auto& m : all_monic(p, h)) {
            const FqPoly cand = over(k, m);
            if (has_factor_of_degree_below(cand, k, h)) continue;
            while ((rest % cand).is_zero()) {
              rest = rest / cand;
              ++brute[h];
            }
          }
        }
        const DegreeProfile profile = distinct_degree_profile(a);
        const std::map<unsigned, unsigned> fast(profile.entries.begin(), profile.entries.end());
        ASSERT_EQ(fast, brute) << "p=" << p << " deg=" << deg;
        ASSERT_EQ(profile.total_degree(), deg);
      }
    }
  }
}

TEST(FqPoly, FrobeniusMatchesPowmod) {
  const FieldRef f9 = FiniteField::extension(FpPoly(3, {1, 0, 1}));
  const FqPoly m(f9, {f9->element(2), FpPoly::x(3), f9->zero(), f9->one()});
  const FqPoly y(f9, {f9->zero(), f9->one()});
  for (unsigned h = 1; h <= 3; ++h) {
    Integer e;
    mpz_pow_ui(e.get_mpz_t(), Integer(9).get_mpz_t(), h);
    EXPECT_EQ(frobenius_power(m, h), powmod(y, e, m));
  }
}

TEST(FqPoly, FactorReconstructs) {
  const FieldRef f5 = FiniteField::prime_field(5);
  const FqPoly a = over(f5, {1, 0, 1}) * over(f5, {1, 0, 1}) * over(f5, {2, 0, 0, 1}) * over(f5, {3, 1});
  const auto factors = factor(a);
  FqPoly product = over(f5, {1});
  unsigned total = 0;
  for (const auto& [fac, mult] : factors) {
    EXPECT_EQ(fac, fac.monic());
    EXPECT_EQ(distinct_degree_profile(fac).factor_count(), 1u);
    for (unsigned i = 0; i < mult; ++i) product = product * fac;
    total += mult;
  }
  EXPECT_EQ(product, a.monic());
  // x^2 + 1 = (x - 2)(x + 2) mod 5, x^3 + 2 has the root 2.
  EXPECT_EQ(total, 7u);
}

TEST(FqPoly, FactorOverExtensionField) {
  const FieldRef f4 = FiniteField::extension(FpPoly(2, {1, 1, 1}));
  // Y^2 + Y + 1 splits over F_4 into (Y + t)(Y + t + 1).
  const FqPoly a(f4, {f4->one(), f4->one(), f4->one()});
  const auto factors = factor(a);
  ASSERT_EQ(factors.size(), 2u);
  for (const auto& [fac, mult] : factors) {
    EXPECT_EQ(fac.degree(), 1);
    EXPECT_EQ(mult, 1u);
  }
}

TEST(FqPoly, SquarefreeDecomposition) {
  const FieldRef f3 = FiniteField::prime_field(3);
  const FqPoly lin = over(f3, {1, 1});
  const FqPoly quad = over(f3, {1, 0, 1});
  const FqPoly a = lin * lin * lin * quad;
  const auto parts = squarefree_decomposition(a);
  ASSERT_EQ(parts.size(), 2u);
  EXPECT_EQ(parts[0], std::make_pair(quad, 1u));
  EXPECT_EQ(parts[1], std::make_pair(lin, 3u));
}

TEST(Counting, MonicIrreducibles) {
  EXPECT_EQ(count_monic_irreducibles(2, 1), 2);
  EXPECT_EQ(count_monic_irreducibles(2, 2), 1);
  EXPECT_EQ(count_monic_irreducibles(3, 2), 3);
  EXPECT_EQ(count_monic_irreducibles(2, 4), 3);
  for (std::uint64_t p : {2, 3}) {
    for (unsigned h = 1; h <= 4; ++h) {
      const FieldRef k = FiniteField::prime_field(p);
      unsigned brute = 0;
      for (const auto& c : all_monic(p, h)) brute += !has_factor_of_degree_below(over(k, c), k, h) ? 1 : 0;
      EXPECT_EQ(count_monic_irreducibles(p, h), brute) << p << ' ' << h;
    }
  }
}
