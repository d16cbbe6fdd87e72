#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "newtonpoly/theorems.hpp"

namespace newtonpoly {

/// Random generators for property sweeps. All draws go through the supplied
/// engine, so a fixed seed gives a fixed instance stream.
using Rng = std::mt19937_64;

/// A nonzero rational with exactly the given p-adic valuation. Numerator
/// and denominator cofactors are small and prime to p; denominators appear
/// only when `allow_fraction` is set.
Rational random_with_valuation(Rng& rng, Prime p, long valuation, bool allow_fraction = false);

/// Polynomial whose i-th coefficient has valuation vals[i], or is zero when
/// vals[i] is empty. The last entry must be set.
RationalPoly random_poly(Rng& rng, Prime p, const std::vector<std::optional<long>>& vals, bool allow_fraction = false);

struct RandomInstance {
  TheoremId theorem = TheoremId::Composition;
  RationalPoly g;  // equals f for the iterate path
  RationalPoly f;
  std::uint64_t p = 2;
  /// Largest n with deg(g o f^n) (or deg f^n) within the degree budget.
  std::uint64_t max_n = 1;
};

/// Draw until the named theorem certifies the instance. `theorem` must be
/// Composition, Iterate or NegativeSlopeComposition.
RandomInstance random_satisfied_instance(Rng& rng, TheoremId theorem, Prime p, std::uint64_t degree_budget);

/// Instance near the hypothesis boundaries of the composition theorem
/// (r_t close to lambda_1(d + e - 1), lambda close to lambda_1).
RandomInstance random_boundary_instance(Rng& rng, Prime p);

/// Seed for the i-th item of a sweep, independent of scheduling.
std::uint64_t sweep_seed(std::uint64_t seed, std::uint64_t index);

}  // namespace newtonpoly
