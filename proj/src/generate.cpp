#include "newtonpoly/generate.hpp"

#include <numeric>

namespace newtonpoly {

namespace {

long int_in(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

bool chance(Rng& rng, int percent) { return int_in(rng, 0, 99) < percent; }

long ceil_mul(const Slope& s, long k) {
  // ceil(s * k) for k >= 0
  const __int128 num = static_cast<__int128>(s.num()) * k;
  const __int128 den = s.den();
  __int128 q = num / den;
  if (num % den != 0 && num > 0) ++q;
  return static_cast<long>(q);
}

std::uint64_t budget_depth(std::uint64_t e, std::uint64_t d, std::uint64_t budget) {
  if (d == 1) return 4;
  std::uint64_t n = 0;
  std::uint64_t deg = e;
  while (deg * d <= budget) {
    deg *= d;
    ++n;
  }
  return n;
}

}  // namespace

std::uint64_t sweep_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Rational random_with_valuation(Rng& rng, Prime p, long valuation, bool allow_fraction) {
  long unit = 0;
  do {
    unit = int_in(rng, 1, 9);
  } while (unit % static_cast<long>(p.value()) == 0);
  if (chance(rng, 30)) unit = -unit;
  Rational q(unit);
  if (allow_fraction && chance(rng, 25)) {
    long den = 0;
    do {
      den = int_in(rng, 2, 7);
    } while (den % static_cast<long>(p.value()) == 0);
    q /= den;
  }
  return q * prime_power(p, valuation);
}

RationalPoly random_poly(Rng& rng, Prime p, const std::vector<std::optional<long>>& vals, bool allow_fraction) {
  std::vector<Rational> coeffs;
  coeffs.reserve(vals.size());
  for (const auto& v : vals) coeffs.push_back(v ? random_with_valuation(rng, p, *v, allow_fraction) : Rational(0));
  return RationalPoly(std::move(coeffs));
}

RandomInstance random_satisfied_instance(Rng& rng, TheoremId theorem, Prime p, std::uint64_t degree_budget) {
  for (;;) {
    RandomInstance inst;
    inst.theorem = theorem;
    inst.p = p.value();
    const bool fractions = chance(rng, 20);

    if (theorem == TheoremId::Iterate) {
      const long d = int_in(rng, 2, 5);
      std::vector<std::optional<long>> vals(static_cast<std::size_t>(d + 1));
      vals[static_cast<std::size_t>(d)] = 0;
      for (long i = 0; i < d; ++i) {
        if (i > 0 && chance(rng, 30)) continue;
        vals[static_cast<std::size_t>(i)] = int_in(rng, 1, 4);
      }
      inst.f = random_poly(rng, p, vals, fractions);
      inst.g = inst.f;
      if (!check_iterate(inst.f, p, 1).satisfied()) continue;
      inst.max_n = budget_depth(1, static_cast<std::uint64_t>(d), degree_budget);
      if (inst.max_n < 1) continue;
      return inst;
    }

    const long e = int_in(rng, 1, 4);
    const long d = int_in(rng, 1, 4);
    std::vector<std::optional<long>> gv(static_cast<std::size_t>(e + 1));
    if (theorem == TheoremId::Composition) {
      const long shift = chance(rng, 25) ? int_in(rng, -1, 1) : 0;
      gv[static_cast<std::size_t>(e)] = shift;
      for (long i = 0; i < e; ++i) {
        if (i > 0 && chance(rng, 25)) continue;
        gv[static_cast<std::size_t>(i)] = shift + int_in(rng, 1, i == 0 ? 5 : 3);
      }
    } else {
      for (long i = 0; i <= e; ++i) {
        if (i > 0 && i < e && chance(rng, 25)) continue;
        gv[static_cast<std::size_t>(i)] = int_in(rng, -2, 3);
      }
    }
    inst.g = random_poly(rng, p, gv, fractions);
    const NewtonPolygon np_g = newton_polygon(inst.g, p);

    std::vector<std::optional<long>> fv(static_cast<std::size_t>(d + 1));
    fv[static_cast<std::size_t>(d)] = 0;
    if (theorem == TheoremId::Composition) {
      const Slope lambda1 = np_g.edges().front().slope;
      for (long i = 0; i < d; ++i) {
        if (chance(rng, i == 0 ? 10 : 25)) continue;
        fv[static_cast<std::size_t>(i)] = std::max(0L, ceil_mul(lambda1, d - i)) + int_in(rng, 0, 2);
      }
    } else {
      std::int64_t max_floor = 0;
      for (const Edge& edge : np_g.edges()) max_floor = std::max(max_floor, edge.slope.abs().floor());
      const long u = max_floor + 1;
      std::vector<long> betas;
      for (long b = 1; b <= d; ++b) {
        if (std::gcd(b, u) == 1) betas.push_back(b);
      }
      if (betas.empty()) continue;
      const long beta = betas[static_cast<std::size_t>(int_in(rng, 0, static_cast<long>(betas.size()) - 1))];
      for (long i = 0; i < d; ++i) {
        if (chance(rng, i == 0 ? 10 : 25)) continue;
        fv[static_cast<std::size_t>(i)] = (u * (d - i) + beta - 1) / beta + int_in(rng, 0, 1);
      }
    }
    inst.f = random_poly(rng, p, fv, fractions);

    const TheoremCertificate cert = theorem == TheoremId::Composition ? check_composition(inst.g, inst.f, p)
                                                                     : check_negative_slope_composition(inst.g, inst.f, p);
    if (!cert.satisfied()) continue;
    inst.max_n = budget_depth(static_cast<std::uint64_t>(e), static_cast<std::uint64_t>(d), degree_budget);
    if (inst.max_n < 1) continue;
    return inst;
  }
}

RandomInstance random_boundary_instance(Rng& rng, Prime p) {
  RandomInstance inst;
  inst.p = p.value();
  const long e = int_in(rng, 2, 4);
  const long d = int_in(rng, 2, 3);
  std::vector<std::optional<long>> gv(static_cast<std::size_t>(e + 1));
  gv[static_cast<std::size_t>(e)] = 0;
  gv[0] = 1;
  for (long i = 1; i < e; ++i) {
    if (chance(rng, 30)) continue;
    gv[static_cast<std::size_t>(i)] = int_in(rng, 1, 3);
  }
  // Place vp(b_0) next to lambda_1 (d + e - 1), measured on a provisional g.
  const Slope lambda1 = newton_polygon(random_poly(rng, p, gv), p).edges().front().slope;
  const long target = static_cast<long>((static_cast<__int128>(lambda1.num()) * (d + e - 1)) / lambda1.den());
  gv[0] = std::max(1L, target + int_in(rng, -1, 1));
  inst.g = random_poly(rng, p, gv);

  const Slope lambda1_g = newton_polygon(inst.g, p).edges().front().slope;
  std::vector<std::optional<long>> fv(static_cast<std::size_t>(d + 1));
  fv[static_cast<std::size_t>(d)] = 0;
  for (long i = 0; i < d; ++i) {
    if (i > 0 && chance(rng, 25)) continue;
    fv[static_cast<std::size_t>(i)] = std::max(i == 0 ? 1L : 0L, ceil_mul(lambda1_g, d - i) + int_in(rng, -1, 1));
  }
  inst.f = random_poly(rng, p, fv);
  inst.max_n = 1;
  return inst;
}

}  // namespace newtonpoly
