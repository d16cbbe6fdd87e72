#include "newtonpoly/ore.hpp"

#include <algorithm>

namespace newtonpoly {

namespace {

Valuation digit_valuation(const RationalPoly& digit, Prime p) {
  Valuation best = Valuation::infinity();
  for (const Rational& c : digit.coefficients()) best = std::min(best, vp(c, p));
  return best;
}

void require_integral(const RationalPoly& f, Prime p) {
  for (const Rational& c : f.coefficients()) {
    if (c != 0 && vp(c, p) < Valuation(0)) {
      throw Error(ErrorCode::NonIntegralCoefficients, render(f) + " has a coefficient with negative valuation");
    }
  }
}

// Residual polynomials from the principal part digits[0..top] of a
// phi-expansion: digit j sits at abscissa top - j.
std::vector<ResidualDatum> residuals_from_digits(const std::vector<RationalPoly>& digits, std::size_t top,
                                                 const FieldRef& field, Prime p) {
  std::vector<LatticePoint> points;
  std::vector<Valuation> nu(top + 1);
  for (std::size_t j = 0; j <= top; ++j) {
    nu[j] = j < digits.size() ? digit_valuation(digits[j], p) : Valuation::infinity();
    if (nu[j].is_finite()) points.push_back({static_cast<std::int64_t>(top - j), nu[j].value()});
  }
  const NewtonPolygon np = NewtonPolygon::lower_hull(std::move(points));

  std::vector<ResidualDatum> out;
  for (std::size_t idx = 0; idx < np.edges().size(); ++idx) {
    const Edge& edge = np.edges()[idx];
    const LatticePoint start = np.vertices()[idx];
    ResidualDatum datum;
    datum.edge_index = idx;
    datum.slope = edge.slope;
    const std::int64_t e = edge.slope.den();
    const std::int64_t l = edge.slope.num();
    datum.t = edge.length / e;

    std::vector<FpPoly> coeffs(static_cast<std::size_t>(datum.t + 1), field->zero());
    for (std::int64_t jj = 0; jj <= datum.t; ++jj) {
      const std::size_t j = top - static_cast<std::size_t>(start.x + e * jj);
      const std::int64_t height = start.y + l * jj;
      if (nu[j].is_infinite() || nu[j].value() > height) continue;
      const RationalPoly scaled = prime_power(p, -height) * digits[j];
      coeffs[static_cast<std::size_t>(datum.t - jj)] = field->reduce(FpPoly::from_rational(scaled, p));
    }
    datum.residual_poly = FqPoly(field, std::move(coeffs)).monic();
    datum.squarefree = is_squarefree(datum.residual_poly);
    std::vector<unsigned> distinct;
    for (const auto& [factor_poly, multiplicity] : factor(datum.residual_poly)) {
      const auto deg = static_cast<unsigned>(factor_poly.degree());
      distinct.push_back(deg);
      for (unsigned k = 0; k < multiplicity; ++k) datum.factor_degrees.push_back(deg);
    }
    std::sort(distinct.begin(), distinct.end());
    for (unsigned deg : distinct) {
      if (!datum.degree_profile.entries.empty() && datum.degree_profile.entries.back().first == deg) {
        ++datum.degree_profile.entries.back().second;
      } else {
        datum.degree_profile.entries.emplace_back(deg, 1);
      }
    }
    out.push_back(std::move(datum));
  }
  return out;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t m) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t q = 2; q * q <= m; ++q) {
    if (m % q) continue;
    out.push_back(q);
    while (m % q == 0) m /= q;
  }
  if (m > 1) out.push_back(m);
  return out;
}

}  // namespace

std::vector<ResidualDatum> residual_data(const RationalPoly& f, const RationalPoly& phi, Prime p) {
  require_integral(f, p);
  phi_newton_polygon(f, phi, p);  // validates phi and the shape of f mod p
  const FieldRef field = FiniteField::extension(FpPoly::from_rational(phi, p));
  const PhiExpansion expansion = phi_expand(f, phi);
  return residuals_from_digits(expansion.digits, expansion.digits.size() - 1, field, p);
}

std::int64_t SplittingShape::degree_sum() const {
  std::int64_t total = 0;
  for (const SplittingEntry& e : entries) total += e.ramification * e.residual_degree * e.count;
  return total;
}

std::string SplittingShape::notation() const {
  std::string out = std::to_string(prime) + "·Z_K = ";
  if (!p_regular) return out + "(not p-regular)";
  for (std::size_t i = 0; i < primes.size(); ++i) {
    if (i) out += " · ";
    out += "p" + std::to_string(i + 1);
    if (primes[i].e > 1) out += "^" + std::to_string(primes[i].e);
  }
  return out;
}

SplittingShape analyze_splitting(const RationalPoly& f, Prime p) {
  if (!f.is_monic() || f.degree() < 1) throw Error(ErrorCode::NonMonicBase, render(f) + " must be monic and nonconstant");
  require_integral(f, p);
  SplittingShape shape;
  shape.prime = p.value();
  shape.p_regular = true;

  const FieldRef base = FiniteField::prime_field(p.value());
  const FqPoly fbar = FqPoly::from_fp(base, FpPoly::from_rational(f, p));
  const auto factors = factor(fbar);
  long total = 0;
  for (const auto& [phi_bar, exponent] : factors) total += phi_bar.degree() * static_cast<long>(exponent);
  if (total != f.degree()) {
    throw Error(ErrorCode::ReducibleModPDecompositionFailure, "factorisation of f mod p does not reassemble");
  }

  for (const auto& [phi_bar, exponent] : factors) {
    std::vector<std::uint64_t> lifted;
    for (const FpPoly& c : phi_bar.coefficients()) lifted.push_back(c.coefficient(0));
    std::vector<Rational> coeffs;
    for (std::uint64_t c : lifted) coeffs.emplace_back(static_cast<unsigned long>(c));
    const RationalPoly phi(std::move(coeffs));
    shape.factors_mod_p.emplace_back(phi, exponent);
    const std::int64_t deg_phi = phi.degree();

    if (exponent == 1) {
      shape.primes.push_back({1, deg_phi});
      shape.notes.push_back(render(phi) + " divides f mod p exactly once: unramified prime of degree " +
                            std::to_string(deg_phi));
      continue;
    }
    const PhiExpansion expansion = phi_expand(f, phi);
    if (expansion.digits.front().is_zero()) throw Error(ErrorCode::PhiDividesF, render(phi) + " divides " + render(f));
    for (std::size_t j = 0; j < exponent; ++j) {
      if (digit_valuation(expansion.digits[j], p) <= Valuation(0)) {
        throw Error(ErrorCode::ReducibleModPDecompositionFailure, "phi-adic digits disagree with f mod p");
      }
    }
    if (expansion.digits.size() <= exponent || digit_valuation(expansion.digits[exponent], p) != Valuation(0)) {
      throw Error(ErrorCode::ReducibleModPDecompositionFailure, "phi-adic digits disagree with f mod p");
    }
    const FieldRef field = FiniteField::extension(FpPoly::from_rational(phi, p));
    for (const ResidualDatum& datum : residuals_from_digits(expansion.digits, exponent, field, p)) {
      if (!datum.squarefree) shape.p_regular = false;
      for (const auto& [h, count] : datum.degree_profile.entries) {
        for (unsigned k = 0; k < count; ++k) {
          shape.primes.push_back({datum.slope.den(), deg_phi * static_cast<std::int64_t>(h)});
        }
      }
    }
  }

  if (!shape.p_regular) {
    shape.primes.clear();
    shape.notes.push_back("some residual polynomial has a repeated factor; shape withheld");
    return shape;
  }
  for (const PrimeIdealShape& pr : shape.primes) {
    auto it = std::find_if(shape.entries.begin(), shape.entries.end(), [&](const SplittingEntry& e) {
      return e.ramification == pr.e && e.residual_degree == pr.f;
    });
    if (it == shape.entries.end()) {
      shape.entries.push_back({pr.e, pr.f, 1});
    } else {
      ++it->count;
    }
  }
  if (shape.degree_sum() != f.degree()) {
    throw Error(ErrorCode::ReducibleModPDecompositionFailure,
                "sum of e*f is " + std::to_string(shape.degree_sum()) + ", not deg f");
  }
  return shape;
}

bool is_p_regular(const RationalPoly& f, Prime p) { return analyze_splitting(f, p).p_regular; }

SplittingShape splitting_shape(const RationalPoly& f, Prime p) {
  SplittingShape shape = analyze_splitting(f, p);
  if (!shape.p_regular) throw Error(ErrorCode::NotPRegular, render(f) + " is not " + std::to_string(p.value()) + "-regular");
  return shape;
}

MonogenityVerdict common_index_divisor(const RationalPoly& f, Prime p) {
  const SplittingShape shape = splitting_shape(f, p);
  MonogenityVerdict out;
  out.prime = p.value();
  for (const PrimeIdealShape& pr : shape.primes) ++out.p_counts[pr.f];
  for (const auto& [h, count] : out.p_counts) {
    out.n_counts[h] = count_monic_irreducibles(p.value(), static_cast<unsigned>(h));
    if (!out.witness_h && Integer(static_cast<long>(count)) > out.n_counts[h]) out.witness_h = h;
  }
  out.common_index_divisor = out.witness_h.has_value();
  return out;
}

// ---------------------------------------------------------------- Schur

SchurSpec SchurSpec::make(std::vector<Integer> b_coeffs, Prime p) {
  if (b_coeffs.size() < 2) throw Error(ErrorCode::InvalidArgument, "Schur polynomial needs degree m >= 1");
  if (abs(b_coeffs.front()) != 1 || abs(b_coeffs.back()) != 1) {
    throw Error(ErrorCode::UnitCoefficientViolation, "|b_0| and |b_m| must both be 1");
  }
  SchurSpec spec;
  spec.m = b_coeffs.size() - 1;
  spec.b_coeffs = std::move(b_coeffs);
  spec.p = p.value();
  std::uint64_t rest = spec.m;
  for (std::uint64_t pos = 0; rest > 0; ++pos, rest /= p.value()) {
    if (rest % p.value()) spec.base_p_digits.emplace_back(rest % p.value(), pos);
  }
  return spec;
}

SchurSpec SchurSpec::exponential(std::uint64_t m, Prime p) {
  return make(std::vector<Integer>(m + 1, Integer(1)), p);
}

RationalPoly schur_polynomial(const SchurSpec& spec) {
  std::vector<Rational> coeffs;
  Integer factorial = 1;
  for (std::size_t i = 0; i < spec.b_coeffs.size(); ++i) {
    if (i > 0) factorial *= static_cast<unsigned long>(i);
    Rational c(spec.b_coeffs[i], factorial);
    c.canonicalize();
    coeffs.push_back(c);
  }
  return RationalPoly(std::move(coeffs));
}

RationalPoly truncated_exponential(std::uint64_t m) {
  std::vector<Rational> coeffs;
  Integer factorial = 1;
  for (std::uint64_t i = 0; i <= m; ++i) {
    if (i > 0) factorial *= static_cast<unsigned long>(i);
    coeffs.emplace_back(Integer(1), factorial);
    coeffs.back().canonicalize();
  }
  return RationalPoly(std::move(coeffs));
}

NewtonPolygon schur_polygon(const SchurSpec& spec) {
  const Prime p(spec.p);
  if (spec.m % spec.p != 0) {
    throw Error(ErrorCode::PrimeDoesNotDivideM, std::to_string(spec.p) + " does not divide " + std::to_string(spec.m));
  }
  const Integer m(static_cast<unsigned long>(spec.m));
  for (std::uint64_t i = 1; i < spec.m; ++i) {
    if (gcd(spec.b_coeffs[i], m) != 1) {
      throw Error(ErrorCode::GcdConditionFailed, "gcd(b_" + std::to_string(i) + ", m) != 1");
    }
  }
  std::vector<LatticePoint> vertices{{0, -vp_factorial(spec.m, p)}};
  std::uint64_t z = 0;
  std::uint64_t place = 1;
  std::uint64_t pos = 0;
  for (const auto& [digit, power] : spec.base_p_digits) {
    for (; pos < power; ++pos) place *= spec.p;
    z += digit * place;
    vertices.push_back({static_cast<std::int64_t>(z), -vp_factorial(spec.m - z, p)});
  }
  NewtonPolygon np = NewtonPolygon::from_vertices(std::move(vertices));
  np.prime = spec.p;
  return np;
}

TheoremCertificate schur_dynamical_irreducibility(const RationalPoly& f, const SchurSpec& spec, std::uint64_t n) {
  if (f.is_constant()) throw Error(ErrorCode::ConstantPolynomial, "f must be nonconstant");
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "iterate depth must be positive");
  TheoremCertificate cert;
  cert.theorem = TheoremId::SchurIrreducibility;
  cert.parameters.n = n;
  const std::int64_t d = f.degree();
  const std::vector<std::uint64_t> primes = prime_divisors(spec.m);
  if (primes.empty() || spec.m % spec.p != 0) {
    cert.violations.push_back({"PrimeDoesNotDivideM", std::to_string(spec.p) + " does not divide m = " +
                                                          std::to_string(spec.m)});
  }
  for (std::uint64_t q : primes) {
    const Prime prime(q);
    if (vp(f.leading(), prime) != Valuation(0)) {
      cert.violations.push_back({"LeadingCoefficientNotUnit", "vp_" + std::to_string(q) + "(a_d) != 0"});
    }
    for (std::int64_t i = 0; i < d; ++i) {
      const Valuation v = vp(f.coefficient(static_cast<std::size_t>(i)), prime);
      if (v > Valuation(0)) continue;
      cert.violations.push_back({"NotXPowerModP", "coefficient of x^" + std::to_string(i) + " is not divisible by " +
                                                      std::to_string(q)});
      break;
    }
  }
  // gcd(d, m!) = 1 iff d has no prime factor <= m.
  for (std::int64_t q = 2; q <= static_cast<std::int64_t>(spec.m) && q <= d; ++q) {
    if (d % q == 0) {
      cert.violations.push_back({"DegreeNotCoprimeToMFactorial", "gcd(" + std::to_string(d) + ", " +
                                                                     std::to_string(spec.m) + "!) > 1"});
      break;
    }
  }
  const Integer m(static_cast<unsigned long>(spec.m));
  for (std::uint64_t i = 1; i < spec.m; ++i) {
    if (gcd(spec.b_coeffs[i], m) != 1) {
      cert.violations.push_back({"GcdConditionFailed", "gcd(b_" + std::to_string(i) + ", m) != 1"});
      break;
    }
  }
  if (cert.violations.empty()) {
    std::uint64_t scale = 1;
    for (std::uint64_t k = 0; k < n; ++k) scale *= static_cast<std::uint64_t>(d);
    NewtonPolygon np = stretch_polygon(schur_polygon(spec), scale);
    FactorConstraints fc;
    fc.max_factor_count = 1;
    fc.min_factor_degree = static_cast<std::int64_t>(scale * spec.m);
    fc.admissible_degree_summands = {fc.min_factor_degree};
    for (const Edge& e : np.edges()) fc.per_edge_degree_divisor.push_back(e.slope.den());
    cert.predicted_polygon = std::move(np);
    cert.factor_bound = fc;
    cert.notes.push_back("every irreducible factor of G_m o f^n has degree d^n * m, so it is irreducible");
  }
  cert.verdict = cert.violations.empty() ? Verdict::Satisfied : Verdict::Violated;
  return cert;
}

}  // namespace newtonpoly
