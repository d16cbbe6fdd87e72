#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "newtonpoly/ffield.hpp"
#include "newtonpoly/polygon.hpp"
#include "newtonpoly/theorems.hpp"

namespace newtonpoly {

/// Residual polynomial of one edge of a phi-Newton polygon.
struct ResidualDatum {
  std::size_t edge_index = 0;
  Slope slope;           // l / e in lowest terms
  std::int64_t t = 0;    // degree of the residual polynomial; e * t = edge length
  FqPoly residual_poly;  // monic, over F_p[x]/(phi mod p)
  bool squarefree = false;
  /// Irreducible-degree profile of the squarefree part (exact profile when
  /// `squarefree` holds).
  DegreeProfile degree_profile;
  /// Degrees of the monic irreducible factors, with repetition.
  std::vector<unsigned> factor_degrees;
};

/// Residual data of every edge of the phi-Newton polygon of f. Requires f
/// p-integral, phi monic irreducible mod p, f mod p a unit times a power of
/// phi mod p, and phi not dividing f.
std::vector<ResidualDatum> residual_data(const RationalPoly& f, const RationalPoly& phi, Prime p);

/// A prime ideal above p: ramification index e and residual degree f.
struct PrimeIdealShape {
  std::int64_t e = 0;
  std::int64_t f = 0;
  friend bool operator==(const PrimeIdealShape&, const PrimeIdealShape&) = default;
};

struct SplittingEntry {
  std::int64_t ramification = 0;
  std::int64_t residual_degree = 0;
  std::int64_t count = 0;
  friend bool operator==(const SplittingEntry&, const SplittingEntry&) = default;
};

struct SplittingShape {
  std::uint64_t prime = 2;
  bool p_regular = false;
  /// (e, f, count), aggregated in order of first appearance. Empty unless
  /// p_regular.
  std::vector<SplittingEntry> entries;
  /// One element per prime ideal, in factor-then-edge order.
  std::vector<PrimeIdealShape> primes;
  /// Factors phi_i of f mod p (monic lifts) with exponents.
  std::vector<std::pair<RationalPoly, unsigned>> factors_mod_p;
  std::vector<std::string> notes;

  std::int64_t degree_sum() const;
  /// E.g. "2·Z_K = p1^2 · p2".
  std::string notation() const;
};

/// Full analysis without throwing on irregularity. Requires f monic with
/// p-integral coefficients. Throws Error(NonMonicBase),
/// Error(NonIntegralCoefficients), Error(PrimeTooLarge) or
/// Error(ReducibleModPDecompositionFailure).
SplittingShape analyze_splitting(const RationalPoly& f, Prime p);

bool is_p_regular(const RationalPoly& f, Prime p);

/// As analyze_splitting, but throws Error(NotPRegular) when some residual
/// polynomial has a repeated factor.
SplittingShape splitting_shape(const RationalPoly& f, Prime p);

struct MonogenityVerdict {
  std::uint64_t prime = 2;
  std::map<std::int64_t, std::int64_t> p_counts;  // residual degree h -> P_h
  std::map<std::int64_t, Integer> n_counts;       // h -> N_h
  bool common_index_divisor = false;
  std::optional<std::int64_t> witness_h;
};

/// Throws Error(NotPRegular).
MonogenityVerdict common_index_divisor(const RationalPoly& f, Prime p);

// ---------------------------------------------------------------- Schur

struct SchurSpec {
  std::uint64_t m = 0;
  std::vector<Integer> b_coeffs;  // b_0 .. b_m
  std::uint64_t p = 2;
  /// Base-p digits of m as (b_i, m_i) with 0 < b_i < p and m_1 < m_2 < ...
  std::vector<std::pair<std::uint64_t, std::uint64_t>> base_p_digits;

  /// Throws Error(UnitCoefficientViolation) unless |b_0| = |b_m| = 1, and
  /// Error(InvalidArgument) if m = 0.
  static SchurSpec make(std::vector<Integer> b_coeffs, Prime p);
  /// All-ones coefficients (truncated exponential).
  static SchurSpec exponential(std::uint64_t m, Prime p);
};

RationalPoly schur_polynomial(const SchurSpec& spec);
RationalPoly truncated_exponential(std::uint64_t m);

/// Polygon of G_m from the base-p digits of m. Throws
/// Error(PrimeDoesNotDivideM) or Error(GcdConditionFailed).
NewtonPolygon schur_polygon(const SchurSpec& spec);

/// f is dynamically irreducible at G_m. The prediction is NP_p(G_m o f^n).
TheoremCertificate schur_dynamical_irreducibility(const RationalPoly& f, const SchurSpec& spec, std::uint64_t n = 1);

}  // namespace newtonpoly
