#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <utility>
#include <vector>

#include "newtonpoly/arith.hpp"
#include "newtonpoly/poly.hpp"

namespace newtonpoly {

/// Largest prime accepted for word-sized modular arithmetic.
inline constexpr std::uint64_t kMaxFieldPrime = (std::uint64_t{1} << 31) - 1;

/// Polynomial over F_p with coefficients in [0, p), lowest degree first.
class FpPoly {
 public:
  FpPoly() = default;
  explicit FpPoly(std::uint64_t p, std::vector<std::uint64_t> coefficients = {});

  /// Reduce a p-integral rational polynomial. Throws
  /// Error(NonIntegralCoefficients) or Error(PrimeTooLarge).
  static FpPoly from_rational(const RationalPoly& f, Prime p);
  static FpPoly constant(std::uint64_t p, std::uint64_t c) { return FpPoly(p, {c}); }
  static FpPoly x(std::uint64_t p) { return FpPoly(p, {0, 1}); }

  std::uint64_t modulus() const noexcept { return p_; }
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_one() const noexcept { return coeffs_.size() == 1 && coeffs_[0] == 1; }
  std::uint64_t coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : 0; }
  std::uint64_t leading() const { return coeffs_.empty() ? 0 : coeffs_.back(); }
  std::span<const std::uint64_t> coefficients() const noexcept { return coeffs_; }

  FpPoly monic() const;
  FpPoly derivative() const;
  FpPoly scaled(std::uint64_t c) const;

  friend FpPoly operator+(const FpPoly& a, const FpPoly& b);
  friend FpPoly operator-(const FpPoly& a, const FpPoly& b);
  friend FpPoly operator*(const FpPoly& a, const FpPoly& b);
  friend bool operator==(const FpPoly& a, const FpPoly& b) { return a.p_ == b.p_ && a.coeffs_ == b.coeffs_; }
  friend bool operator<(const FpPoly& a, const FpPoly& b);

  /// Throws Error(InvalidArgument) on division by zero.
  std::pair<FpPoly, FpPoly> divmod(const FpPoly& divisor) const;
  FpPoly operator%(const FpPoly& divisor) const { return divmod(divisor).second; }

 private:
  void trim();

  std::uint64_t p_ = 2;
  std::vector<std::uint64_t> coeffs_;
};

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p);
/// Monic gcd over F_p (zero only if both inputs are zero).
FpPoly gcd(const FpPoly& a, const FpPoly& b);
bool is_irreducible(const FpPoly& a);

/// F_q = F_p[t]/(modulus) with modulus monic irreducible; q = p^k.
class FiniteField {
 public:
  /// Throws Error(PhiNotIrreducibleModP) if modulus is not irreducible.
  explicit FiniteField(const FpPoly& modulus);
  static std::shared_ptr<const FiniteField> prime_field(std::uint64_t p);
  static std::shared_ptr<const FiniteField> extension(const FpPoly& modulus);

  std::uint64_t characteristic() const noexcept { return modulus_.modulus(); }
  long degree() const noexcept { return modulus_.degree(); }
  const FpPoly& modulus() const noexcept { return modulus_; }
  Integer order() const;

  FpPoly zero() const { return FpPoly(characteristic()); }
  FpPoly one() const { return FpPoly::constant(characteristic(), 1); }
  FpPoly element(std::uint64_t c) const { return FpPoly::constant(characteristic(), c % characteristic()); }
  FpPoly reduce(const FpPoly& a) const { return a % modulus_; }

  FpPoly add(const FpPoly& a, const FpPoly& b) const { return a + b; }
  FpPoly sub(const FpPoly& a, const FpPoly& b) const { return a - b; }
  FpPoly mul(const FpPoly& a, const FpPoly& b) const { return (a * b) % modulus_; }
  /// Throws Error(InvalidArgument) for zero.
  FpPoly inv(const FpPoly& a) const;
  FpPoly pow(FpPoly a, Integer e) const;
  /// Inverse of the Frobenius map x -> x^p.
  FpPoly pth_root(const FpPoly& a) const;

  friend bool operator==(const FiniteField& a, const FiniteField& b) { return a.modulus_ == b.modulus_; }

 private:
  struct Unchecked {};
  FiniteField(const FpPoly& modulus, Unchecked) : modulus_(modulus) {}

  FpPoly modulus_;
};

using FieldRef = std::shared_ptr<const FiniteField>;

/// Polynomial over F_q in the variable Y. Each coefficient is the reduced
/// representative in F_p[t]/(modulus).
class FqPoly {
 public:
  FqPoly() = default;
  explicit FqPoly(FieldRef field, std::vector<FpPoly> coefficients = {});
  static FqPoly from_fp(FieldRef field, const FpPoly& a);
  static FqPoly monomial(FieldRef field, const FpPoly& c, std::size_t power);

  const FieldRef& field() const noexcept { return field_; }
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_constant() const noexcept { return coeffs_.size() <= 1; }
  const FpPoly& coefficient(std::size_t i) const;
  const FpPoly& leading() const;
  std::span<const FpPoly> coefficients() const noexcept { return coeffs_; }

  FqPoly monic() const;
  FqPoly derivative() const;
  FqPoly scaled(const FpPoly& c) const;

  friend FqPoly operator+(const FqPoly& a, const FqPoly& b);
  friend FqPoly operator-(const FqPoly& a, const FqPoly& b);
  friend FqPoly operator*(const FqPoly& a, const FqPoly& b);
  friend bool operator==(const FqPoly& a, const FqPoly& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator<(const FqPoly& a, const FqPoly& b);

  std::pair<FqPoly, FqPoly> divmod(const FqPoly& divisor) const;
  FqPoly operator%(const FqPoly& divisor) const { return divmod(divisor).second; }
  FqPoly operator/(const FqPoly& divisor) const { return divmod(divisor).first; }

 private:
  void trim();

  FieldRef field_;
  std::vector<FpPoly> coeffs_;
};

/// Monic gcd by Euclid. Throws Error(InvalidArgument) if both are zero.
FqPoly gcd_fq(const FqPoly& a, const FqPoly& b);
/// gcd(a, a') = 1; a' = 0 with deg a >= 1 counts as not squarefree.
bool is_squarefree(const FqPoly& a);
/// base^e mod m by square-and-multiply.
FqPoly powmod(const FqPoly& base, const Integer& e, const FqPoly& m);
/// Y^(q^h) mod m by h applications of the q-power map.
FqPoly frobenius_power(const FqPoly& m, unsigned h);

/// (factor, multiplicity) with pairwise coprime squarefree monic factors.
std::vector<std::pair<FqPoly, unsigned>> squarefree_decomposition(const FqPoly& a);

struct DegreeProfile {
  /// (degree h, number of irreducible factors of degree h), increasing h.
  std::vector<std::pair<unsigned, unsigned>> entries;

  unsigned total_degree() const;
  unsigned factor_count() const;
  friend bool operator==(const DegreeProfile&, const DegreeProfile&) = default;
};

/// Throws Error(NotSquarefree).
DegreeProfile distinct_degree_profile(const FqPoly& a);
/// Products of all irreducible factors of each degree. Requires squarefree.
std::vector<std::pair<unsigned, FqPoly>> distinct_degree_factorization(const FqPoly& a);
/// Split a squarefree product of degree-h irreducibles. Randomised with a
/// fixed seed, so the output is deterministic.
std::vector<FqPoly> equal_degree_split(const FqPoly& a, unsigned h);
/// Full factorisation into monic irreducibles with multiplicities, sorted by
/// degree then coefficients.
std::vector<std::pair<FqPoly, unsigned>> factor(const FqPoly& a);

/// (1/h) * sum_{d | h} mu(d) p^(h/d).
Integer count_monic_irreducibles(std::uint64_t p, unsigned h);

}  // namespace newtonpoly
