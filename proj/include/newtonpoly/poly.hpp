#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "newtonpoly/arith.hpp"

namespace newtonpoly {

/// Default bound on the number of coefficients produced by iteration and
/// composition.
inline constexpr std::uint64_t kDefaultDegreeCap = 100000;

/// Dense univariate polynomial over Q. coefficient(i) is the coefficient of
/// x^i; the leading coefficient is nonzero unless the polynomial is zero.
class RationalPoly {
 public:
  RationalPoly() = default;
  explicit RationalPoly(std::vector<Rational> coefficients);
  RationalPoly(std::initializer_list<long> coefficients);

  static RationalPoly constant(const Rational& c);
  static RationalPoly x();
  static RationalPoly monomial(const Rational& c, std::size_t power);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_constant() const noexcept { return coeffs_.size() <= 1; }
  bool is_monic() const { return !is_zero() && coeffs_.back() == 1; }

  /// Zero beyond the degree.
  const Rational& coefficient(std::size_t i) const;
  const Rational& leading() const;
  const Rational& constant_term() const;
  std::span<const Rational> coefficients() const noexcept { return coeffs_; }

  Rational eval(const Rational& at) const;

  /// Largest k such that x^k divides the polynomial (0 for the zero poly).
  std::size_t x_adic_order() const;
  /// f / x^k with k = x_adic_order().
  RationalPoly strip_x_power() const;

  RationalPoly operator-() const;
  friend RationalPoly operator+(const RationalPoly& a, const RationalPoly& b);
  friend RationalPoly operator-(const RationalPoly& a, const RationalPoly& b);
  friend RationalPoly operator*(const RationalPoly& a, const RationalPoly& b);
  friend RationalPoly operator*(const Rational& c, const RationalPoly& a);
  friend bool operator==(const RationalPoly& a, const RationalPoly& b) { return a.coeffs_ == b.coeffs_; }

  /// Euclidean division by a monic divisor. Throws Error(NonMonicBase).
  std::pair<RationalPoly, RationalPoly> divmod_monic(const RationalPoly& divisor) const;

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

/// f = sum_i digits[i] * base^i with deg digits[i] < deg base.
struct PhiExpansion {
  RationalPoly base;
  std::vector<RationalPoly> digits;

  RationalPoly reassemble() const;
};

/// g(f(x)), computed by Horner accumulation over cleared denominators.
RationalPoly compose(const RationalPoly& g, const RationalPoly& f);

/// Degree of g o f^n, saturating at UINT64_MAX.
std::uint64_t projected_degree(std::uint64_t outer_degree, std::uint64_t inner_degree, std::uint64_t n);

/// f^n with f^0 = x. Throws DegreeCapExceeded when deg(f)^n > cap.
RationalPoly iterate(const RationalPoly& f, std::uint64_t n, std::uint64_t degree_cap = kDefaultDegreeCap);

/// g o f^n, built as ((g o f) o f) ... so each step substitutes the small
/// polynomial f. Throws DegreeCapExceeded when deg(g) deg(f)^n > cap.
RationalPoly compose_iterated(const RationalPoly& g, const RationalPoly& f, std::uint64_t n,
                              std::uint64_t degree_cap = kDefaultDegreeCap);

/// Base-phi digits by repeated division. Throws Error(NonMonicBase) unless
/// phi is monic of degree >= 1.
PhiExpansion phi_expand(const RationalPoly& f, const RationalPoly& phi);

/// Polynomial text grammar: signed terms `c`, `c*x`, `c x^k`, `x^k` where c
/// is an integer or a/b, optionally parenthesised. Throws ParseError.
RationalPoly parse_poly(std::string_view text);

/// Canonical text: descending exponents, `^` for powers above one, no `*`,
/// non-integer coefficients parenthesised when followed by x.
std::string render(const RationalPoly& f);

}  // namespace newtonpoly
