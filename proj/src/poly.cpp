#include "newtonpoly/poly.hpp"

#include <algorithm>

namespace newtonpoly {

namespace {

const Rational kZero(0);

struct IntegerForm {
  std::vector<Integer> numerators;
  Integer denominator;
};

// p = numerators / denominator with a common positive denominator.
IntegerForm to_integer_form(std::span<const Rational> coeffs) {
  IntegerForm out;
  out.denominator = 1;
  for (const Rational& c : coeffs) {
    mpz_lcm(out.denominator.get_mpz_t(), out.denominator.get_mpz_t(), c.get_den_mpz_t());
  }
  out.numerators.reserve(coeffs.size());
  for (const Rational& c : coeffs) {
    Integer scaled = out.denominator / c.get_den();
    out.numerators.push_back(c.get_num() * scaled);
  }
  return out;
}

// out = a * b where b is typically short; zero coefficients of b are skipped.
std::vector<Integer> multiply_integer(const std::vector<Integer>& a, const std::vector<Integer>& b) {
  std::vector<Integer> out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (b[i] == 0) continue;
    mpz_srcptr bi = b[i].get_mpz_t();
    for (std::size_t k = 0; k < a.size(); ++k) {
      mpz_addmul(out[k + i].get_mpz_t(), a[k].get_mpz_t(), bi);
    }
  }
  return out;
}

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  if (a > UINT64_MAX / b) return UINT64_MAX;
  return a * b;
}

}  // namespace

RationalPoly::RationalPoly(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
  for (Rational& c : coeffs_) c.canonicalize();
  trim();
}

RationalPoly::RationalPoly(std::initializer_list<long> coefficients) {
  coeffs_.reserve(coefficients.size());
  for (long c : coefficients) coeffs_.emplace_back(c);
  trim();
}

RationalPoly RationalPoly::constant(const Rational& c) { return RationalPoly(std::vector<Rational>{c}); }

RationalPoly RationalPoly::x() { return RationalPoly{0, 1}; }

RationalPoly RationalPoly::monomial(const Rational& c, std::size_t power) {
  std::vector<Rational> coeffs(power + 1);
  coeffs[power] = c;
  return RationalPoly(std::move(coeffs));
}

void RationalPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Rational& RationalPoly::coefficient(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : kZero;
}

const Rational& RationalPoly::leading() const { return is_zero() ? kZero : coeffs_.back(); }

const Rational& RationalPoly::constant_term() const { return coefficient(0); }

Rational RationalPoly::eval(const Rational& at) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

std::size_t RationalPoly::x_adic_order() const {
  std::size_t k = 0;
  while (k < coeffs_.size() && coeffs_[k] == 0) ++k;
  return k == coeffs_.size() ? 0 : k;
}

RationalPoly RationalPoly::strip_x_power() const {
  std::size_t k = x_adic_order();
  return RationalPoly(std::vector<Rational>(coeffs_.begin() + static_cast<std::ptrdiff_t>(k), coeffs_.end()));
}

RationalPoly RationalPoly::operator-() const {
  RationalPoly out = *this;
  for (Rational& c : out.coeffs_) c = -c;
  return out;
}

RationalPoly operator+(const RationalPoly& a, const RationalPoly& b) {
  std::vector<Rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coefficient(i) + b.coefficient(i);
  return RationalPoly(std::move(out));
}

RationalPoly operator-(const RationalPoly& a, const RationalPoly& b) { return a + (-b); }

RationalPoly operator*(const RationalPoly& a, const RationalPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return RationalPoly(std::move(out));
}

RationalPoly operator*(const Rational& c, const RationalPoly& a) {
  std::vector<Rational> out(a.coeffs_.begin(), a.coeffs_.end());
  for (Rational& v : out) v *= c;
  return RationalPoly(std::move(out));
}

std::pair<RationalPoly, RationalPoly> RationalPoly::divmod_monic(const RationalPoly& divisor) const {
  if (!divisor.is_monic()) throw Error(ErrorCode::NonMonicBase, "divisor must be monic");
  const long dd = divisor.degree();
  if (degree() < dd) return {RationalPoly{}, *this};
  std::vector<Rational> rem(coeffs_.begin(), coeffs_.end());
  std::vector<Rational> quot(static_cast<std::size_t>(degree() - dd + 1));
  for (long i = degree(); i >= dd; --i) {
    const Rational q = rem[static_cast<std::size_t>(i)];
    if (q == 0) continue;
    quot[static_cast<std::size_t>(i - dd)] = q;
    for (long j = 0; j <= dd; ++j) {
      rem[static_cast<std::size_t>(i - dd + j)] -= q * divisor.coeffs_[static_cast<std::size_t>(j)];
    }
  }
  rem.resize(static_cast<std::size_t>(dd));
  return {RationalPoly(std::move(quot)), RationalPoly(std::move(rem))};
}

RationalPoly PhiExpansion::reassemble() const {
  RationalPoly acc;
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) acc = acc * base + *it;
  return acc;
}

RationalPoly compose(const RationalPoly& g, const RationalPoly& f) {
  if (g.is_constant()) return g;
  if (f.is_constant()) return RationalPoly::constant(g.eval(f.constant_term()));

  const IntegerForm gi = to_integer_form(g.coefficients());
  const IntegerForm fi = to_integer_form(f.coefficients());
  const std::size_t e = static_cast<std::size_t>(g.degree());

  // c^e g(F/c) = sum_j G_j c^(e-j) F^j, accumulated in Horner order.
  std::vector<Integer> den_powers(e + 1);
  den_powers[0] = 1;
  for (std::size_t k = 1; k <= e; ++k) den_powers[k] = den_powers[k - 1] * fi.denominator;

  std::vector<Integer> acc{gi.numerators[e]};
  for (std::size_t j = e; j-- > 0;) {
    acc = multiply_integer(acc, fi.numerators);
    if (gi.numerators[j] != 0) acc[0] += gi.numerators[j] * den_powers[e - j];
  }

  const Integer scale = gi.denominator * den_powers[e];
  std::vector<Rational> out;
  out.reserve(acc.size());
  for (Integer& c : acc) {
    Rational q(c, scale);
    q.canonicalize();
    out.push_back(std::move(q));
  }
  return RationalPoly(std::move(out));
}

std::uint64_t projected_degree(std::uint64_t outer_degree, std::uint64_t inner_degree, std::uint64_t n) {
  std::uint64_t deg = outer_degree;
  for (std::uint64_t i = 0; i < n; ++i) {
    deg = saturating_mul(deg, inner_degree);
    if (deg == UINT64_MAX || deg == 0) break;
  }
  return deg;
}

RationalPoly iterate(const RationalPoly& f, std::uint64_t n, std::uint64_t degree_cap) {
  return compose_iterated(RationalPoly::x(), f, n, degree_cap);
}

RationalPoly compose_iterated(const RationalPoly& g, const RationalPoly& f, std::uint64_t n,
                              std::uint64_t degree_cap) {
  const std::uint64_t outer = g.degree() < 0 ? 0 : static_cast<std::uint64_t>(g.degree());
  const std::uint64_t inner = f.degree() < 0 ? 0 : static_cast<std::uint64_t>(f.degree());
  const std::uint64_t projected = projected_degree(outer, inner, n);
  if (projected > degree_cap) throw DegreeCapExceeded(projected, degree_cap);
  RationalPoly acc = g;
  for (std::uint64_t i = 0; i < n; ++i) acc = compose(acc, f);
  return acc;
}

PhiExpansion phi_expand(const RationalPoly& f, const RationalPoly& phi) {
  if (!phi.is_monic()) throw Error(ErrorCode::NonMonicBase, "phi must be monic");
  if (phi.degree() < 1) throw Error(ErrorCode::NonMonicBase, "phi must have degree at least 1");
  PhiExpansion out{phi, {}};
  RationalPoly rest = f;
  while (!rest.is_zero()) {
    auto [q, r] = rest.divmod_monic(phi);
    out.digits.push_back(std::move(r));
    rest = std::move(q);
  }
  return out;
}

}  // namespace newtonpoly
