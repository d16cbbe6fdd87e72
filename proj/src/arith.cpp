#include "newtonpoly/arith.hpp"

#include <array>
#include <numeric>
#include <ostream>

namespace newtonpoly {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonPrimeModulus: return "NonPrimeModulus";
    case ErrorCode::PrimeTooLarge: return "PrimeTooLarge";
    case ErrorCode::DegreeCapExceeded: return "DegreeCapExceeded";
    case ErrorCode::NonMonicBase: return "NonMonicBase";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ZeroConstantTerm: return "ZeroConstantTerm";
    case ErrorCode::ConstantPolynomial: return "ConstantPolynomial";
    case ErrorCode::PhiNotIrreducibleModP: return "PhiNotIrreducibleModP";
    case ErrorCode::ResidueNotPhiPower: return "ResidueNotPhiPower";
    case ErrorCode::PhiDividesF: return "PhiDividesF";
    case ErrorCode::HypothesesNotSatisfied: return "HypothesesNotSatisfied";
    case ErrorCode::NotSquarefree: return "NotSquarefree";
    case ErrorCode::NonIntegralCoefficients: return "NonIntegralCoefficients";
    case ErrorCode::NotPRegular: return "NotPRegular";
    case ErrorCode::ReducibleModPDecompositionFailure: return "ReducibleModPDecompositionFailure";
    case ErrorCode::UnitCoefficientViolation: return "UnitCoefficientViolation";
    case ErrorCode::PrimeDoesNotDivideM: return "PrimeDoesNotDivideM";
    case ErrorCode::GcdConditionFailed: return "GcdConditionFailed";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  static constexpr std::array<std::uint64_t, 12> kBases = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (std::uint64_t q : kBases) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : kBases) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

Prime::Prime(std::uint64_t value) : value_(value) {
  if (!is_prime(value)) {
    throw Error(ErrorCode::NonPrimeModulus, std::to_string(value) + " is not prime");
  }
}

long Valuation::value() const {
  if (infinite_) throw Error(ErrorCode::InvalidArgument, "valuation is infinite");
  return value_;
}

std::string Valuation::to_string() const { return infinite_ ? "Infinity" : std::to_string(value_); }

std::ostream& operator<<(std::ostream& os, Valuation v) { return os << v.to_string(); }

std::int64_t gcd_i64(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

Slope::Slope(std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error(ErrorCode::InvalidArgument, "slope with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  std::int64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

Rational Slope::to_rational() const {
  Rational r(Integer(static_cast<long>(num_)), Integer(static_cast<long>(den_)));
  r.canonicalize();
  return r;
}

std::int64_t Slope::floor() const {
  std::int64_t q = num_ / den_;
  if (num_ % den_ != 0 && num_ < 0) --q;
  return q;
}

std::string Slope::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::ostream& operator<<(std::ostream& os, const Slope& s) { return os << s.to_string(); }

Valuation vp(const Integer& n, Prime p) {
  if (n == 0) return Valuation::infinity();
  Integer rest;
  Integer prime = p.as_integer();
  return Valuation(static_cast<long>(mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), prime.get_mpz_t())));
}

Valuation vp(const Rational& q, Prime p) {
  if (q == 0) return Valuation::infinity();
  return Valuation(vp(q.get_num(), p).value() - vp(q.get_den(), p).value());
}

Valuation vp(const Rational& q, std::uint64_t p) { return vp(q, Prime(p)); }

long vp_factorial(std::uint64_t m, Prime p) {
  long total = 0;
  std::uint64_t q = m;
  while (q > 0) {
    q /= p.value();
    total += static_cast<long>(q);
  }
  return total;
}

long vp_factorial(std::uint64_t m, std::uint64_t p) { return vp_factorial(m, Prime(p)); }

std::uint64_t reduce_mod_p(const Rational& q, Prime p) {
  if (q == 0) return 0;
  if (vp(q, p).value() < 0) {
    throw Error(ErrorCode::NonIntegralCoefficients, "coefficient " + q.get_str() + " is not p-integral");
  }
  Integer modulus = p.as_integer();
  Integer num = q.get_num() % modulus;
  if (num < 0) num += modulus;
  Integer den = q.get_den() % modulus;
  Integer inv;
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), modulus.get_mpz_t());
  Integer r = (num * inv) % modulus;
  return r.get_ui();
}

Rational prime_power(Prime p, long k) {
  Integer base;
  mpz_ui_pow_ui(base.get_mpz_t(), static_cast<unsigned long>(p.value()), static_cast<unsigned long>(k < 0 ? -k : k));
  if (k >= 0) return Rational(base);
  Rational r(Integer(1), base);
  r.canonicalize();
  return r;
}

}  // namespace newtonpoly
