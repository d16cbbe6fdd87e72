#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

#include "newtonpoly/error.hpp"

namespace newtonpoly {

/// Arbitrary-precision integer and rational. mpq_class values are kept in
/// canonical form (lowest terms, positive denominator, zero is 0/1).
using Integer = mpz_class;
using Rational = mpq_class;

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(std::uint64_t n);

/// A prime number checked on construction.
class Prime {
 public:
  /// Throws Error(NonPrimeModulus) unless `value` is prime.
  explicit Prime(std::uint64_t value);

  std::uint64_t value() const noexcept { return value_; }
  operator std::uint64_t() const noexcept { return value_; }
  Integer as_integer() const { return Integer(static_cast<unsigned long>(value_)); }

  friend bool operator==(Prime a, Prime b) noexcept { return a.value_ == b.value_; }

 private:
  std::uint64_t value_;
};

/// p-adic valuation: a finite (possibly negative) integer or +infinity.
/// Arithmetic is totalized: finite + infinity = infinity, and infinity
/// compares above every finite value.
class Valuation {
 public:
  constexpr Valuation() noexcept = default;  // zero
  constexpr Valuation(long value) noexcept : value_(value) {}  // NOLINT(implicit)

  static constexpr Valuation infinity() noexcept {
    Valuation v;
    v.infinite_ = true;
    return v;
  }

  constexpr bool is_infinite() const noexcept { return infinite_; }
  constexpr bool is_finite() const noexcept { return !infinite_; }

  /// Throws Error(InvalidArgument) for infinity.
  long value() const;

  friend constexpr Valuation operator+(Valuation a, Valuation b) noexcept {
    if (a.infinite_ || b.infinite_) return infinity();
    return Valuation(a.value_ + b.value_);
  }

  friend constexpr bool operator==(Valuation a, Valuation b) noexcept {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
  }

  friend constexpr std::strong_ordering operator<=>(Valuation a, Valuation b) noexcept {
    if (a.infinite_ || b.infinite_) return static_cast<int>(a.infinite_) <=> static_cast<int>(b.infinite_);
    return a.value_ <=> b.value_;
  }

  std::string to_string() const;

 private:
  long value_ = 0;
  bool infinite_ = false;
};

std::ostream& operator<<(std::ostream& os, Valuation v);

/// Exact reduced fraction used for polygon slopes. Comparisons use
/// cross-multiplication in 128-bit integers.
class Slope {
 public:
  Slope() = default;
  /// Throws Error(InvalidArgument) if den == 0. Sign is moved to the numerator.
  Slope(std::int64_t num, std::int64_t den);

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }

  Rational to_rational() const;
  Slope abs() const { return Slope(num_ < 0 ? -num_ : num_, den_); }
  /// Largest integer not exceeding the slope.
  std::int64_t floor() const;

  friend bool operator==(const Slope& a, const Slope& b) noexcept {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Slope& a, const Slope& b) noexcept {
    return static_cast<__int128>(a.num_) * b.den_ <=> static_cast<__int128>(b.num_) * a.den_;
  }

  std::string to_string() const;

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Slope& s);

Valuation vp(const Integer& n, Prime p);
Valuation vp(const Rational& q, Prime p);
/// Convenience overload; validates p.
Valuation vp(const Rational& q, std::uint64_t p);

/// Legendre's formula: exponent of p in m!.
long vp_factorial(std::uint64_t m, Prime p);
long vp_factorial(std::uint64_t m, std::uint64_t p);

/// Reduce a p-integral rational modulo p. Throws Error(NonIntegralCoefficients)
/// if vp(q) < 0.
std::uint64_t reduce_mod_p(const Rational& q, Prime p);

/// Integer power p^k as an exact rational; k may be negative.
Rational prime_power(Prime p, long k);

std::int64_t gcd_i64(std::int64_t a, std::int64_t b);

}  // namespace newtonpoly
