#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace newtonpoly {

enum class ErrorCode {
  NonPrimeModulus,
  PrimeTooLarge,
  DegreeCapExceeded,
  NonMonicBase,
  ParseError,
  ZeroConstantTerm,
  ConstantPolynomial,
  PhiNotIrreducibleModP,
  ResidueNotPhiPower,
  PhiDividesF,
  HypothesesNotSatisfied,
  NotSquarefree,
  NonIntegralCoefficients,
  NotPRegular,
  ReducibleModPDecompositionFailure,
  UnitCoefficientViolation,
  PrimeDoesNotDivideM,
  GcdConditionFailed,
  InvalidArgument,
};

std::string_view error_code_name(ErrorCode code);

/// Base for every error raised by the library. The code is stable and is
/// what the CLI and tests match on; the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t position, std::string expected, const std::string& message)
      : Error(ErrorCode::ParseError,
              message + " at position " + std::to_string(position) + " (expected " + expected + ")"),
        position_(position),
        expected_(std::move(expected)) {}

  std::size_t position() const noexcept { return position_; }
  const std::string& expected() const noexcept { return expected_; }

 private:
  std::size_t position_;
  std::string expected_;
};

/// Raised when a polygon is requested for f with f(0) = 0. `power` is the
/// largest k with x^k | f, so callers can strip it and retry.
class ZeroConstantTermError : public Error {
 public:
  explicit ZeroConstantTermError(std::size_t power)
      : Error(ErrorCode::ZeroConstantTerm,
              "constant term is zero; x^" + std::to_string(power) + " divides the polynomial"),
        power_(power) {}

  std::size_t power() const noexcept { return power_; }

 private:
  std::size_t power_;
};

class DegreeCapExceeded : public Error {
 public:
  DegreeCapExceeded(std::uint64_t projected, std::uint64_t cap)
      : Error(ErrorCode::DegreeCapExceeded,
              "projected degree " + (projected == UINT64_MAX ? std::string("> 2^64") : std::to_string(projected)) +
                  " exceeds cap " + std::to_string(cap)),
        projected_(projected),
        cap_(cap) {}

  /// UINT64_MAX when the projection itself overflowed.
  std::uint64_t projected() const noexcept { return projected_; }
  std::uint64_t cap() const noexcept { return cap_; }

 private:
  std::uint64_t projected_;
  std::uint64_t cap_;
};

}  // namespace newtonpoly
