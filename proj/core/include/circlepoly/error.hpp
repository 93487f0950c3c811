#ifndef CIRCLEPOLY_ERROR_HPP
#define CIRCLEPOLY_ERROR_HPP

#include <complex>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace circlepoly {

using Complex = std::complex<double>;

enum class ErrorCode {
  InvalidArgument,
  NonFinite,
  NonzeroConstantTerm,
  ZeroConstantTerm,
  ZeroPolynomial,
  DidNotConverge,
  ZeroNearContour,
  Indeterminate,
  OrderTooSmall,
  NotFoundWithin,
  PartialSumNotZeroFree,
  SeriesUnreliable,
  DomainError,
  EvaluationFailure,
  RootSolverFailed,
  ZeroDenominator,
  InsufficientData,
  SyntaxError,
  DenominatorVanishesInDisk,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Base exception for every failure raised by the library.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Raised by construct() when s_n has zeros in the closed unit disk.
/// Carries the computed zeros of s_n so the caller can see how far inside they are.
class PartialSumNotZeroFree : public Error {
 public:
  PartialSumNotZeroFree(std::size_t n, std::vector<Complex> roots);

  std::size_t n() const noexcept { return n_; }
  const std::vector<Complex>& roots() const noexcept { return roots_; }

 private:
  std::size_t n_;
  std::vector<Complex> roots_;
};

/// Raised by the function-spec parser; position is a 0-based byte offset.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, const std::string& message);

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace circlepoly

#endif  // CIRCLEPOLY_ERROR_HPP
