#include "circlepoly/error.hpp"

#include <sstream>

namespace circlepoly {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NonFinite: return "NonFinite";
    case ErrorCode::NonzeroConstantTerm: return "NonzeroConstantTerm";
    case ErrorCode::ZeroConstantTerm: return "ZeroConstantTerm";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::DidNotConverge: return "DidNotConverge";
    case ErrorCode::ZeroNearContour: return "ZeroNearContour";
    case ErrorCode::Indeterminate: return "Indeterminate";
    case ErrorCode::OrderTooSmall: return "OrderTooSmall";
    case ErrorCode::NotFoundWithin: return "NotFoundWithin";
    case ErrorCode::PartialSumNotZeroFree: return "PartialSumNotZeroFree";
    case ErrorCode::SeriesUnreliable: return "SeriesUnreliable";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::EvaluationFailure: return "EvaluationFailure";
    case ErrorCode::RootSolverFailed: return "RootSolverFailed";
    case ErrorCode::ZeroDenominator: return "ZeroDenominator";
    case ErrorCode::InsufficientData: return "InsufficientData";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::DenominatorVanishesInDisk: return "DenominatorVanishesInDisk";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(what), code_(code) {}

namespace {

std::string describe_partial_sum_failure(std::size_t n, const std::vector<Complex>& roots) {
  std::ostringstream out;
  out << "partial sum s_" << n << " has zeros in the closed unit disk";
  double min_modulus = -1.0;
  for (const auto& r : roots) {
    if (min_modulus < 0.0 || std::abs(r) < min_modulus) min_modulus = std::abs(r);
  }
  if (min_modulus >= 0.0) out << " (smallest root modulus " << min_modulus << ")";
  out << "; increase N";
  return out.str();
}

}  // namespace

PartialSumNotZeroFree::PartialSumNotZeroFree(std::size_t n, std::vector<Complex> roots)
    : Error(ErrorCode::PartialSumNotZeroFree, describe_partial_sum_failure(n, roots)),
      n_(n),
      roots_(std::move(roots)) {}

SyntaxError::SyntaxError(std::size_t position, const std::string& message)
    : Error(ErrorCode::SyntaxError,
            message + " at position " + std::to_string(position)),
      position_(position) {}

}  // namespace circlepoly
