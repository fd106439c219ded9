#include "dkcert/error.hpp"

namespace dkcert {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::ZeroLeadingCoefficient: return "ZeroLeadingCoefficient";
    case ErrorCode::DegreeTooSmall: return "DegreeTooSmall";
    case ErrorCode::DegreeTooLarge: return "DegreeTooLarge";
    case ErrorCode::DuplicateRoots: return "DuplicateRoots";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::DistinctCoordinatesViolated: return "DistinctCoordinatesViolated";
    case ErrorCode::NonFiniteValue: return "NonFiniteValue";
    case ErrorCode::InvalidExponent: return "InvalidExponent";
    case ErrorCode::DomainViolation: return "DomainViolation";
    case ErrorCode::NoSignChange: return "NoSignChange";
    case ErrorCode::ConvergenceFailure: return "ConvergenceFailure";
    case ErrorCode::CertificateNotSatisfied: return "CertificateNotSatisfied";
    case ErrorCode::DegenerateDenominator: return "DegenerateDenominator";
    case ErrorCode::InvalidOption: return "InvalidOption";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace dkcert
