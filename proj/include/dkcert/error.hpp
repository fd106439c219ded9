#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dkcert {

enum class ErrorCode {
  ZeroLeadingCoefficient,
  DegreeTooSmall,
  DegreeTooLarge,
  DuplicateRoots,
  DimensionMismatch,
  DistinctCoordinatesViolated,
  NonFiniteValue,
  InvalidExponent,
  DomainViolation,
  NoSignChange,
  ConvergenceFailure,
  CertificateNotSatisfied,
  DegenerateDenominator,
  InvalidOption,
  ParseError,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace dkcert
