#pragma once

#include <stdexcept>
#include <string>

namespace cfint {

enum class ErrorKind {
  ZeroDenominator,
  NotExactDivision,
  ReverseUnsupportedDegreeProfile,
  NotExpandable,
  NoTelescoperFound,
  BoundaryNotEvaluable,
  ZeroOperator,
  RecurrenceRefuted,
  SingularLeadingCoefficient,
  ExactOracleUnavailable,
  KernelNotEvaluable,
  QuadratureFailed,
  SyntaxError,
  UnknownVariable,
  DivisionByZeroExpr,
  InvalidInput,
};

const char* to_string(ErrorKind kind);

// Every failure raised by the library carries a kind so callers (the CLI in
// particular) can map it to an exit code or a fallback path.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ZeroDenominator: return "ZeroDenominator";
    case ErrorKind::NotExactDivision: return "NotExactDivision";
    case ErrorKind::ReverseUnsupportedDegreeProfile: return "ReverseUnsupportedDegreeProfile";
    case ErrorKind::NotExpandable: return "NotExpandable";
    case ErrorKind::NoTelescoperFound: return "NoTelescoperFound";
    case ErrorKind::BoundaryNotEvaluable: return "BoundaryNotEvaluable";
    case ErrorKind::ZeroOperator: return "ZeroOperator";
    case ErrorKind::RecurrenceRefuted: return "RecurrenceRefuted";
    case ErrorKind::SingularLeadingCoefficient: return "SingularLeadingCoefficient";
    case ErrorKind::ExactOracleUnavailable: return "ExactOracleUnavailable";
    case ErrorKind::KernelNotEvaluable: return "KernelNotEvaluable";
    case ErrorKind::QuadratureFailed: return "QuadratureFailed";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::UnknownVariable: return "UnknownVariable";
    case ErrorKind::DivisionByZeroExpr: return "DivisionByZeroExpr";
    case ErrorKind::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

}  // namespace cfint
