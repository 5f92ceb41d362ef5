#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sgfl {

enum class ErrorKind {
  NotPointed,
  NotMinimal,
  DimensionMismatch,
  NotNumerical,
  MNotInS,
  BudgetExceeded,
  NotInSemigroup,
  MNotAtom,
  ReportMismatch,
  NotEmbDim3,
  MissingBound,
  BadModulus,
  NotIntegerPoint,
  InequalityViolated,
  NoFactorization,
  NonIntegral,
  DifferentFace,
  NotReduced,
  MNotAtomAtPoint,
  Parse,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotPointed: return "NotPointed";
    case ErrorKind::NotMinimal: return "NotMinimal";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotNumerical: return "NotNumerical";
    case ErrorKind::MNotInS: return "MNotInS";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::NotInSemigroup: return "NotInSemigroup";
    case ErrorKind::MNotAtom: return "MNotAtom";
    case ErrorKind::ReportMismatch: return "ReportMismatch";
    case ErrorKind::NotEmbDim3: return "NotEmbDim3";
    case ErrorKind::MissingBound: return "MissingBound";
    case ErrorKind::BadModulus: return "BadModulus";
    case ErrorKind::NotIntegerPoint: return "NotIntegerPoint";
    case ErrorKind::InequalityViolated: return "InequalityViolated";
    case ErrorKind::NoFactorization: return "NoFactorization";
    case ErrorKind::NonIntegral: return "NonIntegral";
    case ErrorKind::DifferentFace: return "DifferentFace";
    case ErrorKind::NotReduced: return "NotReduced";
    case ErrorKind::MNotAtomAtPoint: return "MNotAtomAtPoint";
    case ErrorKind::Parse: return "Parse";
  }
  return "Unknown";
}

/// Every failure raised by the library carries a machine-readable kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace sgfl
