#include "srd/error.hpp"

namespace srd {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidDesign: return "InvalidDesign";
    case ErrorKind::InvalidResolution: return "InvalidResolution";
    case ErrorKind::NonConstantReplication: return "NonConstantReplication";
    case ErrorKind::DivisibilityViolation: return "DivisibilityViolation";
    case ErrorKind::SearchBudgetExceeded: return "SearchBudgetExceeded";
    case ErrorKind::NotResolvable: return "NotResolvable";
    case ErrorKind::BadAlpha: return "BadAlpha";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NonIntegral: return "NonIntegral";
    case ErrorKind::NotPrimePower: return "NotPrimePower";
    case ErrorKind::ReducibleModulus: return "ReducibleModulus";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::UnsupportedField: return "UnsupportedField";
    case ErrorKind::OddPointCount: return "OddPointCount";
    case ErrorKind::InvalidBaseClass: return "InvalidBaseClass";
    case ErrorKind::UnknownEntry: return "UnknownEntry";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace srd
