#include "aieo/error.hpp"

namespace aieo {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::Parse: return "ParseError";
    case ErrorCode::Arity: return "ArityError";
    case ErrorCode::TypeMismatch: return "TypeMismatch";
    case ErrorCode::UnboundVariable: return "UnboundVariable";
    case ErrorCode::NotFirstOrder: return "NotFirstOrder";
    case ErrorCode::NormalizationFuel: return "NormalizationFuel";
    case ErrorCode::EigenvariableViolation: return "EigenvariableViolation";
    case ErrorCode::RuleMismatch: return "RuleMismatch";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::HypothesisNotMet: return "HypothesisNotMet";
    case ErrorCode::UnrecognizedPattern: return "UnrecognizedPattern";
    case ErrorCode::UnknownWord: return "UnknownWord";
    case ErrorCode::InvalidModel: return "InvalidModel";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace aieo
