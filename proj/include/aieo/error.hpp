#ifndef AIEO_ERROR_HPP
#define AIEO_ERROR_HPP

#include <stdexcept>
#include <string>

namespace aieo {

enum class ErrorCode {
  Parse,
  Arity,
  TypeMismatch,
  UnboundVariable,
  NotFirstOrder,
  NormalizationFuel,
  EigenvariableViolation,
  RuleMismatch,
  BudgetExceeded,
  HypothesisNotMet,
  UnrecognizedPattern,
  UnknownWord,
  InvalidModel,
  InvalidArgument,
};

const char* error_code_name(ErrorCode code);

// Every failure raised by the library carries one of the codes above; the C
// API maps them one-to-one onto aieo_status values.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace aieo

#endif  // AIEO_ERROR_HPP
