#pragma once

#include <stdexcept>
#include <string>

namespace m0n {

// Every failure mode the library can signal.  CLI maps these to exit codes,
// tests match on the code rather than the message text.
enum class ErrorCode {
  SystemMismatch,            // operands live over different generator systems
  VariableMismatch,          // series operands have different variable sets
  MissingImage,              // substitution map lacks a generator/variable
  NotHomogeneous,            // a homogeneous value was required
  NonUnitConstantTerm,       // series inversion needs an invertible constant
  DivisionNotExact,          // exact_divide found a remainder
  NonzeroConstantSubstitution,  // composition argument has a constant term
  NotReversible,             // revert needs a series of the form x + O(x^2)
  UnknownCoefficients,       // request exceeds the reliable data window
  InconsistentSystem,        // a forced specialization has no solution
  InvalidInput,              // malformed user-facing argument
  DenominatorNotCleared,     // expected integral value came out fractional
  SingularBasis,             // basis-change matrix is not invertible
  NonNilpotentRoot,          // bundle root with a non-nilpotent constant term
  CorruptData,               // embedded or cached data fails validation
};

inline const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::SystemMismatch: return "SystemMismatch";
    case ErrorCode::VariableMismatch: return "VariableMismatch";
    case ErrorCode::MissingImage: return "MissingImage";
    case ErrorCode::NotHomogeneous: return "NotHomogeneous";
    case ErrorCode::NonUnitConstantTerm: return "NonUnitConstantTerm";
    case ErrorCode::DivisionNotExact: return "DivisionNotExact";
    case ErrorCode::NonzeroConstantSubstitution: return "NonzeroConstantSubstitution";
    case ErrorCode::NotReversible: return "NotReversible";
    case ErrorCode::UnknownCoefficients: return "UnknownCoefficients";
    case ErrorCode::InconsistentSystem: return "InconsistentSystem";
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::DenominatorNotCleared: return "DenominatorNotCleared";
    case ErrorCode::SingularBasis: return "SingularBasis";
    case ErrorCode::NonNilpotentRoot: return "NonNilpotentRoot";
    case ErrorCode::CorruptData: return "CorruptData";
  }
  return "UnknownError";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
        code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace m0n
