#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace z2lab {

enum class ErrorCode {
  EmptyGenerators,
  NotCoprime,
  BaseMismatch,
  NotContained,
  ZeroSeries,
  InsufficientPrecision,
  ParseError,
  NotAdmissible,
  DvrNotCovered,
  NonMonomialAlpha,
  EvenShift,
  NotGorensteinBase,
  NotSymmetricBase,
  InvalidExtension,
  IdealIsPrincipal,
  NotSocle,
  NotSymmetric,
  InvalidAlgebra,
  ModuleActionInvalid,
  PhiNotSymmetric,
  PhiNotBilinear,
  PhiAxiom2Violated,
  PhiNotInMaxIdeal,
  DimensionMismatch,
  InternalTheoremViolation,
};

std::string_view error_name(ErrorCode code) noexcept;

// Precondition failures map to CLI exit code 2, internal violations to 3.
bool is_internal(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

// Raised when a computation contradicts one of the equivalences the library
// wires in as a runtime assertion.
[[noreturn]] inline void theorem_violation(const std::string& what) {
  throw Error(ErrorCode::InternalTheoremViolation, what);
}

}  // namespace z2lab
