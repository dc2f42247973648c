#include "z2lab/error.hpp"

namespace z2lab {

std::string_view error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::EmptyGenerators: return "EmptyGenerators";
    case ErrorCode::NotCoprime: return "NotCoprime";
    case ErrorCode::BaseMismatch: return "BaseMismatch";
    case ErrorCode::NotContained: return "NotContained";
    case ErrorCode::ZeroSeries: return "ZeroSeries";
    case ErrorCode::InsufficientPrecision: return "InsufficientPrecision";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::NotAdmissible: return "NotAdmissible";
    case ErrorCode::DvrNotCovered: return "DvrNotCovered";
    case ErrorCode::NonMonomialAlpha: return "NonMonomialAlpha";
    case ErrorCode::EvenShift: return "EvenShift";
    case ErrorCode::NotGorensteinBase: return "NotGorensteinBase";
    case ErrorCode::NotSymmetricBase: return "NotSymmetricBase";
    case ErrorCode::InvalidExtension: return "InvalidExtension";
    case ErrorCode::IdealIsPrincipal: return "IdealIsPrincipal";
    case ErrorCode::NotSocle: return "NotSocle";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::InvalidAlgebra: return "InvalidAlgebra";
    case ErrorCode::ModuleActionInvalid: return "ModuleActionInvalid";
    case ErrorCode::PhiNotSymmetric: return "PhiNotSymmetric";
    case ErrorCode::PhiNotBilinear: return "PhiNotBilinear";
    case ErrorCode::PhiAxiom2Violated: return "PhiAxiom2Violated";
    case ErrorCode::PhiNotInMaxIdeal: return "PhiNotInMaxIdeal";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::InternalTheoremViolation: return "InternalTheoremViolation";
  }
  return "Unknown";
}

bool is_internal(ErrorCode code) noexcept { return code == ErrorCode::InternalTheoremViolation; }

}  // namespace z2lab
