#include "ellsurf/errors.hpp"

namespace ellsurf {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidParams: return "InvalidParams";
    case ErrorCode::RelatorViolation: return "RelatorViolation";
    case ErrorCode::NotSurjective: return "NotSurjective";
    case ErrorCode::NotInSubgroup: return "NotInSubgroup";
    case ErrorCode::LatticeNotInvariant: return "LatticeNotInvariant";
    case ErrorCode::DegenerateLattice: return "DegenerateLattice";
    case ErrorCode::UnsupportedR: return "UnsupportedR";
    case ErrorCode::InconsistentIndex: return "InconsistentIndex";
    case ErrorCode::RelatorFails: return "RelatorFails";
    case ErrorCode::GammaNotTranslation: return "GammaNotTranslation";
    case ErrorCode::GammaWrongOrder: return "GammaWrongOrder";
    case ErrorCode::GenusTooSmall: return "GenusTooSmall";
    case ErrorCode::NonIntegralGenus: return "NonIntegralGenus";
    case ErrorCode::NotNormalizable: return "NotNormalizable";
    case ErrorCode::GroupMismatch: return "GroupMismatch";
    case ErrorCode::InconsistentFractions: return "InconsistentFractions";
    case ErrorCode::MismatchAgainstPaper: return "MismatchAgainstPaper";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "UnknownError";
}

}  // namespace ellsurf
