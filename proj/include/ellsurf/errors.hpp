#pragma once

#include <stdexcept>
#include <string>

namespace ellsurf {

// Machine-readable failure codes. The names are part of the external
// contract: the CLI prints them verbatim and tests match on them.
enum class ErrorCode {
  InvalidParams,
  // finitely presented groups / rewriting
  RelatorViolation,
  NotSurjective,
  NotInSubgroup,
  // crystallographic group construction
  LatticeNotInvariant,
  DegenerateLattice,
  UnsupportedR,
  InconsistentIndex,
  // monodromy validation / normal forms
  RelatorFails,
  GammaNotTranslation,
  GammaWrongOrder,
  GenusTooSmall,
  NonIntegralGenus,
  NotNormalizable,
  GroupMismatch,
  // branch data with fractional translation parts
  InconsistentFractions,
  // command-line front end
  MismatchAgainstPaper,
  ParseError,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace ellsurf
