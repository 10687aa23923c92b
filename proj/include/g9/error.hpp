#ifndef G9_ERROR_HPP
#define G9_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace g9 {

enum class Errc {
  DivisionByZero,
  ShapeMismatch,
  Singular,
  NotFinitelyClosed,
  ReferenceMismatch,
  ExtractionFailure,
  InternalError,
  CensusFailure,
  NotDivisible,
  MolienInconsistency,
  CutoffTooSmall,
  CrossCheckFailure,
  FreenessSuspect,
  FreenessFailure,
  FactorizationFailure,
  TheoremFailure,
  ParseError,
};

std::string_view errc_name(Errc code);

// Single exception type for the library; the code identifies the failure.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace g9

#endif  // G9_ERROR_HPP
