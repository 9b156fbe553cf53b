#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hbstrata {

enum class ErrorKind {
  ZeroRank,
  InvalidHNType,
  ParseError,
  MismatchedEndpoints,
  RankUnsupported,
  Rank3BoundViolated,
  Rank2BoundViolated,
  NoIntegerSolution,
  NotSemistable,
  NotUnstable,
  CaseFamilyMismatch,
  NonIntegralInvariant,
  SlopeOutOfBounds,
  InfeasibleBySpecialization,
  AlignmentImpossible,
  WrongRank,
  TheoremViolation,
  DegreeMismatch,
};

std::string_view to_string(ErrorKind kind);

// Every failure in the library surfaces as this exception; `kind()` is the
// machine-readable part, `what()` is "<Kind>: <detail>".
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail);

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorKind kind_;
  std::string detail_;
};

}  // namespace hbstrata
