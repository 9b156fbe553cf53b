#include "hbstrata/error.hpp"

namespace hbstrata {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ZeroRank: return "ZeroRank";
    case ErrorKind::InvalidHNType: return "InvalidHNType";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::MismatchedEndpoints: return "MismatchedEndpoints";
    case ErrorKind::RankUnsupported: return "RankUnsupported";
    case ErrorKind::Rank3BoundViolated: return "Rank3BoundViolated";
    case ErrorKind::Rank2BoundViolated: return "Rank2BoundViolated";
    case ErrorKind::NoIntegerSolution: return "NoIntegerSolution";
    case ErrorKind::NotSemistable: return "NotSemistable";
    case ErrorKind::NotUnstable: return "NotUnstable";
    case ErrorKind::CaseFamilyMismatch: return "CaseFamilyMismatch";
    case ErrorKind::NonIntegralInvariant: return "NonIntegralInvariant";
    case ErrorKind::SlopeOutOfBounds: return "SlopeOutOfBounds";
    case ErrorKind::InfeasibleBySpecialization: return "InfeasibleBySpecialization";
    case ErrorKind::AlignmentImpossible: return "AlignmentImpossible";
    case ErrorKind::WrongRank: return "WrongRank";
    case ErrorKind::TheoremViolation: return "TheoremViolation";
    case ErrorKind::DegreeMismatch: return "DegreeMismatch";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& detail)
    : std::runtime_error(std::string(to_string(kind)) + ": " + detail),
      kind_(kind),
      detail_(detail) {}

}  // namespace hbstrata
