#pragma once

#include <string>
#include <variant>
#include <vector>

#include "hbstrata/admissibility.hpp"
#include "hbstrata/labels.hpp"

namespace hbstrata {

/// Slope of I, the saturation of Phi(E1) K^-1 inside E/E1 (case 1).
struct SlopeI {
  Rational value;
};
/// Slope of N, the kernel of the induced map E2 -> (E/E2) K (case 2).
struct SlopeN {
  Rational value;
};
/// Case 3: whether N = E1 (equivalently I = E2/E1).
struct Aligned {
  bool value;
};
struct NotApplicable {};

using Invariant = std::variant<SlopeI, SlopeN, Aligned, NotApplicable>;

struct ClassifierInput {
  AdmissibleStratum stratum;
  Invariant invariant;
};

/// Text form used by the CLI and serializers: integer, "true"/"false", or "-".
std::string to_string(const Invariant& inv);

LimitOutcome classify_semistable(const AdmissibleStratum& stratum);
LimitOutcome classify_rank2(const AdmissibleStratum& stratum);

/// Limit of z * (E, Phi) as z -> 0 for an unstable rank 3 bundle.
///
/// Checks, in order: the invariant kind matches the case family
/// (CaseFamilyMismatch), slopes are integral (NonIntegralInvariant), the
/// value does not sit strictly inside the specialization gap
/// (InfeasibleBySpecialization), it respects the line-subbundle bounds
/// (SlopeOutOfBounds), and Aligned(false) needs mu1 - mu3 <= 2g-2
/// (AlignmentImpossible). Nothing is clamped.
LimitOutcome classify_rank3(const ClassifierInput& input);

/// Dispatches on rank and semistability.
LimitOutcome classify(const ClassifierInput& input);

enum class Relation { Less, LessEqual };

struct AuditEntry {
  std::string subobject;
  Rational slope;
  Rational bound;
  Relation required;
  bool holds;

  bool is_equality() const { return slope == bound; }
};

/// Re-derives the slope inequalities for the Phi_0-invariant subbundles the
/// stability argument enumerates for this case. Every entry must hold;
/// strictly polystable cases carry exactly one equality.
std::vector<AuditEntry> stability_audit(const LimitOutcome& outcome, const ClassifierInput& input);

}  // namespace hbstrata
