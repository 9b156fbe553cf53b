#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "hbstrata/hn_type.hpp"

namespace hbstrata {

/// An HN type that passes the slope-gap bounds forced by semistability of a
/// Higgs field. These are necessary conditions only: an admissible stratum
/// is not certified to be nonempty.
struct AdmissibleStratum {
  HNType hn;
  Genus genus;
  Rational mu;                    // total slope
  std::vector<Rational> mu_vector;  // non-increasing, with multiplicity

  Int rank() const { return hn.total_rank(); }
  Int degree() const { return hn.total_degree(); }
};

/// Throws Rank3BoundViolated / Rank2BoundViolated / RankUnsupported.
AdmissibleStratum validate(const HNType& hn, const Genus& genus);

/// Every admissible HN type of the given rank and degree, the semistable one
/// included. Ordered by dominance (sum of polygon heights ascending), then by
/// the step list.
std::vector<AdmissibleStratum> enumerate_strata(Int rank, Int degree, const Genus& genus);

enum class CaseFamily { Case1_I, Case2_N, Case3_flag, None };

std::string_view to_string(CaseFamily family);

/// Range of the auxiliary invariant of a rank 3 stratum: mu(I) in case 1,
/// mu(N) in case 2, and a boolean alignment flag in case 3.
struct InvariantRange {
  CaseFamily case_family = CaseFamily::None;
  std::optional<Rational> interval_low;   // empty interval when low > high
  std::optional<Rational> interval_high;
  std::optional<Rational> isolated_point;
  std::vector<Int> feasible_integers;
  std::vector<bool> feasible_flags;  // Case3_flag only: true always, false iff mu1-mu3 <= 2g-2

  /// Integers strictly between the interval and the isolated point, which
  /// cannot occur because the HN polygon rises under specialization.
  std::vector<Int> excluded_integers;
};

/// Case family of a rank 3 stratum from the sign of mu2 - mu.
CaseFamily case_family_of(const AdmissibleStratum& stratum);

/// Throws WrongRank unless rank 3.
InvariantRange invariant_range(const AdmissibleStratum& stratum);

/// t = -mu1/3 + 2 mu2/3 + 2 mu3/3, the case 1 threshold for mu(I).
Rational case1_threshold(const AdmissibleStratum& stratum);

}  // namespace hbstrata
