#include "hbstrata/admissibility.hpp"

#include <algorithm>

#include "hbstrata/error.hpp"

namespace hbstrata {

AdmissibleStratum validate(const HNType& hn, const Genus& genus) {
  const Int r = hn.total_rank();
  if (r != 2 && r != 3) {
    throw Error(ErrorKind::RankUnsupported, "rank " + std::to_string(r) + " (only 2 and 3)");
  }
  const Int k = genus.canonical_degree();
  auto mus = hn.slope_vector();

  if (r == 2 && !hn.is_semistable()) {
    const Int d = hn.total_degree();
    const Int d1 = hn.steps()[0].degree;
    if (!(d < 2 * d1 && 2 * d1 <= d + k)) {
      throw Error(ErrorKind::Rank2BoundViolated,
                  "need d < 2d1 <= d+2g-2, got 2d1-d = " + std::to_string(2 * d1 - d) + " > " +
                      std::to_string(k));
    }
  }
  if (r == 3) {
    const char* names[] = {"mu1-mu2", "mu2-mu3"};
    for (int i = 0; i < 2; ++i) {
      Rational gap = mus[i] - mus[i + 1];
      if (gap > Rational(k)) {
        throw Error(ErrorKind::Rank3BoundViolated, std::string(names[i]) + " = " +
                                                       gap.to_string() + " > " + std::to_string(k));
      }
    }
  }
  return AdmissibleStratum{hn, genus, hn.total_slope(), std::move(mus)};
}

namespace {

// Rank compositions of 2 and 3, in the order steps are listed.
const std::vector<std::vector<Int>>& compositions(Int rank) {
  static const std::vector<std::vector<Int>> two = {{2}, {1, 1}};
  static const std::vector<std::vector<Int>> three = {{3}, {1, 2}, {2, 1}, {1, 1, 1}};
  return rank == 2 ? two : three;
}

void sweep_degrees(const std::vector<Int>& ranks, std::size_t i, Int remaining, Int lo, Int hi,
                   std::vector<HNStep>& acc, const Genus& genus,
                   std::vector<AdmissibleStratum>& out) {
  if (i + 1 == ranks.size()) {
    acc.push_back({ranks[i], remaining});
    bool strict = true;
    for (std::size_t j = 1; j < acc.size(); ++j) {
      if (!(acc[j - 1].slope() > acc[j].slope())) strict = false;
    }
    if (strict) {
      try {
        out.push_back(validate(HNType(acc), genus));
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::Rank2BoundViolated && e.kind() != ErrorKind::Rank3BoundViolated) throw;
      }
    }
    acc.pop_back();
    return;
  }
  for (Int deg = lo * ranks[i]; deg <= hi * ranks[i]; ++deg) {
    acc.push_back({ranks[i], deg});
    sweep_degrees(ranks, i + 1, remaining - deg, lo, hi, acc, genus, out);
    acc.pop_back();
  }
}

}  // namespace

std::vector<AdmissibleStratum> enumerate_strata(Int rank, Int degree, const Genus& genus) {
  if (rank != 2 && rank != 3) {
    throw Error(ErrorKind::RankUnsupported, "rank " + std::to_string(rank) + " (only 2 and 3)");
  }
  // Every subquotient slope lies within (rank-1)(2g-2) of mu.
  const Int spread = (rank - 1) * genus.canonical_degree();
  const Int lo = Rational(degree, rank).floor() - spread - 1;
  const Int hi = Rational(degree, rank).ceil() + spread + 1;

  std::vector<AdmissibleStratum> out;
  std::vector<HNStep> acc;
  for (const auto& ranks : compositions(rank)) {
    sweep_degrees(ranks, 0, degree, lo, hi, acc, genus, out);
  }
  std::sort(out.begin(), out.end(), [](const AdmissibleStratum& a, const AdmissibleStratum& b) {
    auto ha = height_sum(polygon_of(a.hn));
    auto hb = height_sum(polygon_of(b.hn));
    if (ha != hb) return ha < hb;
    return a.hn < b.hn;
  });
  return out;
}

std::string_view to_string(CaseFamily family) {
  switch (family) {
    case CaseFamily::Case1_I: return "I";
    case CaseFamily::Case2_N: return "N";
    case CaseFamily::Case3_flag: return "flag";
    case CaseFamily::None: return "none";
  }
  return "?";
}

CaseFamily case_family_of(const AdmissibleStratum& s) {
  if (s.rank() != 3) throw Error(ErrorKind::WrongRank, "case families are defined for rank 3");
  if (s.hn.is_semistable()) return CaseFamily::None;
  const Rational& mu2 = s.mu_vector[1];
  if (mu2 < s.mu) return CaseFamily::Case1_I;
  if (mu2 > s.mu) return CaseFamily::Case2_N;
  return CaseFamily::Case3_flag;
}

Rational case1_threshold(const AdmissibleStratum& s) {
  const auto& m = s.mu_vector;
  return Rational(-1, 3) * m[0] + Rational(2, 3) * m[1] + Rational(2, 3) * m[2];
}

InvariantRange invariant_range(const AdmissibleStratum& s) {
  InvariantRange range;
  range.case_family = case_family_of(s);
  const Int k = s.genus.canonical_degree();
  const auto& m = s.mu_vector;

  switch (range.case_family) {
    case CaseFamily::None:
      return range;
    case CaseFamily::Case3_flag:
      range.feasible_flags.push_back(true);
      if (m[0] - m[2] <= Rational(k)) range.feasible_flags.push_back(false);
      return range;
    case CaseFamily::Case1_I:
      range.interval_low = m[0] - Rational(k);
      range.interval_high = m[2];
      if (m[1] > m[2]) range.isolated_point = m[1];
      break;
    case CaseFamily::Case2_N:
      range.interval_low = m[0] + m[1] - m[2] - Rational(k);
      range.interval_high = m[1];
      if (m[0] > m[1]) range.isolated_point = m[0];
      break;
  }

  for (Int v = range.interval_low->ceil(); v <= range.interval_high->floor(); ++v) {
    range.feasible_integers.push_back(v);
  }
  if (range.isolated_point) {
    if (range.isolated_point->is_integer() && *range.isolated_point > *range.interval_high) {
      range.feasible_integers.push_back(range.isolated_point->numerator());
    }
    for (Int v = range.interval_high->floor() + 1; Rational(v) < *range.isolated_point; ++v) {
      range.excluded_integers.push_back(v);
    }
  }
  return range;
}

}  // namespace hbstrata
