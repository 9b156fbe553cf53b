#pragma once

#include <string>
#include <vector>

#include "hbstrata/rational.hpp"

namespace hbstrata::verify {

struct SweepRange {
  Int genus_min = 2;
  Int genus_max = 5;
  Int degree_min = -6;
  Int degree_max = 6;
};

struct CriterionResult {
  int id;
  std::string name;
  bool passed;
  std::string detail;
};

CriterionResult rank2_coincidence(const SweepRange& range);
CriterionResult exhaustiveness(const SweepRange& range);
CriterionResult specialization_monotonicity(const SweepRange& range);
CriterionResult coprimality(const SweepRange& range);
CriterionResult hn_equals_bb(const SweepRange& range);
CriterionResult fixed_point_enumeration(const SweepRange& range);
CriterionResult oracle_equivalence(const SweepRange& range);
CriterionResult stability_audit_sweep(const SweepRange& range);
CriterionResult determinism(const SweepRange& range);

/// All criteria in order 1..9.
std::vector<CriterionResult> run_all(const SweepRange& range = {});

/// "[PASS] 3 specialization monotonicity: <detail>"
std::string format_result(const CriterionResult& r);

}  // namespace hbstrata::verify
