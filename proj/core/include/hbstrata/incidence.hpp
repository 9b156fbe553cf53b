#pragma once

#include <map>
#include <set>
#include <vector>

#include "hbstrata/admissibility.hpp"
#include "hbstrata/labels.hpp"
#include "hbstrata/limit_classifier.hpp"

namespace hbstrata {

struct IncidenceEntry {
  Invariant invariant;
  LimitOutcome outcome;
};

/// One Shatz stratum with the limit of every feasible invariant value.
struct IncidenceRow {
  AdmissibleStratum stratum;
  InvariantRange range;
  std::vector<IncidenceEntry> entries;
};

/// Reachability between Shatz strata (rows) and Bialynicki-Birula strata,
/// the latter indexed by the fixed component the flow lands in.
struct IncidenceTable {
  Int rank;
  Int degree;
  Genus genus;
  std::vector<IncidenceRow> rows;
  std::map<FixedComponentLabel, std::set<HNType>> bb_index;
};

/// The feasible invariants of a stratum as classifier inputs; NotApplicable
/// alone for semistable and rank 2 strata.
std::vector<Invariant> feasible_invariants(const InvariantRange& range);

IncidenceTable build_table(Int rank, Int degree, const Genus& genus);

/// Rank 2: semistable <-> Min and U'_{d1,d-d1} <-> F_{d1}, bijectively.
/// Throws WrongRank for rank 3 tables.
bool check_rank2_coincidence(const IncidenceTable& table);

/// For every (1,1,1) label with l1 - l3 > 2g-2 in the table, checks that its
/// only preimage is the stratum of HN type (l1,l2,l3) and that this whole
/// stratum flows to it. Returns the verified labels; throws TheoremViolation
/// naming the label on failure and WrongRank for rank 2 tables.
std::vector<label::Type111> check_hn_bb_theorem(const IncidenceTable& table);

}  // namespace hbstrata
