#include "hbstrata/incidence.hpp"

#include "hbstrata/error.hpp"
#include "hbstrata/fixed_points.hpp"

namespace hbstrata {

std::vector<Invariant> feasible_invariants(const InvariantRange& range) {
  std::vector<Invariant> out;
  switch (range.case_family) {
    case CaseFamily::None:
      out.emplace_back(NotApplicable{});
      break;
    case CaseFamily::Case1_I:
      for (Int v : range.feasible_integers) out.emplace_back(SlopeI{Rational(v)});
      break;
    case CaseFamily::Case2_N:
      for (Int v : range.feasible_integers) out.emplace_back(SlopeN{Rational(v)});
      break;
    case CaseFamily::Case3_flag:
      for (bool f : range.feasible_flags) out.emplace_back(Aligned{f});
      break;
  }
  return out;
}

IncidenceTable build_table(Int rank, Int degree, const Genus& genus) {
  IncidenceTable table{rank, degree, genus, {}, {}};
  for (auto& stratum : enumerate_strata(rank, degree, genus)) {
    InvariantRange range = rank == 3 ? invariant_range(stratum) : InvariantRange{};
    IncidenceRow row{stratum, range, {}};
    for (auto& inv : feasible_invariants(range)) {
      auto outcome = classify({stratum, inv});
      table.bb_index[outcome.component].insert(stratum.hn);
      row.entries.push_back({inv, std::move(outcome)});
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

bool check_rank2_coincidence(const IncidenceTable& table) {
  if (table.rank != 2) throw Error(ErrorKind::WrongRank, "rank-2 coincidence needs a rank-2 table");

  std::set<FixedComponentLabel> hit;
  for (const auto& row : table.rows) {
    if (row.entries.size() != 1) return false;
    const auto& out = row.entries.front().outcome;
    FixedComponentLabel expected = label::Min{2, table.degree};
    if (!row.stratum.hn.is_semistable()) expected = label::Rank2{row.stratum.hn.steps()[0].degree};
    if (out.component != expected) return false;
    if (!hit.insert(out.component).second) return false;
  }
  for (const auto& [lbl, strata] : table.bb_index) {
    if (strata.size() != 1) return false;
  }
  auto components = enumerate_fixed_components(2, table.degree, table.genus);
  return std::set<FixedComponentLabel>(components.begin(), components.end()) == hit;
}

std::vector<label::Type111> check_hn_bb_theorem(const IncidenceTable& table) {
  if (table.rank != 3) throw Error(ErrorKind::WrongRank, "HN=BB check needs a rank-3 table");
  const Int k = table.genus.canonical_degree();

  std::vector<label::Type111> verified;
  for (const auto& [lbl, strata] : table.bb_index) {
    const auto* t = std::get_if<label::Type111>(&lbl);
    if (!t || t->l1 - t->l3 <= k) continue;
    const std::string name = to_string(lbl);
    if (!(t->l1 > t->l2 && t->l2 > t->l3)) {
      throw Error(ErrorKind::TheoremViolation, name + ": weight order is not slope order");
    }
    const HNType same({{1, t->l1}, {1, t->l2}, {1, t->l3}});
    if (strata != std::set<HNType>{same}) {
      throw Error(ErrorKind::TheoremViolation, name + ": preimage is not the single stratum " + same.to_string());
    }
    for (const auto& row : table.rows) {
      if (row.stratum.hn != same) continue;
      for (const auto& e : row.entries) {
        if (e.outcome.component != lbl) {
          throw Error(ErrorKind::TheoremViolation,
                      name + ": stratum also flows to " + to_string(e.outcome.component));
        }
      }
    }
    verified.push_back(*t);
  }
  return verified;
}

}  // namespace hbstrata
