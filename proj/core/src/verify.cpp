#include "hbstrata/verify.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>

#include <json.hpp>

#include "hbstrata/admissibility.hpp"
#include "hbstrata/error.hpp"
#include "hbstrata/fixed_points.hpp"
#include "hbstrata/incidence.hpp"
#include "hbstrata/limit_classifier.hpp"
#include "hbstrata/matrix_oracle.hpp"
#include "hbstrata/serialize.hpp"

namespace hbstrata::verify {

namespace {

struct SweepItem {
  ClassifierInput input;
  LimitOutcome outcome;
};

// Every (stratum, feasible invariant) pair of rank 3, with its limit.
std::vector<SweepItem> rank3_sweep(const SweepRange& range, bool include_semistable = false) {
  std::vector<SweepItem> out;
  for (Int g = range.genus_min; g <= range.genus_max; ++g) {
    for (Int d = range.degree_min; d <= range.degree_max; ++d) {
      for (const auto& s : enumerate_strata(3, d, Genus(g))) {
        if (s.hn.is_semistable() && !include_semistable) continue;
        for (const auto& inv : feasible_invariants(invariant_range(s))) {
          ClassifierInput in{s, inv};
          out.push_back({in, classify(in)});
        }
      }
    }
  }
  return out;
}

std::vector<SweepItem> rank2_sweep(const SweepRange& range) {
  std::vector<SweepItem> out;
  for (Int g = range.genus_min; g <= range.genus_max; ++g) {
    for (Int d = range.degree_min; d <= range.degree_max; ++d) {
      for (const auto& s : enumerate_strata(2, d, Genus(g))) {
        ClassifierInput in{s, NotApplicable{}};
        out.push_back({in, classify(in)});
      }
    }
  }
  return out;
}

// The case conditions exactly as the classification theorem lists them,
// evaluated independently of the classifier's decision chain.
std::vector<CaseTag> cases_whose_conditions_hold(const ClassifierInput& in) {
  const auto& s = in.stratum;
  const Rational k(s.genus.canonical_degree());
  const Rational mu = s.mu;
  const Rational mu1 = s.mu_vector[0], mu2 = s.mu_vector[1], mu3 = s.mu_vector[2];
  std::vector<CaseTag> hold;
  if (mu2 < mu) {
    const Rational v = std::get<SlopeI>(in.invariant).value;
    const Rational t = Rational(-1, 3) * mu1 + Rational(2, 3) * mu2 + Rational(2, 3) * mu3;
    if (mu1 - k <= v && v < t) hold.push_back(CaseTag::C1_1);
    if (v == t) hold.push_back(CaseTag::C1_2);
    if (t < v && v <= mu3) hold.push_back(CaseTag::C1_3);
    if (v == mu2 && mu3 < mu2) hold.push_back(CaseTag::C1_4);
  } else if (mu2 > mu) {
    const Rational v = std::get<SlopeN>(in.invariant).value;
    if (mu1 + mu2 - mu3 - k <= v && v < mu) hold.push_back(CaseTag::C2_1);
    if (v == mu) hold.push_back(CaseTag::C2_2);
    if (mu < v && v <= mu2) hold.push_back(CaseTag::C2_3);
    if (v == mu1 && mu1 > mu2) hold.push_back(CaseTag::C2_4);
  } else {
    hold.push_back(std::get<Aligned>(in.invariant).value ? CaseTag::C3_1 : CaseTag::C3_2);
  }
  return hold;
}

std::string describe(const ClassifierInput& in) {
  return "g=" + std::to_string(in.stratum.genus.value()) + " hn=" + in.stratum.hn.to_string() +
         " inv=" + to_string(in.invariant);
}

CriterionResult result(int id, std::string name, bool passed, std::string detail) {
  return {id, std::move(name), passed, std::move(detail)};
}

}  // namespace

CriterionResult rank2_coincidence(const SweepRange& range) {
  int tables = 0;
  for (Int g = range.genus_min; g <= range.genus_max; ++g) {
    for (Int d = range.degree_min; d <= range.degree_max; ++d) {
      const Genus genus(g);
      auto table = build_table(2, d, genus);
      if (!check_rank2_coincidence(table)) {
        return result(1, "rank-2 coincidence", false, "bijection fails at g=" + std::to_string(g) + " d=" + std::to_string(d));
      }
      // Brute-force count of d1 with d < 2 d1 <= d + 2g - 2; equals g - 1.
      Int brute = 0;
      for (Int d1 = d - 4 * g; d1 <= d + 4 * g; ++d1) {
        if (d < 2 * d1 && 2 * d1 <= d + genus.canonical_degree()) ++brute;
      }
      auto comps = enumerate_fixed_components(2, d, genus);
      const Int rank2_components = static_cast<Int>(comps.size()) - 1;
      if (brute != g - 1 || rank2_components != brute || static_cast<Int>(table.rows.size()) != brute + 1) {
        return result(1, "rank-2 coincidence", false,
                      "component count mismatch at g=" + std::to_string(g) + " d=" + std::to_string(d));
      }
      ++tables;
    }
  }
  return result(1, "rank-2 coincidence", true, std::to_string(tables) + " tables bijective, F_d1 count = g-1");
}

CriterionResult exhaustiveness(const SweepRange& range) {
  std::size_t classified = 0;
  std::size_t gaps = 0;
  for (Int g = range.genus_min; g <= range.genus_max; ++g) {
    for (Int d = range.degree_min; d <= range.degree_max; ++d) {
      for (const auto& s : enumerate_strata(3, d, Genus(g))) {
        if (s.hn.is_semistable()) continue;
        for (const auto& inv : feasible_invariants(invariant_range(s))) {
          ClassifierInput in{s, inv};
          std::optional<LimitOutcome> out;
          try {
            out = classify_rank3(in);
          } catch (const Error& e) {
            return result(2, "exhaustiveness", false, describe(in) + " raised " + e.what());
          }
          auto hold = cases_whose_conditions_hold(in);
          if (hold.size() != 1 || hold.front() != out->case_tag) {
            return result(2, "exhaustiveness", false,
                          describe(in) + " classified " + std::string(to_string(out->case_tag)) + " but " +
                              std::to_string(hold.size()) + " case conditions hold");
          }
          ++classified;
        }
        // Integers strictly inside (mu3, mu2) in case 1 or (mu2, mu1) in case 2.
        const auto family = case_family_of(s);
        if (family == CaseFamily::Case3_flag) continue;
        const Rational lo = family == CaseFamily::Case1_I ? s.mu_vector[2] : s.mu_vector[1];
        const Rational hi = family == CaseFamily::Case1_I ? s.mu_vector[1] : s.mu_vector[0];
        for (Int v = lo.floor() + 1; Rational(v) < hi; ++v) {
          Invariant inv = family == CaseFamily::Case1_I ? Invariant{SlopeI{Rational(v)}} : Invariant{SlopeN{Rational(v)}};
          try {
            classify_rank3({s, inv});
            return result(2, "exhaustiveness", false, describe({s, inv}) + " in the excluded gap was classified");
          } catch (const Error& e) {
            if (e.kind() != ErrorKind::InfeasibleBySpecialization) {
              return result(2, "exhaustiveness", false, describe({s, inv}) + " raised " + e.what());
            }
          }
          ++gaps;
        }
      }
    }
  }
  return result(2, "exhaustiveness", true,
                std::to_string(classified) + " inputs with exactly one case, " + std::to_string(gaps) +
                    " gap values rejected");
}

CriterionResult specialization_monotonicity(const SweepRange& range) {
  auto sweep = rank3_sweep(range);
  for (const auto& item : sweep) {
    if (!dominates(polygon_of(item.outcome.hnt_limit), polygon_of(item.input.stratum.hn))) {
      return result(3, "specialization monotonicity", false, describe(item.input) + " limit polygon lies below");
    }
  }
  return result(3, "specialization monotonicity", true, std::to_string(sweep.size()) + " outcomes dominate their input");
}

CriterionResult coprimality(const SweepRange& range) {
  std::size_t polystable = 0;
  std::size_t case3_strata = 0;
  std::size_t checked = 0;
  for (Int g = range.genus_min; g <= range.genus_max; ++g) {
    for (Int d = range.degree_min; d <= range.degree_max; ++d) {
      if (std::gcd(Int{3}, d) != 1) continue;
      for (const auto& s : enumerate_strata(3, d, Genus(g))) {
        if (s.hn.is_semistable()) continue;
        if (case_family_of(s) == CaseFamily::Case3_flag) ++case3_strata;
        for (const auto& inv : feasible_invariants(invariant_range(s))) {
          auto out = classify_rank3({s, inv});
          if (out.strictly_polystable || out.case_tag == CaseTag::C3_1 || out.case_tag == CaseTag::C3_2) ++polystable;
          ++checked;
        }
      }
    }
  }
  const bool ok = polystable == 0 && case3_strata == 0;
  return result(4, "coprimality", ok,
                std::to_string(checked) + " coprime outcomes; polystable or case-3 outcomes = " +
                    std::to_string(polystable) + ", case-3 strata = " + std::to_string(case3_strata));
}

CriterionResult hn_equals_bb(const SweepRange& range) {
  std::size_t verified = 0;
  for (Int g = range.genus_min; g <= range.genus_max; ++g) {
    for (Int d = range.degree_min; d <= range.degree_max; ++d) {
      auto table = build_table(3, d, Genus(g));
      try {
        verified += check_hn_bb_theorem(table).size();
      } catch (const Error& e) {
        return result(5, "HN=BB theorem", false, e.what());
      }
      // Independent count: every (1,1,1) label beyond 2g-2 must have been returned.
      std::size_t expected = 0;
      for (const auto& [lbl, strata] : table.bb_index) {
        if (auto* t = std::get_if<label::Type111>(&lbl); t && t->l1 - t->l3 > 2 * g - 2) ++expected;
      }
      if (check_hn_bb_theorem(table).size() != expected) {
        return result(5, "HN=BB theorem", false, "label count mismatch at g=" + std::to_string(g));
      }
    }
  }
  const Genus g2(2);
  auto table = build_table(3, 0, g2);
  auto labels = check_hn_bb_theorem(table);
  const bool instance = labels == std::vector<label::Type111>{{2, 0, -2}} &&
                        table.bb_index.count(label::Type111{1, 0, -1}) == 1 &&
                        table.bb_index.at(label::Type111{2, 0, -2}) == std::set<HNType>{HNType::parse("1:2,1:0,1:-2")};
  return result(5, "HN=BB theorem", instance,
                std::to_string(verified) + " labels verified; g=2 d=0: (2,0,-2) verified, (1,0,-1) out of scope" +
                    (instance ? "" : " FAILED"));
}

CriterionResult fixed_point_enumeration(const SweepRange& range) {
  auto g2 = enumerate_type111(0, Genus(2));
  if (g2 != std::vector<label::Type111>{{1, 0, -1}, {2, 0, -2}}) {
    return result(6, "fixed-point enumeration", false, "g=2 d=0 does not give {(1,0,-1),(2,0,-2)}");
  }
  std::size_t round_trips = 0;
  for (Int g = range.genus_min; g <= range.genus_max; ++g) {
    const Genus genus(g);
    const Int k = genus.canonical_degree();
    for (Int d = range.degree_min; d <= range.degree_max; ++d) {
      auto from_m = enumerate_type111(d, genus);
      // Brute force over (l1, l2) directly against the l-constraints.
      std::vector<label::Type111> from_l;
      for (Int l1 = d / 3 - 3 * k - 2; l1 <= d / 3 + 3 * k + 2; ++l1) {
        for (Int l2 = l1 - k; l2 <= l1 + 3 * k + 2; ++l2) {
          LInvariants l{l1, l2, d - l1 - l2, genus};
          if (validate_fixed_111(l, d)) from_l.push_back({l1, l2, d - l1 - l2});
        }
      }
      std::sort(from_l.begin(), from_l.end());
      if (from_m != from_l) {
        return result(6, "fixed-point enumeration", false,
                      "m-region and l-constraints disagree at g=" + std::to_string(g) + " d=" + std::to_string(d));
      }
      for (const auto& t : from_m) {
        LInvariants l{t.l1, t.l2, t.l3, genus};
        auto m = l_to_m(l);
        if (!m.satisfies_constraints() || m_to_l(m) != l) {
          return result(6, "fixed-point enumeration", false, "m<->l round trip fails for " + to_string(t));
        }
        ++round_trips;
      }
    }
  }
  return result(6, "fixed-point enumeration", true,
                "g=2 d=0 -> {(1,0,-1),(2,0,-2)}; " + std::to_string(round_trips) + " m<->l round trips");
}

CriterionResult oracle_equivalence(const SweepRange& range) {
  // Weights (0,1), everything nonzero: only phi21 survives, beta dies.
  BlockPattern a{{0, 1}, BlockGrid::with(2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}}), BlockGrid::with(2, {{0, 1}})};
  auto la = take_limit(a);
  const bool a_ok = la.converges && la.exponents == ExponentGrid{{1, 2}, {0, 1}} &&
                    la.limit_higgs == BlockGrid::with(2, {{1, 0}}) && la.limit_dbar == BlockGrid(2);
  // Weights (0,1,2), block (3,1) zero: the chain phi21, phi32 survives.
  BlockPattern b{{0, 1, 2}, BlockGrid(3), BlockGrid::with(3, {{0, 1}, {0, 2}, {1, 2}})};
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      if (!(i == 2 && j == 0)) b.higgs.set(i, j);
    }
  }
  auto lb = take_limit(b);
  const bool b_ok = lb.converges && lb.exponents[0][2] == 3 && lb.exponents[2][0] == -1 &&
                    lb.dbar_exponents[0][1] == 1 && lb.dbar_exponents[0][2] == 2 &&
                    lb.limit_higgs == BlockGrid::with(3, {{1, 0}, {2, 1}}) && lb.limit_dbar == BlockGrid(3);
  if (!a_ok || !b_ok) {
    return result(7, "oracle equivalence", false, std::string("reference pattern ") + (a_ok ? "(0,1,2)" : "(0,1)") + " mismatch");
  }
  auto sweep = rank3_sweep(range, true);
  auto r2 = rank2_sweep(range);
  sweep.insert(sweep.end(), r2.begin(), r2.end());
  for (const auto& item : sweep) {
    if (!oracle_check(item.outcome)) {
      return result(7, "oracle equivalence", false, describe(item.input) + " rejected by the block-scaling oracle");
    }
  }
  return result(7, "oracle equivalence", true,
                std::to_string(sweep.size()) + " outcomes confirmed; both reference limits reproduced");
}

CriterionResult stability_audit_sweep(const SweepRange& range) {
  auto sweep = rank3_sweep(range);
  auto r2 = rank2_sweep(range);
  for (auto& item : r2) {
    if (!item.input.stratum.hn.is_semistable()) sweep.push_back(std::move(item));
  }
  std::size_t inequalities = 0;
  for (const auto& item : sweep) {
    auto audit = stability_audit(item.outcome, item.input);
    std::size_t equalities = 0;
    for (const auto& e : audit) {
      if (!e.holds) {
        return result(8, "stability audit", false, describe(item.input) + ": " + e.subobject + " fails");
      }
      if (e.is_equality()) ++equalities;
    }
    const std::size_t want = is_strictly_polystable_case(item.outcome.case_tag) ? 1 : 0;
    if (audit.empty() || equalities != want) {
      return result(8, "stability audit", false,
                    describe(item.input) + ": " + std::to_string(equalities) + " equalities, expected " +
                        std::to_string(want));
    }
    inequalities += audit.size();
  }
  return result(8, "stability audit", true,
                std::to_string(inequalities) + " inequalities over " + std::to_string(sweep.size()) + " outcomes");
}

CriterionResult determinism(const SweepRange& range) {
  std::size_t docs = 0;
  for (Int g = range.genus_min; g <= range.genus_max; ++g) {
    for (Int d = range.degree_min; d <= range.degree_max; ++d) {
      for (Int r : {2, 3}) {
        auto first = render_table(build_table(r, d, Genus(g)), Format::Json);
        auto second = render_table(build_table(r, d, Genus(g)), Format::Json);
        auto reparsed = nlohmann::ordered_json::parse(first).dump(2) + "\n";
        if (first != second || first != reparsed) {
          return result(9, "determinism", false,
                        "JSON differs for r=" + std::to_string(r) + " d=" + std::to_string(d) + " g=" + std::to_string(g));
        }
        ++docs;
      }
    }
  }
  return result(9, "determinism", true, std::to_string(docs) + " incidence JSON documents byte-identical and round-trip");
}

std::vector<CriterionResult> run_all(const SweepRange& range) {
  return {rank2_coincidence(range),          exhaustiveness(range),  specialization_monotonicity(range),
          coprimality(range),                hn_equals_bb(range),    fixed_point_enumeration(range),
          oracle_equivalence(range),         stability_audit_sweep(range), determinism(range)};
}

std::string format_result(const CriterionResult& r) {
  std::ostringstream os;
  os << (r.passed ? "[PASS] " : "[FAIL] ") << r.id << " " << r.name << ": " << r.detail;
  return os.str();
}

}  // namespace hbstrata::verify
