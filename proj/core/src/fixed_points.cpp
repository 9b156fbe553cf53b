#include "hbstrata/fixed_points.hpp"

#include <algorithm>
#include <set>

#include "hbstrata/admissibility.hpp"
#include "hbstrata/error.hpp"
#include "hbstrata/limit_classifier.hpp"

namespace hbstrata {

namespace {

Int mod3(Int x) { return ((x % 3) + 3) % 3; }

}  // namespace

bool MInvariants::satisfies_constraints() const {
  const Int bound = 3 * genus.canonical_degree();  // 6g - 6
  return m1 >= 0 && m2 >= 0 && 2 * m1 + m2 < bound && m1 + 2 * m2 < bound &&
         mod3(m1 + 2 * m2 + degree) == 0;
}

LInvariants m_to_l(const MInvariants& m) {
  const Int k = m.genus.canonical_degree();
  // l2 = l1 + m1 - k, l3 = l2 + m2 - k, l1 + l2 + l3 = d.
  const Int three_l1 = m.degree - 2 * m.m1 - m.m2 + 3 * k;
  if (mod3(three_l1) != 0) {
    throw Error(ErrorKind::NoIntegerSolution,
                "3 does not divide d - 2m1 - m2 + 3(2g-2) = " + std::to_string(three_l1));
  }
  const Int l1 = three_l1 / 3;
  const Int l2 = l1 + m.m1 - k;
  const Int l3 = l2 + m.m2 - k;
  return LInvariants{l1, l2, l3, m.genus};
}

MInvariants l_to_m(const LInvariants& l) {
  const Int k = l.genus.canonical_degree();
  return MInvariants{l.l2 - l.l1 + k, l.l3 - l.l2 + k, l.genus, l.l1 + l.l2 + l.l3};
}

bool validate_fixed_111(const LInvariants& l, Int degree) {
  const Int k = l.genus.canonical_degree();
  return l.l1 + l.l2 + l.l3 == degree && l.l2 - l.l1 + k >= 0 && l.l3 - l.l2 + k >= 0 &&
         l.l1 + l.l2 - 2 * l.l3 > 0 && 2 * l.l1 - l.l2 - l.l3 > 0;
}

std::vector<label::Type111> enumerate_type111(Int degree, const Genus& genus) {
  const Int bound = 3 * genus.canonical_degree();
  std::vector<label::Type111> out;
  for (Int m1 = 0; 2 * m1 < bound; ++m1) {
    for (Int m2 = 0; 2 * m1 + m2 < bound; ++m2) {
      MInvariants m{m1, m2, genus, degree};
      if (!m.satisfies_constraints()) continue;
      auto l = m_to_l(m);
      out.push_back({l.l1, l.l2, l.l3});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<FixedComponentLabel> enumerate_fixed_components(Int rank, Int degree, const Genus& genus) {
  std::vector<FixedComponentLabel> out;
  out.emplace_back(label::Min{rank, degree});
  if (rank == 2) {
    for (Int d1 = Rational(degree, 2).floor() + 1; 2 * d1 <= degree + genus.canonical_degree(); ++d1) {
      out.emplace_back(label::Rank2{d1});
    }
    return out;
  }
  if (rank != 3) throw Error(ErrorKind::RankUnsupported, "rank " + std::to_string(rank));

  // Type (1,2) and (2,1) components are only known as images of the limit map.
  std::set<FixedComponentLabel> reachable;
  for (const auto& s : enumerate_strata(3, degree, genus)) {
    auto family = case_family_of(s);
    if (family != CaseFamily::Case1_I && family != CaseFamily::Case2_N) continue;
    for (Int v : invariant_range(s).feasible_integers) {
      auto inv = family == CaseFamily::Case1_I ? Invariant{SlopeI{Rational(v)}} : Invariant{SlopeN{Rational(v)}};
      auto outcome = classify_rank3({s, inv});
      if (outcome.case_tag == CaseTag::C1_1 || outcome.case_tag == CaseTag::C2_1) {
        reachable.insert(outcome.component);
      }
    }
  }
  out.insert(out.end(), reachable.begin(), reachable.end());
  for (const auto& t : enumerate_type111(degree, genus)) out.emplace_back(t);
  return out;
}

}  // namespace hbstrata
