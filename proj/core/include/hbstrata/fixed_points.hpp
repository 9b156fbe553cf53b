#pragma once

#include <vector>

#include "hbstrata/hn_type.hpp"
#include "hbstrata/labels.hpp"

namespace hbstrata {

/// Standard invariants of a (1,1,1) Hodge bundle L1 + L2 + L3 with chain
/// Higgs field: m1 = l2 - l1 + 2g-2, m2 = l3 - l2 + 2g-2.
struct MInvariants {
  Int m1;
  Int m2;
  Genus genus;
  Int degree;

  /// m_i >= 0, 2m1+m2 < 6g-6, m1+2m2 < 6g-6, and the integrality condition
  /// m1 + 2m2 = -d (mod 3), which is m1 + 2m2 = 0 (mod 3) when 3 | d.
  bool satisfies_constraints() const;
};

struct LInvariants {
  Int l1;
  Int l2;
  Int l3;
  Genus genus;

  friend bool operator==(const LInvariants&, const LInvariants&) = default;
};

/// Throws NoIntegerSolution when 3 does not divide d - 2m1 - m2 + 3(2g-2).
LInvariants m_to_l(const MInvariants& m);
MInvariants l_to_m(const LInvariants& l);

bool validate_fixed_111(const LInvariants& l, Int degree);

/// All (1,1,1) labels for the given degree, from the (m1, m2) region.
std::vector<label::Type111> enumerate_type111(Int degree, const Genus& genus);

/// Rank 2: Min plus Rank2(d1) for d < 2d1 <= d+2g-2. Rank 3: Min, the Type12
/// and Type21 labels reachable as limits, and every valid Type111 label.
std::vector<FixedComponentLabel> enumerate_fixed_components(Int rank, Int degree, const Genus& genus);

}  // namespace hbstrata
