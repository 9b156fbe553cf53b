#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hbstrata/hn_type.hpp"

namespace hbstrata {

namespace label {

/// F_min: Higgs field zero, underlying bundle semistable.
struct Min {
  Int rank;
  Int degree;
  friend auto operator<=>(const Min&, const Min&) = default;
};

/// Rank 2 component F_{d1}: E1 (+) E2 with phi: E1 -> E2 K.
struct Rank2 {
  Int d1;
  friend auto operator<=>(const Rank2&, const Rank2&) = default;
};

/// Hodge bundle of type (1,2): line bundle of degree deg_sub, then rank 2.
struct Type12 {
  Int deg_sub;
  Int deg_quot_pair;
  friend auto operator<=>(const Type12&, const Type12&) = default;
};

/// Hodge bundle of type (2,1).
struct Type21 {
  Int deg_sub_pair;
  Int deg_quot;
  friend auto operator<=>(const Type21&, const Type21&) = default;
};

/// Hodge bundle of type (1,1,1); degrees of L1, L2, L3 in weight order.
struct Type111 {
  Int l1;
  Int l2;
  Int l3;
  friend auto operator<=>(const Type111&, const Type111&) = default;
};

/// One stable Hodge summand of a polystable fixed point: line degrees and
/// weights, both listed in weight order. A single summand has Phi = 0.
struct HodgeSummand {
  std::vector<Int> degrees;
  std::vector<Int> weights;
  friend auto operator<=>(const HodgeSummand&, const HodgeSummand&) = default;
};

/// Strictly polystable fixed point. Summands are kept in canonical order
/// (larger summands first, then by degrees) so that numerically identical
/// S-equivalence classes share one label.
struct PolystableSum {
  std::vector<HodgeSummand> summands;
  friend auto operator<=>(const PolystableSum&, const PolystableSum&) = default;
};

}  // namespace label

using FixedComponentLabel = std::variant<label::Min, label::Rank2, label::Type12, label::Type21,
                                         label::Type111, label::PolystableSum>;

label::PolystableSum make_polystable(std::vector<label::HodgeSummand> summands);

/// "min", "r2:d1", "t12:a|b", "t21:a|b", "t111:l1,l2,l3", "poly:[..]+[..]".
std::string to_string(const FixedComponentLabel& label);
FixedComponentLabel parse_label(std::string_view text, Int rank = 0, Int degree = 0);
/// Sum of the degrees a label records; Rank2 labels only carry d1.
std::optional<Int> label_degree(const FixedComponentLabel& label);

enum class CaseTag {
  Semistable,
  Rank2Unstable,
  C1_1,
  C1_2,
  C1_3,
  C1_4,
  C2_1,
  C2_2,
  C2_3,
  C2_4,
  C3_1,
  C3_2,
};

inline constexpr CaseTag kAllCaseTags[] = {
    CaseTag::Semistable, CaseTag::Rank2Unstable, CaseTag::C1_1, CaseTag::C1_2,
    CaseTag::C1_3,       CaseTag::C1_4,          CaseTag::C2_1, CaseTag::C2_2,
    CaseTag::C2_3,       CaseTag::C2_4,          CaseTag::C3_1, CaseTag::C3_2};

/// "ss", "rk2", "1.1" ... "3.2".
std::string_view to_string(CaseTag tag);
std::optional<CaseTag> parse_case_tag(std::string_view text);
bool is_strictly_polystable_case(CaseTag tag);

struct LimitOutcome {
  CaseTag case_tag;
  FixedComponentLabel component;
  std::vector<Int> graded_degrees;  // Hodge-weight order
  HNType hnt_limit;                 // slope order
  bool strictly_polystable = false;

  friend bool operator==(const LimitOutcome&, const LimitOutcome&) = default;
};

}  // namespace hbstrata
