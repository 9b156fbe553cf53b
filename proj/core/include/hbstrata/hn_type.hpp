#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hbstrata/rational.hpp"

namespace hbstrata {

/// Genus of the base curve; only g >= 2 is meaningful here.
class Genus {
 public:
  explicit Genus(Int g);

  Int value() const { return g_; }
  /// deg K = 2g - 2.
  Int canonical_degree() const { return 2 * g_ - 2; }

  friend bool operator==(const Genus&, const Genus&) = default;

 private:
  Int g_;
};

Rational slope(Int rank, Int degree);

struct HNStep {
  Int rank;
  Int degree;

  Rational slope() const { return hbstrata::slope(rank, degree); }
  friend auto operator<=>(const HNStep&, const HNStep&) = default;
};

/// Harder-Narasimhan type: semistable subquotients with strictly decreasing
/// slopes. Consecutive steps of equal slope are merged on construction, so
/// [(1,0),(1,0)] is stored as [(2,0)].
class HNType {
 public:
  explicit HNType(std::vector<HNStep> steps);

  /// Canonical text "rank:degree,rank:degree,...".
  static HNType parse(std::string_view text);
  /// Builds the type of a direct sum of pieces given in any order.
  static HNType from_pieces(std::vector<HNStep> pieces);

  const std::vector<HNStep>& steps() const { return steps_; }
  Int total_rank() const { return total_rank_; }
  Int total_degree() const { return total_degree_; }
  bool is_semistable() const { return steps_.size() == 1; }
  Rational total_slope() const { return slope(total_rank_, total_degree_); }

  /// Slopes with multiplicity, non-increasing: (mu_1, ..., mu_r).
  std::vector<Rational> slope_vector() const;

  std::string to_string() const;

  friend bool operator==(const HNType&, const HNType&) = default;
  friend auto operator<=>(const HNType& a, const HNType& b) { return a.steps_ <=> b.steps_; }

 private:
  std::vector<HNStep> steps_;
  Int total_rank_ = 0;
  Int total_degree_ = 0;
};

struct HNPolygon {
  std::vector<std::pair<Int, Int>> vertices;  // (cumulative rank, cumulative degree), from (0,0)

  /// Height of the piecewise-linear boundary at an integer rank in [0, r].
  Rational height_at(Int rank) const;
  Int total_rank() const { return vertices.back().first; }
  Int total_degree() const { return vertices.back().second; }

  friend bool operator==(const HNPolygon&, const HNPolygon&) = default;
};

HNPolygon polygon_of(const HNType& hn);

/// True iff p lies on or above q at every integer rank. Polygons must share
/// both endpoints.
bool dominates(const HNPolygon& p, const HNPolygon& q);

/// Sum of heights at ranks 1..r-1; strictly monotone along strict dominance,
/// so ordering by it extends the dominance partial order.
Rational height_sum(const HNPolygon& p);

}  // namespace hbstrata
