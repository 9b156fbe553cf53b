#pragma once

// Test-only brute-force references, independent of the library's code paths.

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

#include "hbstrata/hn_type.hpp"

namespace hbstrata::testing {

/// Slope vector as exact fractions p/q compared by cross-multiplication.
struct Frac {
  Int p;
  Int q;
  friend bool operator<(const Frac& a, const Frac& b) { return a.p * b.q < b.p * a.q; }
  friend bool operator==(const Frac& a, const Frac& b) { return a.p * b.q == b.p * a.q; }
  friend bool operator<=(const Frac& a, const Frac& b) { return a.p * b.q <= b.p * a.q; }
};

/// All rank-3 HN types of degree d whose slope gaps lie in [0, 2g-2], found
/// by sweeping integer degree triples for each rank composition and keeping
/// the strictly decreasing ones. Returned as text to stay independent of
/// HNType's own merging.
inline std::set<std::string> brute_force_rank3_strata(Int d, Int g) {
  const Int k = 2 * g - 2;
  std::set<std::string> out;
  const Int span = 40;
  auto emit = [&](std::vector<std::pair<Int, Int>> steps) {
    for (std::size_t i = 1; i < steps.size(); ++i) {
      if (!(Frac{steps[i].second, steps[i].first} < Frac{steps[i - 1].second, steps[i - 1].first})) return;
    }
    std::vector<Frac> mus;
    for (auto [r, deg] : steps) {
      for (Int i = 0; i < r; ++i) mus.push_back({deg, r});
    }
    for (std::size_t i = 0; i + 1 < mus.size(); ++i) {
      // mu_i - mu_{i+1} <= k  <=>  p_i q_{i+1} - p_{i+1} q_i <= k q_i q_{i+1}
      if (mus[i].p * mus[i + 1].q - mus[i + 1].p * mus[i].q > k * mus[i].q * mus[i + 1].q) return;
    }
    std::string s;
    for (auto [r, deg] : steps) s += (s.empty() ? "" : ",") + std::to_string(r) + ":" + std::to_string(deg);
    out.insert(s);
  };
  emit({{3, d}});
  for (Int a = -span; a <= span; ++a) {
    emit({{1, a}, {2, d - a}});
    emit({{2, a}, {1, d - a}});
    for (Int b = -span; b <= span; ++b) emit({{1, a}, {1, b}, {1, d - a - b}});
  }
  return out;
}

}  // namespace hbstrata::testing
