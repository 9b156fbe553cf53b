#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hbstrata/labels.hpp"

namespace hbstrata {

/// n x n grid of zero / nonzero blocks, indexed from 0.
class BlockGrid {
 public:
  BlockGrid() = default;
  explicit BlockGrid(std::size_t n) : n_(n), cells_(n * n, false) {}
  /// Grid with the listed (row, col) blocks nonzero.
  static BlockGrid with(std::size_t n, std::initializer_list<std::pair<std::size_t, std::size_t>> nonzero);

  std::size_t size() const { return n_; }
  bool at(std::size_t i, std::size_t j) const { return cells_[i * n_ + j]; }
  void set(std::size_t i, std::size_t j, bool nonzero = true) { cells_[i * n_ + j] = nonzero; }
  std::vector<std::pair<std::size_t, std::size_t>> nonzero_blocks() const;

  friend bool operator==(const BlockGrid&, const BlockGrid&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<bool> cells_;
};

/// Higgs field and holomorphic structure in a smooth splitting adapted to a
/// filtration, at the granularity of zero / nonzero blocks. The dbar grid
/// only has meaning strictly above the diagonal.
struct BlockPattern {
  std::vector<int> weights;
  BlockGrid higgs;
  BlockGrid dbar;

  std::size_t size() const { return weights.size(); }
};

using ExponentGrid = std::vector<std::vector<int>>;

/// Conjugating z * Phi by g(z) = diag(z^w_i) scales Higgs block (i,j) by
/// z^(1 + w_j - w_i) and dbar block (i,j) by z^(w_j - w_i).
std::pair<ExponentGrid, ExponentGrid> scale_exponents(const BlockPattern& p);

struct LimitPattern {
  bool converges = true;
  BlockGrid limit_higgs;
  BlockGrid limit_dbar;
  ExponentGrid exponents;
  ExponentGrid dbar_exponents;
  std::vector<std::pair<std::size_t, std::size_t>> diverging_higgs;
  std::vector<std::pair<std::size_t, std::size_t>> diverging_dbar;
};

LimitPattern take_limit(const BlockPattern& p);

/// Rebuilds the gauge-scaling computation for the outcome's case, takes the
/// limit and compares it with the Higgs field shape the classification
/// claims, including block ranks against the component label.
bool oracle_check(const LimitOutcome& outcome);

/// "w:0,1,2", then n rows of '.'/'*' for the Higgs field, then n rows for dbar.
std::string format_pattern(const BlockPattern& p);
BlockPattern parse_pattern(std::string_view text);

}  // namespace hbstrata
