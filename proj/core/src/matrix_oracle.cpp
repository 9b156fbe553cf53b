#include "hbstrata/matrix_oracle.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <optional>
#include <sstream>

#include "hbstrata/error.hpp"

namespace hbstrata {

BlockGrid BlockGrid::with(std::size_t n,
                          std::initializer_list<std::pair<std::size_t, std::size_t>> nonzero) {
  BlockGrid g(n);
  for (auto [i, j] : nonzero) g.set(i, j);
  return g;
}

std::vector<std::pair<std::size_t, std::size_t>> BlockGrid::nonzero_blocks() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      if (at(i, j)) out.emplace_back(i, j);
    }
  }
  return out;
}

std::pair<ExponentGrid, ExponentGrid> scale_exponents(const BlockPattern& p) {
  const std::size_t n = p.size();
  ExponentGrid higgs(n, std::vector<int>(n));
  ExponentGrid dbar(n, std::vector<int>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      higgs[i][j] = 1 + p.weights[j] - p.weights[i];
      dbar[i][j] = p.weights[j] - p.weights[i];
    }
  }
  return {std::move(higgs), std::move(dbar)};
}

LimitPattern take_limit(const BlockPattern& p) {
  const std::size_t n = p.size();
  LimitPattern out;
  std::tie(out.exponents, out.dbar_exponents) = scale_exponents(p);
  out.limit_higgs = BlockGrid(n);
  out.limit_dbar = BlockGrid(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (p.higgs.at(i, j)) {
        int e = out.exponents[i][j];
        if (e < 0) out.diverging_higgs.emplace_back(i, j);
        if (e == 0) out.limit_higgs.set(i, j);
      }
      if (i < j && p.dbar.at(i, j)) {
        int e = out.dbar_exponents[i][j];
        if (e < 0) out.diverging_dbar.emplace_back(i, j);
        if (e == 0) out.limit_dbar.set(i, j);
      }
    }
  }
  out.converges = out.diverging_higgs.empty() && out.diverging_dbar.empty();
  return out;
}

namespace {

using Block = std::pair<std::size_t, std::size_t>;

// The splitting, weights and known vanishing the proof uses for each case,
// and the shape of Phi_0 the classification states.
struct CaseSetup {
  std::vector<int> weights;
  std::vector<Int> block_ranks;
  std::vector<Block> forced_zero;  // Higgs blocks that vanish before scaling
  BlockGrid expected;
  std::optional<Block> zeroed;  // coupling removed by passing to the polystable representative
  std::optional<Block> split;   // extension class that survives the limit and splits in Gr
};

CaseSetup setup_for(const LimitOutcome& o) {
  const BlockGrid chain = BlockGrid::with(3, {{1, 0}, {2, 1}});
  switch (o.case_tag) {
    case CaseTag::Semistable:
      return {{0}, {o.hnt_limit.total_rank()}, {}, BlockGrid(1), std::nullopt, std::nullopt};
    case CaseTag::Rank2Unstable:
      return {{0, 1}, {1, 1}, {}, BlockGrid::with(2, {{1, 0}}), std::nullopt, std::nullopt};
    case CaseTag::C1_1:
      return {{0, 1}, {1, 2}, {}, BlockGrid::with(2, {{1, 0}}), std::nullopt, std::nullopt};
    case CaseTag::C2_1:
      return {{0, 1}, {2, 1}, {}, BlockGrid::with(2, {{1, 0}}), std::nullopt, std::nullopt};
    // Splittings E1 + I + Q and N + E2/N + E/E2: Phi(E1) lies in I K and
    // Phi(N) lies in E2 K, so block (3,1) vanishes.
    case CaseTag::C1_2:
      return {{0, 1, 2}, {1, 1, 1}, {{2, 0}}, BlockGrid::with(3, {{1, 0}}), Block{2, 1}, std::nullopt};
    case CaseTag::C2_2:
      return {{0, 1, 2}, {1, 1, 1}, {{2, 0}}, BlockGrid::with(3, {{2, 1}}), Block{1, 0}, std::nullopt};
    case CaseTag::C1_3:
    case CaseTag::C1_4:
    case CaseTag::C2_3:
    case CaseTag::C2_4:
    case CaseTag::C3_1:
      return {{0, 1, 2}, {1, 1, 1}, {{2, 0}}, chain, std::nullopt, std::nullopt};
    // E2 + E/E2 with weights (0, 1), E2 refined to E1 + E2/E1. The limit
    // keeps E2 as an extension of E2/E1 by E1.
    case CaseTag::C3_2:
      return {{0, 0, 1}, {1, 1, 1}, {}, BlockGrid::with(3, {{2, 0}}), Block{2, 1}, Block{0, 1}};
  }
  throw Error(ErrorKind::ParseError, "unknown case tag");
}

// Connected components of the block graph, each listed in block order.
std::vector<std::vector<std::size_t>> components(const BlockGrid& g) {
  const std::size_t n = g.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto [i, j] : g.nonzero_blocks()) parent[find(i)] = find(j);
  std::vector<std::vector<std::size_t>> out;
  std::vector<int> slot(n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    auto r = find(i);
    if (slot[r] < 0) {
      slot[r] = static_cast<int>(out.size());
      out.emplace_back();
    }
    out[slot[r]].push_back(i);
  }
  return out;
}

bool label_matches(const LimitOutcome& o, const CaseSetup& setup) {
  const auto& gd = o.graded_degrees;
  if (gd.size() != setup.block_ranks.size()) return false;
  const BlockGrid& shape = setup.expected;
  auto comps = components(shape);
  const bool connected = comps.size() == 1;
  const auto& ranks = setup.block_ranks;

  if (auto* m = std::get_if<label::Min>(&o.component)) {
    return shape.nonzero_blocks().empty() && gd.size() == 1 && gd[0] == m->degree;
  }
  if (auto* r2 = std::get_if<label::Rank2>(&o.component)) {
    return connected && ranks == std::vector<Int>{1, 1} && gd[0] == r2->d1;
  }
  if (auto* t = std::get_if<label::Type12>(&o.component)) {
    return connected && ranks == std::vector<Int>{1, 2} && gd == std::vector<Int>{t->deg_sub, t->deg_quot_pair};
  }
  if (auto* t = std::get_if<label::Type21>(&o.component)) {
    return connected && ranks == std::vector<Int>{2, 1} && gd == std::vector<Int>{t->deg_sub_pair, t->deg_quot};
  }
  if (auto* t = std::get_if<label::Type111>(&o.component)) {
    return connected && ranks == std::vector<Int>{1, 1, 1} && gd == std::vector<Int>{t->l1, t->l2, t->l3};
  }
  const auto& poly = std::get<label::PolystableSum>(o.component);
  if (comps.size() != poly.summands.size()) return false;
  std::vector<std::vector<Int>> from_shape;
  for (const auto& c : comps) {
    std::vector<Int> degs;
    for (auto b : c) {
      if (ranks[b] != 1) return false;
      degs.push_back(gd[b]);
    }
    from_shape.push_back(std::move(degs));
  }
  std::vector<std::vector<Int>> from_label;
  for (const auto& s : poly.summands) from_label.push_back(s.degrees);
  std::sort(from_shape.begin(), from_shape.end());
  std::sort(from_label.begin(), from_label.end());
  return from_shape == from_label;
}

}  // namespace

bool oracle_check(const LimitOutcome& outcome) {
  CaseSetup setup = setup_for(outcome);
  const std::size_t n = setup.weights.size();

  BlockPattern pattern{setup.weights, BlockGrid(n), BlockGrid(n)};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      pattern.higgs.set(i, j);
      if (i < j) pattern.dbar.set(i, j);
    }
  }
  for (auto [i, j] : setup.forced_zero) pattern.higgs.set(i, j, false);

  LimitPattern limit = take_limit(pattern);
  if (!limit.converges) return false;
  BlockGrid dbar = limit.limit_dbar;
  if (setup.split) {
    if (!dbar.at(setup.split->first, setup.split->second)) return false;
    dbar.set(setup.split->first, setup.split->second, false);
  }
  if (!dbar.nonzero_blocks().empty()) return false;

  if (setup.zeroed) {
    auto [zi, zj] = *setup.zeroed;
    if (!limit.limit_higgs.at(zi, zj) || setup.expected.at(zi, zj)) return false;
    BlockGrid reduced = limit.limit_higgs;
    reduced.set(zi, zj, false);
    if (reduced != setup.expected) return false;
  } else if (limit.limit_higgs != setup.expected) {
    return false;
  }
  if (outcome.strictly_polystable != setup.zeroed.has_value()) return false;
  return label_matches(outcome, setup);
}

std::string format_pattern(const BlockPattern& p) {
  std::ostringstream os;
  os << "w:";
  for (std::size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << p.weights[i];
  os << '\n';
  for (const BlockGrid* g : {&p.higgs, &p.dbar}) {
    for (std::size_t i = 0; i < p.size(); ++i) {
      for (std::size_t j = 0; j < p.size(); ++j) {
        bool on = g->at(i, j) && (g == &p.higgs || i < j);
        os << (on ? '*' : '.');
      }
      os << '\n';
    }
  }
  return os.str();
}

BlockPattern parse_pattern(std::string_view text) {
  auto fail = [] { throw Error(ErrorKind::ParseError, "bad block pattern text"); };
  std::vector<std::string_view> lines;
  while (!text.empty()) {
    auto nl = text.find('\n');
    auto line = text.substr(0, nl);
    if (!line.empty()) lines.push_back(line);
    if (nl == std::string_view::npos) break;
    text = text.substr(nl + 1);
  }
  if (lines.empty() || lines[0].substr(0, 2) != "w:") fail();

  BlockPattern p;
  std::string_view ws = lines[0].substr(2);
  while (!ws.empty()) {
    auto comma = ws.find(',');
    auto item = ws.substr(0, comma);
    int w = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), w);
    if (ec != std::errc() || ptr != item.data() + item.size()) fail();
    p.weights.push_back(w);
    if (comma == std::string_view::npos) break;
    ws = ws.substr(comma + 1);
  }
  const std::size_t n = p.weights.size();
  if (n == 0 || lines.size() != 1 + 2 * n) fail();
  p.higgs = BlockGrid(n);
  p.dbar = BlockGrid(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t g = 0; g < 2; ++g) {
      auto row = lines[1 + g * n + i];
      if (row.size() != n) fail();
      for (std::size_t j = 0; j < n; ++j) {
        if (row[j] != '.' && row[j] != '*') fail();
        if (row[j] == '*') {
          if (g == 1 && i >= j) fail();
          (g == 0 ? p.higgs : p.dbar).set(i, j);
        }
      }
    }
  }
  return p;
}

}  // namespace hbstrata
