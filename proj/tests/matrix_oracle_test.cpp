#include <gtest/gtest.h>

#include <random>

#include "hbstrata/error.hpp"
#include "hbstrata/matrix_oracle.hpp"

using namespace hbstrata;

namespace {

BlockGrid full(std::size_t n) {
  BlockGrid g(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g.set(i, j);
  return g;
}

BlockGrid upper(std::size_t n) {
  BlockGrid g(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) g.set(i, j);
  return g;
}

}  // namespace

TEST(ScaleExponents, Examples) {
  auto [h2, d2] = scale_exponents({{0, 1}, full(2), upper(2)});
  EXPECT_EQ(h2, (ExponentGrid{{1, 2}, {0, 1}}));
  EXPECT_EQ(d2, (ExponentGrid{{0, 1}, {-1, 0}}));
  auto [h3, d3] = scale_exponents({{0, 1, 2}, full(3), upper(3)});
  EXPECT_EQ(h3[0][2], 3);
  EXPECT_EQ(h3[2][0], -1);
  EXPECT_EQ(d3[0][1], 1);
  EXPECT_EQ(d3[0][2], 2);
  auto [h0, d0] = scale_exponents({{0, 0}, full(2), upper(2)});
  EXPECT_EQ(h0, (ExponentGrid{{1, 1}, {1, 1}}));
}

TEST(TakeLimit, TwoStepReference) {
  auto lim = take_limit({{0, 1}, full(2), upper(2)});
  EXPECT_TRUE(lim.converges);
  EXPECT_EQ(lim.limit_higgs, BlockGrid::with(2, {{1, 0}}));
  EXPECT_EQ(lim.limit_dbar, BlockGrid(2));
}

TEST(TakeLimit, ThreeStepReference) {
  auto higgs = full(3);
  higgs.set(2, 0, false);
  auto lim = take_limit({{0, 1, 2}, higgs, upper(3)});
  EXPECT_TRUE(lim.converges);
  EXPECT_EQ(lim.limit_higgs, BlockGrid::with(3, {{1, 0}, {2, 1}}));
  EXPECT_EQ(lim.limit_dbar, BlockGrid(3));
}

TEST(TakeLimit, Divergence) {
  auto lim = take_limit({{0, 1, 2}, full(3), upper(3)});
  EXPECT_FALSE(lim.converges);
  EXPECT_EQ(lim.diverging_higgs, (std::vector<std::pair<std::size_t, std::size_t>>{{2, 0}}));
  // A lower-triangular dbar block with the opposite weights also diverges.
  auto back = take_limit({{1, 0}, BlockGrid(2), BlockGrid::with(2, {{0, 1}})});
  EXPECT_FALSE(back.converges);
  EXPECT_EQ(back.diverging_dbar.size(), 1u);
}

TEST(TakeLimit, UnweightedKillsHiggs) {
  auto lim = take_limit({{0, 0, 0}, full(3), upper(3)});
  EXPECT_TRUE(lim.converges);
  EXPECT_TRUE(lim.limit_higgs.nonzero_blocks().empty());
  EXPECT_EQ(lim.limit_dbar, upper(3));
}

TEST(ScaleExponents, Antisymmetry) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> w(-5, 5);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t n = 1 + trial % 4;
    BlockPattern p{{}, full(n), upper(n)};
    for (std::size_t i = 0; i < n; ++i) p.weights.push_back(w(rng));
    auto [h, d] = scale_exponents(p);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        ASSERT_EQ(h[i][j] + h[j][i], 2);
        ASSERT_EQ(d[i][j] + d[j][i], 0);
      }
    }
  }
}

TEST(TakeLimit, WeightShiftInvariance) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> w(0, 3), shift(-10, 10);
  std::bernoulli_distribution coin(0.5);
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t n = 1 + trial % 4;
    BlockPattern p{{}, BlockGrid(n), BlockGrid(n)};
    for (std::size_t i = 0; i < n; ++i) p.weights.push_back(w(rng));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        p.higgs.set(i, j, coin(rng));
        if (i < j) p.dbar.set(i, j, coin(rng));
      }
    }
    auto q = p;
    int c = shift(rng);
    for (auto& x : q.weights) x += c;
    auto a = take_limit(p), b = take_limit(q);
    ASSERT_EQ(a.converges, b.converges);
    ASSERT_EQ(a.limit_higgs, b.limit_higgs);
    ASSERT_EQ(a.limit_dbar, b.limit_dbar);
    ASSERT_EQ(a.exponents, b.exponents);
  }
}

TEST(TakeLimit, FixedPatternIsFixed) {
  for (std::size_t n = 1; n <= 5; ++n) {
    BlockPattern p{{}, BlockGrid(n), BlockGrid(n)};
    for (std::size_t i = 0; i < n; ++i) p.weights.push_back(static_cast<int>(i));
    for (std::size_t i = 1; i < n; ++i) p.higgs.set(i, i - 1);
    auto lim = take_limit(p);
    ASSERT_TRUE(lim.converges);
    ASSERT_EQ(lim.limit_higgs, p.higgs);
  }
}

TEST(PatternText, RoundTrip) {
  auto higgs = full(3);
  higgs.set(2, 0, false);
  BlockPattern p{{0, 1, 2}, higgs, upper(3)};
  auto text = format_pattern(p);
  EXPECT_EQ(text, "w:0,1,2\n***\n***\n.**\n.**\n..*\n...\n");
  auto q = parse_pattern(text);
  EXPECT_EQ(q.weights, p.weights);
  EXPECT_EQ(q.higgs, p.higgs);
  EXPECT_EQ(q.dbar, p.dbar);
  EXPECT_THROW(parse_pattern("w:0,1\n**\n"), Error);
  EXPECT_THROW(parse_pattern("0,1\n**\n**\n..\n..\n"), Error);
}

TEST(OracleCheck, SpecCases) {
  auto ss = LimitOutcome{CaseTag::Semistable, label::Min{3, 0}, {0}, HNType::parse("3:0")};
  EXPECT_TRUE(oracle_check(ss));
  auto rk2 = LimitOutcome{CaseTag::Rank2Unstable, label::Rank2{1}, {1, 0}, HNType::parse("1:1,1:0")};
  EXPECT_TRUE(oracle_check(rk2));
  auto c13 = LimitOutcome{CaseTag::C1_3, label::Type111{1, 0, 0}, {1, 0, 0}, HNType::parse("1:1,2:0")};
  EXPECT_TRUE(oracle_check(c13));
  auto c32 = LimitOutcome{CaseTag::C3_2, make_polystable({{{1, -1}, {0, 1}}, {{0}, {0}}}), {1, 0, -1},
                          HNType::parse("1:1,1:0,1:-1"), true};
  EXPECT_TRUE(oracle_check(c32));
  c32.strictly_polystable = false;
  EXPECT_FALSE(oracle_check(c32));
  // A (1,1,1) label claimed for a two-step case does not match the shape.
  auto bad = LimitOutcome{CaseTag::C1_1, label::Type111{1, 0, 0}, {1, 0, 0}, HNType::parse("1:1,2:0")};
  EXPECT_FALSE(oracle_check(bad));
}
