#include <gtest/gtest.h>

#include <algorithm>

#include <json.hpp>

#include "cli.hpp"

using namespace hbstrata;
using cli::Command;
using cli::RunConfig;

namespace {

RunConfig limit(Int g, std::optional<Int> d, const char* hn, std::optional<std::string> inv) {
  RunConfig c;
  c.command = Command::Limit;
  c.genus = g;
  c.degree = d;
  c.hn = hn;
  c.invariant = std::move(inv);
  c.format = Format::Json;
  return c;
}

}  // namespace

TEST(Cli, LimitExample) {
  auto r = cli::run(limit(3, 1, "1:1,2:0", "0"));
  ASSERT_EQ(r.exit_status, cli::kExitOk) << r.error;
  auto doc = nlohmann::json::parse(r.output);
  EXPECT_EQ(doc["results"][0]["case"], "1.3");
  EXPECT_EQ(doc["results"][0]["component"], "t111:1,0,0");
}

TEST(Cli, StrataExample) {
  RunConfig c;
  c.command = Command::Strata;
  c.genus = 2;
  c.rank = 3;
  c.degree = 0;
  auto r = cli::run(c);
  ASSERT_EQ(r.exit_status, cli::kExitOk);
  EXPECT_EQ(std::count(r.output.begin(), r.output.end(), '\n'), 6);  // header + 5 rows
  c.format = Format::Json;
  EXPECT_EQ(nlohmann::json::parse(cli::run(c).output)["results"].size(), 5u);
}

TEST(Cli, SlopeOutOfBoundsSurfaces) {
  auto r = cli::run(limit(2, 0, "1:1,2:-1", "0"));
  EXPECT_EQ(r.exit_status, cli::kExitFailure);
  EXPECT_NE(r.error.find("SlopeOutOfBounds"), std::string::npos) << r.error;
  EXPECT_TRUE(r.output.empty());
}

TEST(Cli, LimitFlagsAndErrors) {
  EXPECT_EQ(cli::run(limit(2, 0, "1:1,1:0,1:-1", "false")).exit_status, cli::kExitOk);
  EXPECT_EQ(cli::run(limit(2, 0, "1:1,1:0,1:-1", "1")).exit_status, cli::kExitUsage);
  EXPECT_EQ(cli::run(limit(3, 1, "1:1,2:0", "x")).exit_status, cli::kExitUsage);
  EXPECT_EQ(cli::run(limit(3, 1, "1:1,2:0", std::nullopt)).exit_status, cli::kExitUsage);
  EXPECT_EQ(cli::run(limit(2, std::nullopt, "3:0", std::nullopt)).exit_status, cli::kExitOk);
  auto mismatch = cli::run(limit(3, 2, "1:1,2:0", "0"));
  EXPECT_EQ(mismatch.exit_status, cli::kExitFailure);
  EXPECT_NE(mismatch.error.find("DegreeMismatch"), std::string::npos);
  auto bad_hn = cli::run(limit(3, std::nullopt, "1:1;2:0", "0"));
  EXPECT_NE(bad_hn.error.find("ParseError"), std::string::npos);
}

TEST(Cli, UsageErrors) {
  RunConfig c;
  c.command = Command::Strata;
  c.genus = 1;
  c.degree = 0;
  auto r = cli::run(c);
  EXPECT_EQ(r.exit_status, cli::kExitUsage);
  EXPECT_NE(r.error.find("--genus"), std::string::npos);
  c.genus = 2;
  c.rank = 4;
  r = cli::run(c);
  EXPECT_EQ(r.exit_status, cli::kExitUsage);
  EXPECT_NE(r.error.find("--rank"), std::string::npos);
  c.rank = 3;
  c.degree.reset();
  EXPECT_EQ(cli::run(c).exit_status, cli::kExitUsage);
}

TEST(Cli, IncidenceIsDeterministic) {
  RunConfig c;
  c.command = Command::Incidence;
  c.genus = 3;
  c.degree = 1;
  c.format = Format::Json;
  auto a = cli::run(c), b = cli::run(c);
  ASSERT_EQ(a.exit_status, cli::kExitOk);
  EXPECT_EQ(a.output, b.output);
  c.format = Format::Dot;
  EXPECT_EQ(cli::run(c).exit_status, cli::kExitOk);
}

TEST(Cli, FixedAndVerify) {
  RunConfig c;
  c.command = Command::Fixed;
  c.genus = 2;
  c.rank = 2;
  c.degree = 1;
  c.format = Format::Csv;
  EXPECT_EQ(cli::run(c).output, "component\nmin\nr2:1\n");
  c.command = Command::Verify;
  c.genus_min = c.genus_max = 2;
  c.degree_min = -1;
  c.degree_max = 1;
  auto r = cli::run(c);
  EXPECT_EQ(r.exit_status, cli::kExitOk) << r.output;
  EXPECT_NE(r.output.find("9/9 criteria passed"), std::string::npos) << r.output;
  c.genus_min = 1;
  EXPECT_EQ(cli::run(c).exit_status, cli::kExitUsage);
}
