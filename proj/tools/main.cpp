#include <fstream>
#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "cli.hpp"
#include "hbstrata/error.hpp"

namespace {

using hbstrata::cli::Command;
using hbstrata::cli::RunConfig;

void add_common(CLI::App* sub, RunConfig& cfg, std::string& format, bool needs_rank) {
  sub->add_option("-g,--genus", cfg.genus, "genus of the curve (>= 2)")->required();
  if (needs_rank) sub->add_option("-r,--rank", cfg.rank, "rank, 2 or 3")->capture_default_str();
  sub->add_option("-o,--output", cfg.output_path, "write output to this file");
  sub->add_option("-f,--format", format, "table, json, csv or dot")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Shatz and Bialynicki-Birula strata of rank 2 and 3 Higgs moduli"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string format = "table";
  std::optional<hbstrata::Int> degree;

  auto* strata = app.add_subcommand("strata", "list admissible Harder-Narasimhan types");
  auto* fixed = app.add_subcommand("fixed", "list C* fixed-point components");
  auto* limit = app.add_subcommand("limit", "classify the z -> 0 limit of one stratum");
  auto* incidence = app.add_subcommand("incidence", "Shatz x BB incidence table");
  auto* verify = app.add_subcommand("verify", "run the acceptance criteria");

  for (auto* sub : {strata, fixed, incidence}) {
    add_common(sub, cfg, format, true);
    sub->add_option("-d,--degree", degree, "degree")->required();
  }
  add_common(limit, cfg, format, false);
  limit->add_option("-d,--degree", degree, "degree (checked against --hn)");
  limit->add_option("--hn", cfg.hn, "HN type, e.g. \"1:1,2:0\"")->required();
  limit->add_option("--inv", cfg.invariant, "degree of I or N, or true/false when mu2 = mu");

  verify->add_option("--gmin", cfg.genus_min)->capture_default_str();
  verify->add_option("--gmax", cfg.genus_max)->capture_default_str();
  verify->add_option("--dmin", cfg.degree_min)->capture_default_str();
  verify->add_option("--dmax", cfg.degree_max)->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  const std::map<CLI::App*, Command> commands = {{strata, Command::Strata},
                                                 {fixed, Command::Fixed},
                                                 {limit, Command::Limit},
                                                 {incidence, Command::Incidence},
                                                 {verify, Command::Verify}};
  cfg.command = commands.at(app.get_subcommands().front());
  cfg.degree = degree;
  try {
    cfg.format = hbstrata::parse_format(format);
  } catch (const hbstrata::Error&) {
    std::cerr << "usage error: --format must be table, json, csv or dot, got '" << format << "'\n";
    return hbstrata::cli::kExitUsage;
  }

  auto result = hbstrata::cli::run(cfg);
  if (!result.error.empty()) std::cerr << result.error << "\n";
  if (cfg.output_path && result.exit_status == hbstrata::cli::kExitOk) {
    std::ofstream out(*cfg.output_path, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot write " << *cfg.output_path << "\n";
      return hbstrata::cli::kExitFailure;
    }
    out << result.output;
  } else {
    std::cout << result.output;
  }
  return result.exit_status;
}
