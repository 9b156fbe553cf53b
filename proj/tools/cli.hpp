#pragma once

#include <optional>
#include <string>

#include "hbstrata/rational.hpp"
#include "hbstrata/serialize.hpp"

namespace hbstrata::cli {

enum class Command { Strata, Fixed, Limit, Incidence, Verify };

struct RunConfig {
  Command command = Command::Strata;
  Int genus = 2;
  Int rank = 3;
  std::optional<Int> degree;
  std::optional<std::string> hn;
  std::optional<std::string> invariant;  // integer, or "true"/"false" for case 3
  Format format = Format::Table;
  std::optional<std::string> output_path;

  // verify only
  Int genus_min = 2;
  Int genus_max = 5;
  Int degree_min = -6;
  Int degree_max = 6;
};

struct RunResult {
  int exit_status = 0;
  std::string output;  // stdout payload
  std::string error;   // message for stderr, empty on success
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // classification error or failed verification
inline constexpr int kExitUsage = 2;

/// Executes one command. Never throws; library errors become a nonzero
/// status with the error kind in `error`.
RunResult run(const RunConfig& config);

}  // namespace hbstrata::cli
