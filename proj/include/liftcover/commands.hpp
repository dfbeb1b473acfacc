#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "liftcover/matrix.hpp"
#include "liftcover/orbit.hpp"
#include "liftcover/word.hpp"

namespace liftcover {

struct RunConfig {
  std::size_t genus = 1;
  std::optional<Residue> mod_k;
  std::uint64_t seed = 1;
  std::uint64_t samples = 500;
  double tolerance = 1e-9;
  std::uint64_t state_cap = 10'000'000;
  unsigned workers = 1;
  std::vector<std::string> generator_files;
  bool plain = false;
};

/// Exit codes: 0 success, 1 a checked property failed, 2 usage error.
struct CommandResult {
  int exit_code = 0;
  std::string out;
  std::string err;
};

CommandResult cmd_matrix(const std::string& word, const RunConfig& cfg);
CommandResult cmd_lift(const std::string& word, const RunConfig& cfg);
CommandResult cmd_series(const RunConfig& cfg);
CommandResult cmd_orbit(OrbitMode mode, const RunConfig& cfg);
/// `entries` holds 16 comma-separated residues, row-major.
CommandResult cmd_reduce(const std::string& entries, const RunConfig& cfg);
CommandResult cmd_penner(const std::string& tuple, const RunConfig& cfg);
CommandResult cmd_recover(const RunConfig& cfg);

/// One word per line; blank lines and lines starting with '#' are skipped.
std::vector<MCGWord> load_generator_file(const std::string& path, std::size_t genus);

}  // namespace liftcover
