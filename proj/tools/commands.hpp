#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>

namespace grouplat::cli {

enum ExitCode { kSuccess = 0, kVerificationFailed = 1, kInputError = 2, kCapExceeded = 3 };

inline constexpr std::size_t kLargePoset = 2000;

struct RunConfig {
  std::string command;
  std::string catalog;
  std::string group_file;
  std::string poset_file;
  std::string lattice = "L";
  std::string reduce = "none";
  std::size_t max_order = 400;
  std::size_t max_poset = 25000;
  bool allow_large = false;
  std::size_t jobs = 0;
  std::string cache_dir;
  std::string format = "human";
  bool skip_reduction = false;
  std::optional<std::size_t> force_class;
  bool mismatched_complement = false;
  std::string known;
  std::optional<int> level;
  bool e1 = false;
  bool actual = false;
  std::string remove;
  std::string output;
};

// Runs one command, writing the report to `out` and diagnostics to `err`.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace grouplat::cli
