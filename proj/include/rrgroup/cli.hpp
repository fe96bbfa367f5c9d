#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "rrgroup/report.hpp"

namespace rrgroup {

inline constexpr std::uint64_t kDefaultSeed = 20240601;

enum ExitCode : int { kOk = 0, kInputError = 2, kCapExceeded = 3, kVerificationFailed = 4 };

struct RunConfig {
  std::string command;
  std::string graph;                              ///< preset name or file path; empty means default
  std::optional<int> type;                        ///< 1-based; all types when unset
  std::optional<std::pair<int, int>> heights;     ///< inclusive range
  Format format = Format::Table;
  double tolerance = 1e-12;
  std::uint64_t cap = 10'000'000;
  std::uint64_t seed = kDefaultSeed;
  std::string budget = "small";
  std::string trace;                              ///< simulate: per-particle CSV path
};

const std::vector<std::string>& command_names();

/// "A..B" or a single "H". Throws InputError.
std::pair<int, int> parse_heights(const std::string& text);

/// Parses argv into a config. Returns an exit code instead when parsing
/// ends the run (help, or an error already printed to `err`).
std::variant<RunConfig, int> parse_command_line(int argc, const char* const* argv, std::ostream& out,
                                                std::ostream& err);

/// Builds the report for `config`, writes it to `out` and returns the exit code.
/// Errors go to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Same computation without emitting, for embedding and tests.
Report build_report(const RunConfig& config, int& exit_code);

}  // namespace rrgroup
