// Job files and canonical reports for the command-line tool.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "branchcount/parse.hpp"

namespace branchcount {

/// Commands: staircase, dim, degree, branches, map23, and the debugging
/// command oracle (winding degree for two generators, circle sign changes
/// for one).
struct Job {
  std::string command;
  Ring ring;
  std::vector<std::string> generators;
  std::uint64_t seed = 0;
  long bound = 10;
  unsigned retries = 8;
  /// Explicit combinations as rational strings, e.g. "-6" or "1/2".
  std::optional<std::vector<std::vector<std::string>>> a;
  std::optional<std::vector<std::string>> b;
  std::optional<unsigned> k;
};

bool known_command(std::string_view command);

/// Reads a JSON job. Throws ParseError on malformed input.
Job load_job(std::string_view json_text);

namespace exit_code {
inline constexpr int success = 0;
inline constexpr int certificate = 2;
inline constexpr int genericity = 3;
inline constexpr int parse = 4;
inline constexpr int internal = 5;
}  // namespace exit_code

struct JobOutcome {
  int exit_code = exit_code::success;
  std::string text;    // human summary, unversioned
  std::string report;  // canonical JSON: sorted keys, exponents in local order
};

/// Never throws for library errors; they become exit codes and an "error"
/// entry in the report.
JobOutcome run_job(const Job& job);

}  // namespace branchcount
