#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace elmis::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitFailure = 1,
  kExitUsage = 2,
  kExitInfeasible = 3,
  kExitConvergence = 4,
  kExitRankDeficient = 5,
};

/// Comma-separated counts; scientific notation such as 1e3 is accepted when
/// it denotes a positive integer.
std::vector<std::size_t> parse_count_list(std::string_view text);

/// Comma-separated reals.
std::vector<double> parse_real_list(std::string_view text);

/// Reals from a file (commas, whitespace or newlines; '#' starts a comment)
/// when `text` names an existing file, otherwise parsed inline.
std::vector<double> read_values(const std::string& text);

/// Entry point shared by the executable and the tests. Output text goes to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace elmis::cli
