#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace irrcount::cli {

enum ExitCode : int { kOk = 0, kVerdictFailed = 1, kUsage = 2 };

/// Parses "a..b" (inclusive), "a,b,c" or mixtures such as "3,5..9".
std::vector<std::uint64_t> parse_list(const std::string& text);

/// Runs one subcommand. Reports go to `out` (or --out-file), diagnostics to `err`.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace irrcount::cli
