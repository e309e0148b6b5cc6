#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace specpair::cli {

enum ExitCode : int {
  success = 0,
  input_error = 1,
  hypothesis_failure = 2,
};

/// Runs one command line (without the program name). Reports go to out,
/// diagnostics and usage to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "0,2" -> {{0}, {2}}; "0,0;2,0" -> {{0,0}, {2,0}}. A single vector
/// without ';' is split into points unless dimension > 1.
std::vector<std::vector<std::int64_t>> parse_point_list(const std::string& text, std::size_t dimension = 0);

}  // namespace specpair::cli
