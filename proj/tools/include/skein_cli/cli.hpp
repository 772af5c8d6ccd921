#pragma once

#include "skein/broken_lines.hpp"
#include "skein/verify.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace skein::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

/// Bad command line or operand; maps to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CliConfig {
  Surface surface = Surface::S04;
  std::string command;
  std::vector<std::string> operands;
  std::optional<std::string> output;
  std::optional<unsigned> order;
  std::optional<std::int64_t> max_f;
  std::optional<std::string> dir;
  Side side = Side::Left;
  bool trace = false;
};

/// Parses "m,n". Rejects anything else, including non-canonical points.
BPoint parse_point(std::string_view text);

/// kExitOk for a passing report, kExitFail otherwise.
int exit_code(const Report& report);

/// Names accepted by `verify`.
const std::vector<std::string>& suite_names();

/// Runs one command; writes the JSON result to `out` (or --output) and
/// diagnostics to `err`. Returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace skein::cli
