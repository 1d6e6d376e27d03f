#pragma once

// Command-line front end:
//
//   ptrig <verb> --p <real> [--fn <name>] [--x <real>] [--claim <id|all>]
//         [--n <int>] [--spacing uniform|log|cosine] [--format csv|json|human]
//         [--tol <real>]
//
// Exit status: 0 success, 1 a verification failed, 2 usage or domain
// error, 3 numerical non-convergence.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ptrig/inequalities.hpp"

namespace ptrig::cli {

enum class Verb { Eval, Table, Constants, Verify };
enum class Format { Csv, Json, Human };

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitNonConvergence = 3;

struct Command {
  Verb verb = Verb::Eval;
  double p = 2.0;
  std::string function;
  std::optional<double> x;
  /// Claim tag or "all".
  std::string claim;
  GridSpec grid;
  Format format = Format::Human;
  double tol = 1e-10;
};

/// Thrown for malformed command lines.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Parses argv without the program name. Throws UsageError; `--help`
/// yields nullopt after printing usage to `out`.
std::optional<Command> parse_command(const std::vector<std::string>& args, std::ostream& out);

/// Names accepted by --fn.
const std::vector<std::string>& function_names();

/// Executes a parsed command, writing results to `out`; returns the exit
/// status. Library errors propagate.
int execute(const Command& cmd, std::ostream& out);

/// parse_command + execute with errors mapped to exit codes and messages
/// written to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ptrig::cli
