#ifndef SIMPERM_CLI_HPP
#define SIMPERM_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace simperm::cli {

enum ExitStatus : int {
  kSuccess = 0,
  kDisagreement = 1,
  kUsageError = 2,
};

struct CommandConfig {
  std::string subcommand;
  std::string permutation;
  std::string enum_class;
  int n = 0;
  int order = 0;
  int level = 0;
  int max_level = 0;
  int max_period = 8;
  int max_loop = -1;  // < 0: same as max_period
  std::string format;  // empty: the subcommand's default
  std::string output;  // empty: standard output
  bool override_cost_bound = false;
  unsigned threads = 1;
};

/// Parses argv-style arguments (without the program name) and executes them.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int execute(const CommandConfig& config, std::ostream& out, std::ostream& err);

}  // namespace simperm::cli

#endif  // SIMPERM_CLI_HPP
