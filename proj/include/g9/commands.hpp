#ifndef G9_COMMANDS_HPP
#define G9_COMMANDS_HPP

// Subcommands of the g9cli tool. Exit codes: 0 success, 1 verification
// failure, 2 usage error.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "g9/chartable_io.hpp"

namespace g9 {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;

struct RunConfig {
  std::string command;
  std::string rep = "all";  // "1".."32" or "all"
  unsigned degree = 0;
  std::size_t terms = 64;   // series cutoff
  bool numerator = false;
  Format format = Format::Text;
  std::string out;          // empty writes to the given stream
  std::vector<std::string> only;
  std::string inject_fault;
};

int cmd_group(const RunConfig& cfg, std::ostream& out);
int cmd_chartable(const RunConfig& cfg, std::ostream& out);
int cmd_molien(const RunConfig& cfg, std::ostream& out);
int cmd_covariants(const RunConfig& cfg, std::ostream& out);
int cmd_generators(const RunConfig& cfg, std::ostream& out);
int cmd_verify(const RunConfig& cfg, std::ostream& out);

// Parses argv and dispatches; usage errors go to err.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace g9

#endif  // G9_COMMANDS_HPP
