#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace slocc::cli {

enum ExitCode : int {
  kAffirmative = 0,
  kNegative = 1,
  kInputError = 2,
  kUnsupported = 3,
};

struct CommandOptions {
  bool json = false;
  std::uint64_t seed = 0;
  double tol = 1e-10;
};

int cmd_monotones(const std::string& path, const CommandOptions& opt, std::istream& in, std::ostream& out);
int cmd_convert(const std::string& src, const std::string& dst, const CommandOptions& opt, std::istream& in,
                std::ostream& out);
int cmd_separable(const std::string& path, const CommandOptions& opt, std::istream& in, std::ostream& out);
int cmd_normal_form(const std::string& path, const CommandOptions& opt, std::istream& in, std::ostream& out);
int cmd_apply_map(const std::string& map_path, const std::string& state_path, const CommandOptions& opt,
                  std::istream& in, std::ostream& out);
int cmd_selfcheck(const CommandOptions& opt, std::ostream& out);

/// Full command line without the program name. Library errors and input
/// errors are reported on `err` and mapped to exit codes.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace slocc::cli
