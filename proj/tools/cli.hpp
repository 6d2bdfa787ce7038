#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wlp::cli {

inline constexpr const char* kSchemaVersion = "1.0";

enum ExitCode : int {
  kOk = 0,
  kInternalError = 1,
  kInvalidParameters = 2,
  kNotApplicable = 3,
};

/// Runs one command line. `args` excludes the program name. The document goes
/// to `out` (or the --out file); diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wlp::cli
