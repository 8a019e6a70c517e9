#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace bohrkit::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitBudget = 3;

// Runs one subcommand. `args` excludes the program name. Results go to
// `out` (or the --out file), diagnostics and usage to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bohrkit::cli
