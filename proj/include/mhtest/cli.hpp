#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mhtest {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitPreconditionError = 3;

/// Entry point of the `mhtest` command. `args` excludes the program name.
/// Returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mhtest
