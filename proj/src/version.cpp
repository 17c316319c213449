#include "mhtest/version.hpp"

#ifndef MHTEST_VERSION
#define MHTEST_VERSION "0.0.0"
#endif
#ifndef MHTEST_GIT_DESCRIBE
#define MHTEST_GIT_DESCRIBE "unknown"
#endif

namespace mhtest {

std::string_view tool_version() noexcept { return MHTEST_VERSION; }
std::string_view git_describe() noexcept { return MHTEST_GIT_DESCRIBE; }

}  // namespace mhtest
