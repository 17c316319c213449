#pragma once

#include <string_view>

namespace mhtest {

std::string_view tool_version() noexcept;
/// `git describe` of the source tree at configure time.
std::string_view git_describe() noexcept;

}  // namespace mhtest
