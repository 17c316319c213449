#pragma once

#include <optional>
#include <string_view>

namespace mhtest {

/// Every test the simulation harness can evaluate on a replicate.
enum class TestId {
  wk,              // chi-square sum, large-sample standardisation
  wk_prime,        // chi-square sum, exact null moments
  vk,              // LRT sum, large-sample standardisation
  vk_prime,        // LRT sum, exact null moments
  test1,
  test2,
  test3,
  test4,
  test5,
  test6,
  test7,
  chisq_pooled,    // chi-square on counts summed over groups
  minp_bootstrap,  // per-group bootstrap p-values, min-p rule
};

inline constexpr TestId kAllTestIds[] = {
    TestId::wk,    TestId::wk_prime, TestId::vk,    TestId::vk_prime,     TestId::test1,
    TestId::test2, TestId::test3,    TestId::test4, TestId::test5,        TestId::test6,
    TestId::test7, TestId::chisq_pooled, TestId::minp_bootstrap};

std::string_view to_string(TestId t) noexcept;
std::optional<TestId> parse_test_id(std::string_view name) noexcept;

}  // namespace mhtest
