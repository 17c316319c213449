#pragma once

#include <span>
#include <string>
#include <vector>

#include "mhtest/counts.hpp"

namespace mhtest {

/// Unbiased estimate of ||pi1 - pi2||^2 from one group's two samples.
///
/// Evaluated in closed form as
///   sum_j c1j(c1j-1) / (n1(n1-1)) + sum_j c2j(c2j-1) / (n2(n2-1))
///     - 2 sum_j c1j c2j / (n1 n2),
/// which is algebraically the usual n/(n-1) pi^T pi - 1/(n-1) expression.
/// Requires both totals >= 2 (SampleTooSmall otherwise). May be negative.
double group_ustat(std::span<const Count> c1, std::span<const Count> c2);
double group_ustat(const GroupPair& p);

/// Direct four-index average of the two-sample kernel over raw category
/// labels (1..d). O(n1^2 n2^2); exists to cross-check group_ustat.
double group_ustat_kernel_oracle(std::span<const int> x1, std::span<const int> x2);

struct GroupStat {
  std::string group_id;
  double t_u = 0.0;
};

std::vector<GroupStat> group_statistics(const GroupedDataset& ds);

/// T_U = (1/sqrt(k)) * sum_r T_{U_r}.
double aggregate_statistic(const GroupedDataset& ds);

}  // namespace mhtest
