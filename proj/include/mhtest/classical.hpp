#pragma once

#include <cstdint>
#include <span>

#include "mhtest/counts.hpp"

namespace mhtest {

struct MomentPair {
  double mean = 0.0;
  double variance = 0.0;
};

/// Pearson chi-square for one group,
/// (n1 n2 / n) (p1 - p2)^T diag^{-1}(pbar) (p1 - p2).
/// Cells with zero pooled count contribute 0. Needs both totals >= 1.
double chi_square_group(std::span<const Count> c1, std::span<const Count> c2);
double chi_square_group(const GroupPair& p);

/// -2 log(lambda_r) for one group, with 0 log 0 = 0.
double lrt_group(std::span<const Count> c1, std::span<const Count> c2);
double lrt_group(const GroupPair& p);

/// Union-intersection statistic: sum of per-group chi-squares.
double uit_statistic(const GroupedDataset& ds);

/// sum_r (T_r - (d-1)) / sqrt(k * 2(d-1)): per-group statistics are
/// centred and scaled by their large-sample chi-square(d-1) moments.
double wk_statistic(const GroupedDataset& ds);
double vk_statistic(const GroupedDataset& ds);
/// Shared standardisation, given the per-group statistic sum.
double standardize_chi_square_sum(double sum, std::size_t k, std::size_t d);

/// sum_r (T_r - E_r) / sqrt(sum_r var_r) with supplied null moments.
/// Throws ZeroVariance when the summed variance is not positive.
double wk_prime(const GroupedDataset& ds, std::span<const MomentPair> moments);
double vk_prime(const GroupedDataset& ds, std::span<const MomentPair> moments);

/// Chi-square statistic after summing both samples over all groups.
double pooled_chi_square(const GroupedDataset& ds);
/// Its upper-tail p-value against chi-square(d - 1).
double pooled_chi_square_pvalue(const GroupedDataset& ds);

enum class ClassicalStatistic { chi_square, lrt };

enum class MomentMethod {
  /// Enumerate every outcome pair (N1, N2) with its multinomial
  /// probability. Limited to `max_outcomes` pairs.
  exact,
  /// Exact as well: both statistics are sums of per-cell terms g(N1j, N2j),
  /// so the mean needs binomial cell marginals and the variance trinomial
  /// marginals of cell pairs. O(d^2 n1 n2 (n1 + n2)).
  cell_marginal,
  /// Seeded simulation with `reps` draws.
  montecarlo,
};

struct MomentOptions {
  MomentMethod method = MomentMethod::cell_marginal;
  std::int64_t reps = 100'000;
  std::uint64_t seed = 0;
  std::uint64_t max_outcomes = 10'000'000;
};

/// Null mean and variance of the per-group statistic when both samples are
/// drawn from `pi` with totals n1, n2.
MomentPair classical_moments(ClassicalStatistic stat, const ProbVector& pi, Count n1, Count n2,
                             const MomentOptions& options = {});

inline MomentPair chi_square_moments_oracle(const ProbVector& pi, Count n1, Count n2,
                                            const MomentOptions& options = {}) {
  return classical_moments(ClassicalStatistic::chi_square, pi, n1, n2, options);
}

inline MomentPair lrt_moments_oracle(const ProbVector& pi, Count n1, Count n2,
                                     const MomentOptions& options = {}) {
  return classical_moments(ClassicalStatistic::lrt, pi, n1, n2, options);
}

/// Number of (N1, N2) outcome pairs the exact method would visit
/// (saturates at UINT64_MAX).
std::uint64_t outcome_pair_count(std::size_t d, Count n1, Count n2) noexcept;

}  // namespace mhtest
