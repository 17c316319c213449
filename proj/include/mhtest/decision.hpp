#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mhtest/counts.hpp"
#include "mhtest/variance.hpp"

namespace mhtest {

inline constexpr double kDefaultAlpha = 0.05;
inline constexpr int kDefaultPerGroupB = 1000;

struct TestReport {
  double statistic = 0.0;
  VarianceEstimate variance_estimate;
  double z = 0.0;
  double p_value = 1.0;
  double alpha = kDefaultAlpha;
  bool reject = false;
  /// Set when the variance estimate is not positive. Then p is 1 for
  /// T_U <= 0 and 0 otherwise, and z is +-inf or 0.
  bool degenerate_variance = false;
};

/// Standardises a statistic by a variance estimate and applies the
/// one-sided upper-tail rule at level alpha.
TestReport decide(double statistic, VarianceEstimate variance, double alpha);

/// Global test of homogeneity across all groups. Throws
/// EstimatorPreconditionViolated (carrying the group id) when a group is
/// too small for the estimator, OutOfRange for alpha outside (0, 1).
/// `seed` only matters for test7; when absent, 0 is used.
TestReport run_global_test(const GroupedDataset& ds, Estimator estimator, double alpha = kDefaultAlpha,
                           std::optional<std::uint64_t> seed = std::nullopt,
                           int bootstrap_B = kDefaultVarianceBootstrapB, unsigned workers = 1);

struct PerGroupResult {
  std::string group_id;
  double statistic = 0.0;
  double p_raw = 1.0;
  double p_bh = 1.0;
  double p_bonferroni = 1.0;
  /// Pooled proportions put all mass on one category, so every replicate
  /// equals the observed statistic.
  bool degenerate = false;
};

struct PerGroupOptions {
  int B = kDefaultPerGroupB;
  std::uint64_t seed = 0;
  /// (#{T* >= T_obs} + 1) / (B + 1) instead of #{T* > T_obs} / B.
  bool smoothed = false;
  unsigned workers = 1;
};

/// Bootstrap p-value of each group's T_{U_r} under its pooled proportions,
/// with BH and Bonferroni adjustments. Group r uses stream (seed, r).
std::vector<PerGroupResult> pergroup_bootstrap_pvalues(const GroupedDataset& ds,
                                                       const PerGroupOptions& options = {});

struct PerGroupSummary {
  bool minp_reject = false;
  std::size_t rejections_raw = 0;
  std::size_t rejections_bh = 0;
  std::size_t rejections_bonferroni = 0;
  std::size_t degenerate = 0;
};

/// Min-p decision and rejection counts at level alpha. Degenerate groups
/// keep their flagged p-values but take no part in either: the min-p rule
/// sees them as p = 1 and they are never counted as rejections.
PerGroupSummary summarize_pergroup(std::span<const PerGroupResult> results, double alpha);

enum class Adjustment { bonferroni, bh };

std::string_view to_string(Adjustment a) noexcept;

/// Bonferroni: min(1, k p_i). BH: step-up adjusted values. Throws
/// OutOfRange for p outside [0, 1].
std::vector<double> adjust_pvalues(std::span<const double> p, Adjustment method);

/// min_i p_i <= alpha / k.
bool global_minp_rule(std::span<const double> p, double alpha);

}  // namespace mhtest
