#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "mhtest/counts.hpp"

namespace mhtest {

/// The seven null-variance estimators. Tests 1-3 are unbiased under the
/// null; 4-6 are their plug-in analogues; 7 is the bootstrap.
enum class Estimator { test1 = 1, test2, test3, test4, test5, test6, test7 };

inline constexpr Estimator kAllEstimators[] = {Estimator::test1, Estimator::test2, Estimator::test3,
                                               Estimator::test4, Estimator::test5, Estimator::test6,
                                               Estimator::test7};

std::string_view to_string(Estimator e) noexcept;
std::optional<Estimator> parse_estimator(std::string_view name) noexcept;

/// Smallest per-sample total each estimator accepts (pooled total for
/// test3, which also needs the T_U minimum of 2 per sample).
Count min_sample_total(Estimator e) noexcept;

enum class VarianceSource { test1 = 1, test2, test3, test4, test5, test6, test7, true_null, true_full };

std::string_view to_string(VarianceSource s) noexcept;
VarianceSource source_of(Estimator e) noexcept;

struct VarianceEstimate {
  double value = 0.0;
  VarianceSource source = VarianceSource::test1;
};

/// Dense symmetric d x d matrix, row-major.
class CovMatrix {
 public:
  explicit CovMatrix(std::size_t d) : d_(d), a_(d * d, 0.0) {}

  std::size_t dim() const noexcept { return d_; }
  double& operator()(std::size_t i, std::size_t j) { return a_[i * d_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return a_[i * d_ + j]; }
  CovMatrix& operator*=(double s);

 private:
  std::size_t d_;
  std::vector<double> a_;
};

/// diag(p) - p p^T.
CovMatrix centered_outer(const ProbVector& p);
CovMatrix centered_outer(std::span<const double> p);

/// n/(n-1) * Sigma_{phat}; unbiased for Sigma_pi. Needs total >= 2.
CovMatrix unbiased_sigma(const CountVector& c);

/// tr(A B) for symmetric A, B, as sum_ij a_ij b_ij.
double trace_product(const CovMatrix& a, const CovMatrix& b);

/// tr(Sigma_p^2) = sum p^2 - 2 sum p^3 + (sum p^2)^2, O(d).
double trace_sigma_sq(std::span<const double> p) noexcept;
/// tr(Sigma_p Sigma_q) = sum pq - sum pq^2 - sum p^2 q + (sum pq)^2, O(d).
double trace_sigma_product(std::span<const double> p, std::span<const double> q) noexcept;

/// Unbiased estimator of tr(Sigma_pi^2) from one sample's counts. Needs
/// total >= 4. Sums over unordered category pairs (the ordered-pair sum is
/// symmetric in t and s).
double trace_sigma_sq_unbiased(std::span<const Count> counts);
double trace_sigma_sq_unbiased(const CountVector& c);

/// Per-group variance estimates. Each throws SampleTooSmall when totals are
/// below min_sample_total(estimator).
double var0_group_test1(const GroupPair& p);
double var0_group_test2(const GroupPair& p);
double var0_group_test3(const GroupPair& p);
/// `variant` must be test4, test5 or test6.
double var0_group_plugin(const GroupPair& p, Estimator variant);

/// Span form used by the simulation hot path; tests 1-6 only.
double var0_group(std::span<const Count> c1, std::span<const Count> c2, Estimator e);

/// Nonparametric bootstrap variance of T_U under the pooled null. Every
/// replicate b redraws each group's two samples from its pooled
/// proportions using stream (seed, b). Divisor B - 1. The result does not
/// depend on `workers`.
double var0_bootstrap(const GroupedDataset& ds, int B, std::uint64_t seed, unsigned workers = 1);

inline constexpr int kDefaultVarianceBootstrapB = 200;

/// Estimate of var_0(T_U) = (1/k) sum_r var_0(T_{U_r}).
VarianceEstimate var0_estimate(const GroupedDataset& ds, Estimator e,
                               std::uint64_t seed = 0,
                               int bootstrap_B = kDefaultVarianceBootstrapB,
                               unsigned workers = 1);

struct SizePair {
  Count n1 = 0;
  Count n2 = 0;
  friend bool operator==(const SizePair&, const SizePair&) = default;
};

/// Exact null variance of T_U for per-group truths pi_r and sizes.
double var0_true(std::span<const ProbVector> pis, std::span<const SizePair> sizes);

/// Exact var(T_{U_r}) for arbitrary (pi1, pi2).
double var_true_full(const ProbVector& pi1, const ProbVector& pi2, Count n1, Count n2);

/// The var_0 expression evaluated at possibly unequal (pi1_r, pi2_r), i.e.
/// var(T_U) without the mean-difference terms.
double var0_at(std::span<const ProbVector> pi1, std::span<const ProbVector> pi2,
               std::span<const SizePair> sizes);

/// Probability limit of the Test 2 estimator off the null: every trace
/// replaced by tr(Sigma_1 Sigma_2).
double var01_true(std::span<const ProbVector> pi1, std::span<const ProbVector> pi2,
                  std::span<const SizePair> sizes);

/// Probability limit of the Test 3 estimator off the null: every Sigma
/// replaced by lambda Sigma_1 + (1 - lambda) Sigma_2 with lambda = n1/(n1+n2).
double var02_true(std::span<const ProbVector> pi1, std::span<const ProbVector> pi2,
                  std::span<const SizePair> sizes);

}  // namespace mhtest
