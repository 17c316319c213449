#include "mhtest/decision.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "mhtest/distributions.hpp"
#include "mhtest/error.hpp"
#include "mhtest/parallel.hpp"
#include "mhtest/random.hpp"
#include "mhtest/ustat.hpp"

namespace mhtest {

namespace {

void check_alpha(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw Error(ErrorKind::OutOfRange, "alpha must lie in (0, 1)");
}

void check_pvalues(std::span<const double> p) {
  for (double v : p) {
    if (!(v >= 0.0 && v <= 1.0)) throw Error(ErrorKind::OutOfRange, "p-values must lie in [0, 1]");
  }
}

}  // namespace

TestReport decide(double statistic, VarianceEstimate variance, double alpha) {
  check_alpha(alpha);
  TestReport report;
  report.statistic = statistic;
  report.variance_estimate = variance;
  report.alpha = alpha;
  if (variance.value > 0.0 && std::isfinite(variance.value)) {
    report.z = statistic / std::sqrt(variance.value);
    report.p_value = normal_upper_tail(report.z);
  } else {
    constexpr double inf = std::numeric_limits<double>::infinity();
    report.degenerate_variance = true;
    report.z = statistic > 0.0 ? inf : (statistic < 0.0 ? -inf : 0.0);
    report.p_value = statistic > 0.0 ? 0.0 : 1.0;
  }
  report.reject = report.p_value <= alpha;
  return report;
}

TestReport run_global_test(const GroupedDataset& ds, Estimator estimator, double alpha,
                           std::optional<std::uint64_t> seed, int bootstrap_B, unsigned workers) {
  check_alpha(alpha);
  const Count need = min_sample_total(estimator);
  for (const auto& g : ds.groups()) {
    if (g.sample1.total() < need || g.sample2.total() < need) {
      throw Error(ErrorKind::EstimatorPreconditionViolated,
                  std::string(to_string(estimator)) + " needs every sample total >= " + std::to_string(need),
                  g.group_id);
    }
  }
  const double statistic = aggregate_statistic(ds);
  const VarianceEstimate v = var0_estimate(ds, estimator, seed.value_or(0), bootstrap_B, workers);
  return decide(statistic, v, alpha);
}

std::vector<PerGroupResult> pergroup_bootstrap_pvalues(const GroupedDataset& ds, const PerGroupOptions& options) {
  if (options.B < 1) throw Error(ErrorKind::InvalidB, "per-group bootstrap needs B >= 1");
  const std::size_t d = ds.dim();
  for (const auto& g : ds.groups()) {
    if (g.sample1.total() < 2 || g.sample2.total() < 2) {
      throw Error(ErrorKind::SampleTooSmall, "per-group bootstrap needs every sample total >= 2", g.group_id);
    }
  }

  std::vector<PerGroupResult> results(ds.k());
  std::vector<std::vector<Count>> scratch(std::max(1u, options.workers), std::vector<Count>(2 * d));
  parallel_for(ds.k(), options.workers, [&](unsigned w, std::size_t r) {
    const GroupPair& g = ds[r];
    const Count n1 = g.sample1.total(), n2 = g.sample2.total();
    std::vector<double> pooled(d);
    std::size_t support = 0;
    for (std::size_t j = 0; j < d; ++j) {
      pooled[j] = static_cast<double>(g.sample1[j] + g.sample2[j]) / static_cast<double>(n1 + n2);
      if (pooled[j] > 0.0) ++support;
    }
    const double observed = group_ustat(g);
    const MultinomialSampler sampler(pooled, std::max(n1, n2));
    auto& buf = scratch[w];
    std::span<Count> x1(buf.data(), d), x2(buf.data() + d, d);
    Xoshiro256pp rng = make_stream(options.seed, r, 0, StreamPhase::PerGroupBootstrap);
    long greater = 0, at_least = 0;
    for (int b = 0; b < options.B; ++b) {
      sampler(rng, n1, x1);
      sampler(rng, n2, x2);
      const double t = group_ustat(x1, x2);
      if (t > observed) ++greater;
      if (t >= observed) ++at_least;
    }
    PerGroupResult& out = results[r];
    out.group_id = g.group_id;
    out.statistic = observed;
    out.degenerate = support <= 1;
    out.p_raw = options.smoothed ? static_cast<double>(at_least + 1) / static_cast<double>(options.B + 1)
                                 : static_cast<double>(greater) / static_cast<double>(options.B);
  });

  std::vector<double> raw(results.size());
  for (std::size_t r = 0; r < results.size(); ++r) raw[r] = results[r].p_raw;
  const auto bh = adjust_pvalues(raw, Adjustment::bh);
  const auto bonf = adjust_pvalues(raw, Adjustment::bonferroni);
  for (std::size_t r = 0; r < results.size(); ++r) {
    results[r].p_bh = bh[r];
    results[r].p_bonferroni = bonf[r];
  }
  return results;
}

PerGroupSummary summarize_pergroup(std::span<const PerGroupResult> results, double alpha) {
  check_alpha(alpha);
  PerGroupSummary out;
  std::vector<double> p(results.size(), 1.0);
  for (std::size_t r = 0; r < results.size(); ++r) {
    const auto& g = results[r];
    if (g.degenerate) {
      ++out.degenerate;
      continue;
    }
    p[r] = g.p_raw;
    out.rejections_raw += g.p_raw <= alpha;
    out.rejections_bh += g.p_bh <= alpha;
    out.rejections_bonferroni += g.p_bonferroni <= alpha;
  }
  out.minp_reject = !p.empty() && global_minp_rule(p, alpha);
  return out;
}

std::string_view to_string(Adjustment a) noexcept {
  return a == Adjustment::bh ? "bh" : "bonferroni";
}

std::vector<double> adjust_pvalues(std::span<const double> p, Adjustment method) {
  check_pvalues(p);
  const std::size_t m = p.size();
  std::vector<double> out(m);
  if (method == Adjustment::bonferroni) {
    for (std::size_t i = 0; i < m; ++i) out[i] = std::min(1.0, static_cast<double>(m) * p[i]);
    return out;
  }
  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return p[a] < p[b]; });
  double running = 1.0;
  for (std::size_t rank = m; rank-- > 0;) {
    const std::size_t i = order[rank];
    running = std::min(running, static_cast<double>(m) / static_cast<double>(rank + 1) * p[i]);
    out[i] = running;
  }
  return out;
}

bool global_minp_rule(std::span<const double> p, double alpha) {
  check_alpha(alpha);
  check_pvalues(p);
  if (p.empty()) throw Error(ErrorKind::EmptyInput, "no p-values");
  const double smallest = *std::min_element(p.begin(), p.end());
  return smallest <= alpha / static_cast<double>(p.size());
}

}  // namespace mhtest
