#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "mhtest/decision.hpp"
#include "mhtest/distributions.hpp"
#include "mhtest/error.hpp"

using namespace mhtest;

namespace {

GroupPair pair_of(std::vector<Count> a, std::vector<Count> b, std::string id = "g") {
  return GroupPair(std::move(id), CountVector(std::move(a)), CountVector(std::move(b)));
}

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no mhtest::Error thrown";
  return ErrorKind::InvalidArgument;
}

void expect_all_near(const std::vector<double>& got, const std::vector<double>& want) {
  ASSERT_EQ(got.size(), want.size());
  for (std::size_t i = 0; i < got.size(); ++i) EXPECT_NEAR(got[i], want[i], 1e-15) << i;
}

}  // namespace

TEST(Decision, DecideRegular) {
  const TestReport r = decide(2.0, {1.0, VarianceSource::test1}, 0.05);
  EXPECT_DOUBLE_EQ(r.z, 2.0);
  EXPECT_NEAR(r.p_value, normal_upper_tail(2.0), 1e-15);
  EXPECT_TRUE(r.reject);
  EXPECT_FALSE(r.degenerate_variance);
  const TestReport s = decide(0.3, {0.25, VarianceSource::test2}, 0.05);
  EXPECT_NEAR(s.z * std::sqrt(0.25), 0.3, 1e-10);
  EXPECT_FALSE(s.reject);
}

TEST(Decision, RejectsAtTheCriticalValue) {
  const double z = normal_quantile(0.95);
  const TestReport r = decide(z, {1.0, VarianceSource::test1}, 0.05);
  EXPECT_EQ(r.reject, r.p_value <= 0.05);
  EXPECT_NEAR(r.p_value, 0.05, 1e-9);
}

TEST(Decision, DegenerateVariance) {
  const TestReport neg = decide(-0.2, {0.0, VarianceSource::test1}, 0.05);
  EXPECT_TRUE(neg.degenerate_variance);
  EXPECT_EQ(neg.p_value, 1.0);
  EXPECT_FALSE(neg.reject);
  const TestReport pos = decide(0.2, {-0.1, VarianceSource::test1}, 0.05);
  EXPECT_TRUE(pos.degenerate_variance);
  EXPECT_EQ(pos.p_value, 0.0);
  EXPECT_TRUE(pos.reject);
  EXPECT_EQ(pos.z, INFINITY);
  const TestReport zero = decide(0.0, {0.0, VarianceSource::test1}, 0.05);
  EXPECT_EQ(zero.p_value, 1.0);
  EXPECT_EQ(zero.z, 0.0);
}

TEST(Decision, Monotonicity) {
  bool prev = false;
  for (double t = -2.0; t <= 2.0; t += 0.01) {
    const bool now = decide(t, {0.3, VarianceSource::test1}, 0.05).reject;
    EXPECT_TRUE(!prev || now);
    prev = now;
  }
  double last_pos = INFINITY, last_neg = -INFINITY;
  for (double v = 0.1; v < 5.0; v += 0.1) {
    const double zp = decide(1.0, {v, VarianceSource::test1}, 0.05).z;
    const double zn = decide(-1.0, {v, VarianceSource::test1}, 0.05).z;
    EXPECT_LT(zp, last_pos);
    EXPECT_GT(zn, last_neg);
    last_pos = zp;
    last_neg = zn;
  }
}

TEST(Decision, AlphaValidation) {
  EXPECT_EQ(kind_of([] { decide(1.0, {1.0, VarianceSource::test1}, 0.0); }), ErrorKind::OutOfRange);
  EXPECT_EQ(kind_of([] { decide(1.0, {1.0, VarianceSource::test1}, 1.0); }), ErrorKind::OutOfRange);
}

TEST(Decision, GlobalTestDegenerateData) {
  std::vector<GroupPair> groups;
  for (int r = 0; r < 3; ++r) groups.push_back(pair_of({5, 0}, {5, 0}, std::to_string(r)));
  const GroupedDataset ds(groups);
  for (Estimator e : kAllEstimators) {
    const TestReport rep = run_global_test(ds, e, 0.05, 1);
    EXPECT_EQ(rep.statistic, 0.0);
    EXPECT_EQ(rep.variance_estimate.value, 0.0);
    EXPECT_TRUE(rep.degenerate_variance);
    EXPECT_EQ(rep.p_value, 1.0);
    EXPECT_FALSE(rep.reject);
  }
}

TEST(Decision, GlobalTestPrecondition) {
  const GroupedDataset ds({pair_of({3, 3}, {2, 2}, "big"), pair_of({2, 1}, {2, 2}, "tiny")});
  try {
    run_global_test(ds, Estimator::test1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::EstimatorPreconditionViolated);
    ASSERT_TRUE(e.group_id().has_value());
    EXPECT_EQ(*e.group_id(), "tiny");
  }
  EXPECT_NO_THROW(run_global_test(ds, Estimator::test2));
}

TEST(Decision, GlobalTestMatchesPieces) {
  const GroupedDataset ds({pair_of({6, 2, 2}, {1, 5, 4}, "a"), pair_of({3, 3, 4}, {4, 3, 3}, "b")});
  const TestReport r = run_global_test(ds, Estimator::test3);
  const double v = 0.5 * (var0_group_test3(ds[0]) + var0_group_test3(ds[1]));
  EXPECT_NEAR(r.variance_estimate.value, v, 1e-15);
  EXPECT_NEAR(r.z, r.statistic / std::sqrt(v), 1e-12);
}

TEST(Decision, AdjustExamples) {
  const std::vector<double> p{0.001, 0.04, 0.5};
  expect_all_near(adjust_pvalues(p, Adjustment::bonferroni), {0.003, 0.12, 1.0});
  expect_all_near(adjust_pvalues(p, Adjustment::bh), {0.003, 0.06, 0.5});
  const std::vector<double> ones(4, 1.0);
  expect_all_near(adjust_pvalues(ones, Adjustment::bh), ones);
  expect_all_near(adjust_pvalues(ones, Adjustment::bonferroni), ones);
  const std::vector<double> bad{0.2, 1.2};
  EXPECT_EQ(kind_of([&] { adjust_pvalues(bad, Adjustment::bh); }), ErrorKind::OutOfRange);
}

TEST(Decision, BhMonotoneInRawOrder) {
  std::vector<double> p{0.31, 0.002, 0.04, 0.04, 0.9, 0.011, 0.2, 0.5};
  const auto adj = adjust_pvalues(p, Adjustment::bh);
  std::vector<std::size_t> order(p.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return p[a] < p[b]; });
  for (std::size_t i = 1; i < order.size(); ++i) EXPECT_LE(adj[order[i - 1]], adj[order[i]]);
  for (std::size_t i = 0; i < p.size(); ++i) EXPECT_GE(adj[i], p[i]);
}

TEST(Decision, MinPRule) {
  EXPECT_TRUE(global_minp_rule(std::vector<double>{0.001, 0.04, 0.5}, 0.05));
  EXPECT_TRUE(global_minp_rule(std::vector<double>{0.02, 0.04}, 0.05));
  EXPECT_FALSE(global_minp_rule(std::vector<double>(6, 0.5), 0.05));
  EXPECT_EQ(kind_of([] { global_minp_rule(std::vector<double>{}, 0.05); }), ErrorKind::EmptyInput);
}

TEST(Decision, PerGroupDegenerateGroup) {
  const GroupedDataset ds({pair_of({5, 0}, {5, 0}, "flat")});
  const auto res = pergroup_bootstrap_pvalues(ds, {.B = 200, .seed = 3});
  ASSERT_EQ(res.size(), 1u);
  EXPECT_EQ(res[0].statistic, 0.0);
  EXPECT_EQ(res[0].p_raw, 0.0);
  EXPECT_TRUE(res[0].degenerate);
  const PerGroupSummary s = summarize_pergroup(res, 0.05);
  EXPECT_FALSE(s.minp_reject);
  EXPECT_EQ(s.rejections_raw, 0u);
  EXPECT_EQ(s.degenerate, 1u);

  const auto smooth = pergroup_bootstrap_pvalues(ds, {.B = 200, .seed = 3, .smoothed = true});
  EXPECT_EQ(smooth[0].p_raw, 1.0);
}

TEST(Decision, PerGroupDetectsShift) {
  std::vector<GroupPair> groups;
  groups.push_back(pair_of({25, 2, 3}, {2, 3, 25}, "shifted"));
  for (int r = 0; r < 5; ++r) groups.push_back(pair_of({10, 10, 10}, {9, 11, 10}, "same" + std::to_string(r)));
  const GroupedDataset ds(groups);
  const auto res = pergroup_bootstrap_pvalues(ds, {.B = 1000, .seed = 9});
  EXPECT_EQ(res[0].p_raw, 0.0);
  for (std::size_t r = 1; r < res.size(); ++r) {
    EXPECT_GT(res[r].p_raw, 0.2);
    EXPECT_FALSE(res[r].degenerate);
  }
  EXPECT_NEAR(res[0].p_bonferroni, 0.0, 1e-15);
  const PerGroupSummary s = summarize_pergroup(res, 0.05);
  EXPECT_TRUE(s.minp_reject);
  EXPECT_EQ(s.rejections_bh, 1u);
}

TEST(Decision, PerGroupDeterministicAcrossWorkers) {
  std::vector<GroupPair> groups;
  for (int r = 0; r < 10; ++r) groups.push_back(pair_of({3 + r % 4, 4, 2}, {2, 5 - r % 3, 3}, std::to_string(r)));
  const GroupedDataset ds(groups);
  const auto a = pergroup_bootstrap_pvalues(ds, {.B = 300, .seed = 5, .workers = 1});
  const auto b = pergroup_bootstrap_pvalues(ds, {.B = 300, .seed = 5, .workers = 4});
  for (std::size_t r = 0; r < a.size(); ++r) EXPECT_EQ(a[r].p_raw, b[r].p_raw);
  EXPECT_EQ(kind_of([&] { pergroup_bootstrap_pvalues(ds, {.B = 0}); }), ErrorKind::InvalidB);
}
