#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "mhtest/error.hpp"
#include "mhtest/ustat.hpp"
#include "oracles.hpp"

using namespace mhtest;

namespace {

GroupPair pair_of(std::vector<Count> a, std::vector<Count> b, std::string id = "g") {
  return GroupPair(std::move(id), CountVector(std::move(a)), CountVector(std::move(b)));
}

}  // namespace

TEST(Ustat, HandValues) {
  EXPECT_EQ(group_ustat(pair_of({3, 0}, {5, 0})), 0.0);
  EXPECT_NEAR(group_ustat(pair_of({2, 2}, {1, 3})), -1.0 / 6.0, 1e-15);
  EXPECT_NEAR(group_ustat(pair_of({1, 1}, {1, 1})), -1.0, 1e-15);
}

TEST(Ustat, NeedsTwoPerSample) {
  try {
    group_ustat(pair_of({1, 0}, {2, 2}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::SampleTooSmall);
  }
}

TEST(Ustat, LibraryKernelOracle) {
  const std::vector<int> a{1, 1, 2, 2}, b{1, 2, 2, 2};
  EXPECT_NEAR(group_ustat_kernel_oracle(a, b), -1.0 / 6.0, 1e-14);
  const std::vector<int> c{1, 2};
  EXPECT_NEAR(group_ustat_kernel_oracle(c, c), -1.0, 1e-14);
  const std::vector<int> e{1, 1, 1};
  EXPECT_NEAR(group_ustat_kernel_oracle(e, e), 0.0, 1e-14);
}

TEST(Ustat, Aggregate) {
  EXPECT_NEAR(aggregate_statistic(GroupedDataset({pair_of({2, 2}, {1, 3})})), -1.0 / 6.0, 1e-15);
  std::vector<GroupPair> same;
  for (int r = 0; r < 4; ++r) same.push_back(pair_of({3, 0}, {5, 0}, std::to_string(r)));
  EXPECT_EQ(aggregate_statistic(GroupedDataset(same)), 0.0);
  const GroupedDataset two({pair_of({2, 2}, {1, 3}, "a"), pair_of({1, 1}, {1, 1}, "b")});
  EXPECT_NEAR(aggregate_statistic(two), -0.824958, 1e-6);
  EXPECT_NEAR(aggregate_statistic(two), (-1.0 / 6.0 - 1.0) / std::sqrt(2.0), 1e-15);
}

TEST(Ustat, AggregateReportsGroup) {
  const GroupedDataset ds({pair_of({2, 2}, {1, 3}, "ok"), pair_of({1, 0}, {1, 3}, "small")});
  try {
    aggregate_statistic(ds);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::SampleTooSmall);
    ASSERT_TRUE(e.group_id().has_value());
    EXPECT_EQ(*e.group_id(), "small");
  }
}

TEST(Ustat, MatchesKernelAverage) {
  std::mt19937_64 gen(11);
  for (int trial = 0; trial < 300; ++trial) {
    const int d = 2 + static_cast<int>(gen() % 3);
    auto draw = [&] {
      const int n = 2 + static_cast<int>(gen() % 7);
      std::vector<Count> c(d, 0);
      for (int i = 0; i < n; ++i) ++c[gen() % d];
      return c;
    };
    const auto c1 = draw(), c2 = draw();
    auto x1 = oracle::labels_of(c1), x2 = oracle::labels_of(c2);
    std::shuffle(x1.begin(), x1.end(), gen);
    std::shuffle(x2.begin(), x2.end(), gen);
    EXPECT_NEAR(group_ustat(c1, c2), oracle::ustat_by_kernel(x1, x2), 1e-10);
    EXPECT_NEAR(group_ustat_kernel_oracle(x1, x2), oracle::ustat_by_kernel(x1, x2), 1e-10);
  }
}

TEST(Ustat, UnbiasedByEnumeration) {
  for (int a = 1; a <= 9; ++a) {
    for (int b = 1; b <= 9; ++b) {
      const std::vector<double> p1{a / 10.0, 1.0 - a / 10.0}, p2{b / 10.0, 1.0 - b / 10.0};
      double mean = 0.0;
      oracle::for_each_composition(4, 2, [&](const auto& c1) {
        oracle::for_each_composition(4, 2, [&](const auto& c2) {
          mean += oracle::multinomial_pmf(c1, p1) * oracle::multinomial_pmf(c2, p2) * group_ustat(c1, c2);
        });
      });
      const double dist = 2.0 * (p1[0] - p2[0]) * (p1[0] - p2[0]);
      EXPECT_NEAR(mean, dist, 1e-10) << a << "," << b;
    }
  }
}

TEST(Ustat, LabelInvarianceAndSymmetry) {
  const std::vector<Count> c1{4, 0, 2, 1}, c2{1, 3, 3, 0};
  const std::vector<Count> p1{2, 1, 0, 4}, p2{3, 0, 3, 1};  // categories permuted (2,3,1,0)
  EXPECT_NEAR(group_ustat(c1, c2), group_ustat(p1, p2), 1e-15);
  EXPECT_NEAR(group_ustat(c1, c2), group_ustat(c2, c1), 1e-15);
}

TEST(Ustat, GroupStatisticsKeepOrder) {
  const GroupedDataset ds({pair_of({2, 2}, {1, 3}, "z"), pair_of({1, 1}, {1, 1}, "a")});
  const auto stats = group_statistics(ds);
  ASSERT_EQ(stats.size(), 2u);
  EXPECT_EQ(stats[0].group_id, "z");
  EXPECT_NEAR(stats[1].t_u, -1.0, 1e-15);
}
