#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <vector>

#include "mhtest/classical.hpp"
#include "mhtest/distributions.hpp"
#include "mhtest/error.hpp"
#include "mhtest/random.hpp"
#include "oracles.hpp"

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

// Pearson statistic from the observed/expected table.
double pearson_table(const std::vector<Count>& a, const std::vector<Count>& b) {
  double n1 = 0, n2 = 0;
  for (std::size_t j = 0; j < a.size(); ++j) {
    n1 += static_cast<double>(a[j]);
    n2 += static_cast<double>(b[j]);
  }
  const double n = n1 + n2;
  double x = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) {
    const double col = static_cast<double>(a[j] + b[j]);
    if (col == 0) continue;
    const double e1 = n1 * col / n, e2 = n2 * col / n;
    x += (static_cast<double>(a[j]) - e1) * (static_cast<double>(a[j]) - e1) / e1;
    x += (static_cast<double>(b[j]) - e2) * (static_cast<double>(b[j]) - e2) / e2;
  }
  return x;
}

// G statistic 2 sum O log(O / E).
double g_table(const std::vector<Count>& a, const std::vector<Count>& b) {
  double n1 = 0, n2 = 0;
  for (std::size_t j = 0; j < a.size(); ++j) {
    n1 += static_cast<double>(a[j]);
    n2 += static_cast<double>(b[j]);
  }
  const double n = n1 + n2;
  double g = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) {
    const double col = static_cast<double>(a[j] + b[j]);
    if (a[j] > 0) g += 2.0 * static_cast<double>(a[j]) * std::log(static_cast<double>(a[j]) / (n1 * col / n));
    if (b[j] > 0) g += 2.0 * static_cast<double>(b[j]) * std::log(static_cast<double>(b[j]) / (n2 * col / n));
  }
  return g;
}

MomentPair enumerate_moments(double (*stat)(const std::vector<Count>&, const std::vector<Count>&),
                             const std::vector<double>& pi, int n1, int n2) {
  const int d = static_cast<int>(pi.size());
  double m1 = 0.0, m2 = 0.0;
  oracle::for_each_composition(n1, d, [&](const auto& a) {
    const double wa = oracle::multinomial_pmf(a, pi);
    if (wa == 0.0) return;
    oracle::for_each_composition(n2, d, [&](const auto& b) {
      const double w = wa * oracle::multinomial_pmf(b, pi);
      if (w == 0.0) return;
      const double t = stat(a, b);
      m1 += w * t;
      m2 += w * t * t;
    });
  });
  return {m1, m2 - m1 * m1};
}

}  // namespace

TEST(Classical, ChiSquareHandValues) {
  EXPECT_EQ(chi_square_group(pair_of({2, 2}, {2, 2})), 0.0);
  EXPECT_NEAR(chi_square_group(pair_of({3, 1}, {1, 3})), 2.0, 1e-14);
  EXPECT_NEAR(chi_square_group(pair_of({4, 0}, {0, 4})), 8.0, 1e-14);
  EXPECT_NEAR(chi_square_group(pair_of({3, 0, 1}, {1, 0, 3})), 2.0, 1e-14);
}

TEST(Classical, ChiSquareMatchesTableForm) {
  std::mt19937_64 gen(2);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t d = 2 + gen() % 6;
    std::vector<Count> a(d, 0), b(d, 0);
    const int n1 = 1 + static_cast<int>(gen() % 25), n2 = 1 + static_cast<int>(gen() % 25);
    for (int i = 0; i < n1; ++i) ++a[gen() % d];
    for (int i = 0; i < n2; ++i) ++b[gen() % d];
    const double x = chi_square_group(a, b), g = lrt_group(a, b);
    EXPECT_GE(x, 0.0);
    EXPECT_GE(g, 0.0);
    EXPECT_NEAR(x, pearson_table(a, b), 1e-10 * (1 + x));
    EXPECT_NEAR(g, g_table(a, b), 1e-10 * (1 + g));
  }
}

TEST(Classical, LrtHandValues) {
  EXPECT_NEAR(lrt_group(pair_of({2, 2}, {2, 2})), 0.0, 1e-15);
  EXPECT_NEAR(lrt_group(pair_of({4, 0}, {0, 4})), 16.0 * std::log(2.0), 1e-12);
  const double lambda = std::pow(0.5, 8) / (std::pow(0.75, 3) * 0.25 * 0.25 * std::pow(0.75, 3));
  EXPECT_NEAR(lrt_group(pair_of({3, 1}, {1, 3})), -2.0 * std::log(lambda), 1e-12);
}

TEST(Classical, ZeroTotal) {
  const std::vector<Count> z{0, 0}, a{1, 2};
  EXPECT_EQ(kind_of([&] { chi_square_group(z, a); }), ErrorKind::ZeroTotal);
  EXPECT_EQ(kind_of([&] { lrt_group(a, z); }), ErrorKind::ZeroTotal);
}

TEST(Classical, Aggregates) {
  const GroupedDataset ds({pair_of({3, 1}, {1, 3}, "a"), pair_of({4, 0}, {0, 4}, "b")});
  EXPECT_NEAR(uit_statistic(ds), 10.0, 1e-13);
  const GroupedDataset one({pair_of({3, 1}, {1, 3})});
  EXPECT_NEAR(uit_statistic(one), 2.0, 1e-14);
  EXPECT_NEAR(wk_statistic(one), 1.0 / std::sqrt(2.0), 1e-14);
  EXPECT_NEAR(wk_statistic(ds), (2.0 + 8.0 - 2.0) / std::sqrt(2.0 * 2.0), 1e-13);
  EXPECT_EQ(standardize_chi_square_sum(20.0 * 4.0, 20, 5), 0.0);

  std::vector<GroupPair> flat;
  for (int r = 0; r < 9; ++r) flat.push_back(pair_of({2, 2, 1}, {4, 4, 2}, std::to_string(r)));
  const GroupedDataset same(flat);
  EXPECT_NEAR(uit_statistic(same), 0.0, 1e-13);
  EXPECT_NEAR(vk_statistic(same), -std::sqrt(9.0) * 2.0 / std::sqrt(4.0), 1e-12);
}

TEST(Classical, PrimedStatistics) {
  const GroupedDataset one({pair_of({3, 1}, {1, 3})});
  const std::vector<MomentPair> m{{1.0, 2.0}};
  EXPECT_NEAR(wk_prime(one, m), 1.0 / std::sqrt(2.0), 1e-14);
  const std::vector<MomentPair> centred{{2.0, 0.5}};
  EXPECT_NEAR(wk_prime(one, centred), 0.0, 1e-14);
  const std::vector<MomentPair> lm{{1.0, 4.0}};
  EXPECT_NEAR(vk_prime(one, lm), (lrt_group(one[0]) - 1.0) / 2.0, 1e-14);
  const std::vector<MomentPair> flat{{1.0, 0.0}};
  EXPECT_EQ(kind_of([&] { wk_prime(one, flat); }), ErrorKind::ZeroVariance);
}

TEST(Classical, PooledChiSquare) {
  const GroupedDataset ds({pair_of({3, 1}, {1, 3}, "a"), pair_of({4, 0}, {0, 4}, "b")});
  EXPECT_NEAR(pooled_chi_square(ds), pearson_table({7, 1}, {1, 7}), 1e-12);
  EXPECT_NEAR(pooled_chi_square_pvalue(ds), chi_square_upper_tail(pooled_chi_square(ds), 1.0), 1e-15);
}

TEST(Classical, OutcomePairCount) {
  EXPECT_EQ(outcome_pair_count(2, 2, 2), 9u);
  EXPECT_EQ(outcome_pair_count(5, 30, 30), 46376ull * 46376ull);
  EXPECT_EQ(outcome_pair_count(200, 1000, 1000), UINT64_MAX);
}

TEST(Classical, DegenerateMoments) {
  for (MomentMethod method : {MomentMethod::exact, MomentMethod::cell_marginal, MomentMethod::montecarlo}) {
    MomentOptions o;
    o.method = method;
    o.reps = 1000;
    const MomentPair m = chi_square_moments_oracle(ProbVector({1.0, 0.0}), 6, 9, o);
    EXPECT_EQ(m.mean, 0.0);
    EXPECT_EQ(m.variance, 0.0);
  }
}

TEST(Classical, ExactMomentsMatchEnumeration) {
  const std::vector<std::pair<std::vector<double>, std::pair<int, int>>> cases{
      {{0.5, 0.5}, {2, 2}},
      {{0.2, 0.2, 0.2, 0.2, 0.2}, {5, 10}},
      {{0.1, 0.3, 0.6}, {4, 7}},
      {{0.05, 0.15, 0.3, 0.5}, {6, 3}},
  };
  for (const auto& [pi, n] : cases) {
    const MomentPair chi_ref = enumerate_moments(pearson_table, pi, n.first, n.second);
    const MomentPair lrt_ref = enumerate_moments(g_table, pi, n.first, n.second);
    for (MomentMethod method : {MomentMethod::exact, MomentMethod::cell_marginal}) {
      MomentOptions o;
      o.method = method;
      const MomentPair c = chi_square_moments_oracle(ProbVector(pi), n.first, n.second, o);
      const MomentPair l = lrt_moments_oracle(ProbVector(pi), n.first, n.second, o);
      EXPECT_NEAR(c.mean, chi_ref.mean, 1e-10);
      EXPECT_NEAR(c.variance, chi_ref.variance, 1e-9);
      EXPECT_NEAR(l.mean, lrt_ref.mean, 1e-10);
      EXPECT_NEAR(l.variance, lrt_ref.variance, 1e-9);
    }
  }
}

TEST(Classical, MonteCarloMomentsAgree) {
  const ProbVector pi({0.5, 0.5});
  MomentOptions exact;
  exact.method = MomentMethod::exact;
  const MomentPair ref = chi_square_moments_oracle(pi, 2, 2, exact);
  MomentOptions mc;
  mc.method = MomentMethod::montecarlo;
  mc.reps = 1000000;
  mc.seed = 12;
  const MomentPair est = chi_square_moments_oracle(pi, 2, 2, mc);
  EXPECT_NEAR(est.mean, ref.mean, 3.0 * std::sqrt(ref.variance / mc.reps));
  // The statistic takes values 0, 4/3 and 4 here; its fourth moment is finite.
  EXPECT_NEAR(est.variance, ref.variance, 0.01 * ref.variance);
}

TEST(Classical, MomentErrors) {
  MomentOptions exact;
  exact.method = MomentMethod::exact;
  exact.max_outcomes = 100;
  EXPECT_EQ(kind_of([&] { chi_square_moments_oracle(ProbVector::uniform(5), 10, 10, exact); }),
            ErrorKind::TooManyOutcomes);
  MomentOptions mc;
  mc.method = MomentMethod::montecarlo;
  mc.reps = 1;
  EXPECT_EQ(kind_of([&] { chi_square_moments_oracle(ProbVector::uniform(3), 5, 5, mc); }), ErrorKind::InvalidReps);
  EXPECT_EQ(kind_of([] { chi_square_moments_oracle(ProbVector::uniform(3), 0, 5); }), ErrorKind::ZeroTotal);
}

TEST(Classical, ChiSquareAndLrtAgreeForLargeSamples) {
  const std::vector<double> pi{0.5, 0.5};
  auto rng = make_stream(31, 0, 0, StreamPhase::Data);
  std::vector<Count> a(2), b(2);
  double sx = 0.0, sg = 0.0;
  for (int i = 0; i < 10000; ++i) {
    sample_multinomial(rng, 10000, pi, a);
    sample_multinomial(rng, 10000, pi, b);
    sx += chi_square_group(a, b);
    sg += lrt_group(a, b);
  }
  EXPECT_NEAR(sg / sx, 1.0, 0.05);
}

TEST(Classical, PrimedStatisticIsStandardised) {
  const std::vector<double> pi{0.2, 0.2, 0.2, 0.2, 0.2};
  const std::size_t k = 20;
  const MomentPair m = chi_square_moments_oracle(ProbVector(pi), 5, 10);
  const std::vector<MomentPair> moments(k, m);
  auto rng = make_stream(41, 0, 0, StreamPhase::Data);
  const int reps = 10000;
  double s = 0.0, s2 = 0.0;
  for (int i = 0; i < reps; ++i) {
    std::vector<GroupPair> groups;
    for (std::size_t r = 0; r < k; ++r) {
      groups.emplace_back(std::to_string(r), sample_multinomial(rng, 5, ProbVector(pi)),
                          sample_multinomial(rng, 10, ProbVector(pi)));
    }
    const double w = wk_prime(GroupedDataset(std::move(groups)), moments);
    s += w;
    s2 += w * w;
  }
  const double mean = s / reps, var = s2 / reps - mean * mean;
  EXPECT_NEAR(mean, 0.0, 3.0 / std::sqrt(reps));
  EXPECT_NEAR(var, 1.0, 0.05);
}
