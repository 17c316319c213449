#include <gtest/gtest.h>

#include <cmath>
#include <numeric>
#include <vector>

#include "mhtest/distributions.hpp"
#include "mhtest/random.hpp"

using namespace mhtest;

TEST(Random, StreamsAreReproducible) {
  auto a = make_stream(42, 3, 7, StreamPhase::Data);
  auto b = make_stream(42, 3, 7, StreamPhase::Data);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(a(), b());
}

TEST(Random, StreamKeysAreDistinct) {
  const std::uint64_t base = make_stream(42, 3, 7, StreamPhase::Data)();
  EXPECT_NE(base, make_stream(43, 3, 7, StreamPhase::Data)());
  EXPECT_NE(base, make_stream(42, 4, 7, StreamPhase::Data)());
  EXPECT_NE(base, make_stream(42, 3, 8, StreamPhase::Data)());
  EXPECT_NE(base, make_stream(42, 3, 7, StreamPhase::Bootstrap)());
  EXPECT_NE(make_stream(0, 1, 0, StreamPhase::Data)(), make_stream(0, 0, 1, StreamPhase::Data)());
}

TEST(Random, UniformInUnitInterval) {
  auto rng = make_stream(1, 0, 0, StreamPhase::Data);
  double sum = 0.0;
  for (int i = 0; i < 100000; ++i) {
    const double u = rng.uniform();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
    sum += u;
  }
  EXPECT_NEAR(sum / 100000, 0.5, 0.005);
}

TEST(Random, MultinomialEdgeCases) {
  auto rng = make_stream(5, 0, 0, StreamPhase::Data);
  EXPECT_EQ(sample_multinomial(rng, 0, ProbVector({0.3, 0.7})).total(), 0);
  const CountVector point = sample_multinomial(rng, 17, ProbVector({0.0, 1.0, 0.0}));
  EXPECT_EQ(point, CountVector({0, 17, 0}));
  EXPECT_EQ(sample_binomial(rng, 10, 0.0), 0);
  EXPECT_EQ(sample_binomial(rng, 10, 1.0), 10);
}

TEST(Random, BinomialMoments) {
  // Both the inversion branch and the library branch.
  for (const auto [n, p] : {std::pair<Count, double>{20, 0.3}, {5000, 0.4}, {40, 0.95}}) {
    auto rng = make_stream(9, n, 0, StreamPhase::Data);
    const int reps = 40000;
    double s = 0.0, s2 = 0.0;
    for (int i = 0; i < reps; ++i) {
      const double x = static_cast<double>(sample_binomial(rng, n, p));
      ASSERT_GE(x, 0.0);
      ASSERT_LE(x, static_cast<double>(n));
      s += x;
      s2 += x * x;
    }
    const double mean = s / reps, var = s2 / reps - mean * mean;
    const double true_var = static_cast<double>(n) * p * (1 - p);
    EXPECT_NEAR(mean, static_cast<double>(n) * p, 5.0 * std::sqrt(true_var / reps));
    EXPECT_NEAR(var / true_var, 1.0, 0.05);
  }
}

TEST(Random, SamplerMatchesPlainDraws) {
  const std::vector<double> pi{0.1, 0.25, 0.05, 0.4, 0.2};
  const MultinomialSampler sampler(pi, 60);
  auto a = make_stream(3, 1, 2, StreamPhase::Data);
  auto b = make_stream(3, 1, 2, StreamPhase::Data);
  std::vector<Count> x(5), y(5);
  for (int i = 0; i < 2000; ++i) {
    const Count n = i % 61;
    sampler(a, n, x);
    sample_multinomial(b, n, pi, y);
    ASSERT_EQ(x, y) << "draw " << i;
  }
}

TEST(Random, MultinomialGoodnessOfFit) {
  // Cell totals over many draws of M(30, pi) against their expectations.
  const std::vector<double> pi{0.5, 0.2, 0.15, 0.1, 0.05};
  auto rng = make_stream(21, 0, 0, StreamPhase::Data);
  const int reps = 20000;
  std::vector<double> totals(5, 0.0);
  std::vector<Count> x(5);
  for (int i = 0; i < reps; ++i) {
    sample_multinomial(rng, 30, pi, x);
    ASSERT_EQ(std::accumulate(x.begin(), x.end(), Count{0}), 30);
    for (int j = 0; j < 5; ++j) totals[j] += static_cast<double>(x[j]);
  }
  double chi2 = 0.0;
  for (int j = 0; j < 5; ++j) {
    const double expected = 30.0 * reps * pi[j];
    chi2 += (totals[j] - expected) * (totals[j] - expected) / expected;
  }
  EXPECT_GT(chi_square_upper_tail(chi2, 4.0), 1e-4);
}

TEST(Random, BinomialConcentration) {
  auto rng = make_stream(2, 0, 0, StreamPhase::Data);
  for (int i = 0; i < 20; ++i) {
    const CountVector c = sample_multinomial(rng, 1000000, ProbVector({0.5, 0.5}));
    EXPECT_NEAR(static_cast<double>(c[0]), 500000.0, 4.0 * std::sqrt(0.25e6));
  }
}
