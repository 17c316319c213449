#include <gtest/gtest.h>

#include <cmath>

#include "mhtest/distributions.hpp"

using namespace mhtest;

TEST(Distributions, TabulatedQuantiles) {
  EXPECT_NEAR(normal_quantile(0.95), 1.644854, 1e-6);
  EXPECT_NEAR(normal_quantile(0.975), 1.959964, 1e-6);
  EXPECT_NEAR(normal_quantile(0.99), 2.326348, 1e-6);
  EXPECT_NEAR(normal_quantile(0.5), 0.0, 1e-12);
  EXPECT_NEAR(normal_quantile(0.05), -1.644854, 1e-6);
}

TEST(Distributions, QuantileInvertsCdf) {
  for (double p = 1e-10; p < 1.0; p = p < 0.01 ? p * 10 : p + 0.01) {
    EXPECT_NEAR(normal_cdf(normal_quantile(p)), p, 1.5e-7 * std::max(p, 1e-3)) << p;
  }
}

TEST(Distributions, QuantileEdges) {
  EXPECT_EQ(normal_quantile(0.0), -INFINITY);
  EXPECT_EQ(normal_quantile(1.0), INFINITY);
  EXPECT_TRUE(std::isnan(normal_quantile(1.5)));
  EXPECT_TRUE(std::isnan(normal_quantile(-0.1)));
}

TEST(Distributions, UpperTail) {
  EXPECT_NEAR(normal_upper_tail(1.644854), 0.05, 1e-7);
  EXPECT_NEAR(normal_upper_tail(0.0), 0.5, 1e-15);
  EXPECT_NEAR(normal_upper_tail(10.0), 7.619853024160527e-24, 1e-30);
  EXPECT_NEAR(normal_cdf(-1.959964) + normal_upper_tail(1.959964), 0.05, 1e-7);
}

TEST(Distributions, ChiSquareTail) {
  EXPECT_NEAR(chi_square_upper_tail(3.841459, 1.0), 0.05, 1e-7);
  EXPECT_NEAR(chi_square_upper_tail(9.487729, 4.0), 0.05, 1e-7);
  EXPECT_NEAR(chi_square_upper_tail(2.0, 2.0), std::exp(-1.0), 1e-14);
  EXPECT_EQ(chi_square_upper_tail(0.0, 3.0), 1.0);
}
