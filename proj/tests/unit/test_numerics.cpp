#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <vector>

#include "ulc/numerics.hpp"

namespace ulc {
namespace {

TEST(LogFactorial, SmallAndLarge) {
  EXPECT_EQ(log_factorial(0), 0.0);
  EXPECT_EQ(log_factorial(1), 0.0);
  EXPECT_NEAR(log_factorial(5), std::log(120.0), 1e-15);
  double running = 0.0;
  for (std::int64_t n = 1; n <= 400; ++n) {
    running += std::log(static_cast<double>(n));
    EXPECT_NEAR(log_factorial(n), running, 1e-12 * running) << n;
  }
  EXPECT_THROW((void)log_factorial(-1), std::domain_error);
}

TEST(LogBinomial, PascalRule) {
  for (std::int64_t n = 1; n < 60; ++n) {
    for (std::int64_t k = 1; k < n; ++k) {
      const double lhs = std::exp(log_binomial_coefficient(n, k));
      const double rhs = std::exp(log_binomial_coefficient(n - 1, k - 1)) + std::exp(log_binomial_coefficient(n - 1, k));
      EXPECT_NEAR(lhs / rhs, 1.0, 1e-12);
    }
  }
}

TEST(LogSumExp, Basic) {
  const double inf = std::numeric_limits<double>::infinity();
  EXPECT_EQ(log_sum_exp(std::vector<double>{}), -inf);
  EXPECT_EQ(log_sum_exp(std::vector<double>{-inf, -inf}), -inf);
  EXPECT_NEAR(log_sum_exp(std::vector<double>{0.0, 0.0}), std::log(2.0), 1e-16);
  // Would overflow if exponentiated directly.
  EXPECT_NEAR(log_sum_exp(std::vector<double>{1000.0, 1000.0 + std::log(3.0)}), 1000.0 + std::log(4.0), 1e-12);
  EXPECT_NEAR(log_sum_exp(std::vector<double>{-1000.0, -inf}), -1000.0, 1e-12);
}

TEST(CompensatedSum, RecoversSmallTerms) {
  CompensatedSum s;
  s.add(1.0);
  for (int i = 0; i < 1000; ++i) {
    s.add(1e-17);
  }
  s.add(-1.0);
  EXPECT_NEAR(s.value(), 1e-14, 1e-26);
}

}  // namespace
}  // namespace ulc
