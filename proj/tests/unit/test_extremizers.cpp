#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "ulc/extremizers.hpp"
#include "ulc/pmf.hpp"

namespace ulc {
namespace {

TEST(Psi, Examples) {
  EXPECT_NEAR(psi(0, 2, 1.0), 2.5, 1e-15);
  for (double x : {0.0, 0.3, 2.0}) {
    EXPECT_NEAR(psi(-3, 1, x), 1.0 + x, 1e-15);
    EXPECT_EQ(psi(2, -1, x), 0.0);
  }
  EXPECT_EQ(psi(0, 4, 0.0), 1.0);
  EXPECT_EQ(psi(1, 4, 0.0), 0.0);
  EXPECT_EQ(psi(5, 3, 1.0), 0.0);
}

TEST(Psi, FrozenReferences) {
  EXPECT_NEAR(psi(0, 30, 1.0), std::numbers::e, 1e-15);
  EXPECT_NEAR(psi(5, 40, 10.0) / 21382.132461469468328, 1.0, 1e-14);
  EXPECT_NEAR(psi(0, 300, 100.0) / 2.6881171418161354484e43, 1.0, 1e-13);
}

TEST(Psi, LogDomainMatchesDirectSummation) {
  for (std::int64_t k = -2; k <= 12; ++k) {
    for (std::int64_t l = k; l < 30; ++l) {
      for (double x : {0.01, 0.3, 0.9}) {
        const double direct = psi_direct(k, l, x);
        EXPECT_NEAR(psi(k, l, x), direct, 1e-13 * std::max(direct, 1e-300)) << k << " " << l << " " << x;
      }
    }
  }
}

TEST(Psi, FiniteForLargeArguments) {
  for (double x : {1.0, 10.0, 50.0, 100.0}) {
    for (std::int64_t l : {50, 150, 300}) {
      const double value = psi(0, l, x);
      EXPECT_TRUE(std::isfinite(value) && value > 0.0) << x << " " << l;
    }
  }
}

TEST(Psi, DerivativeReducesIndices) {
  for (std::int64_t k : {0, 1, 3, 7}) {
    for (std::int64_t l : {k, k + 2, k + 15}) {
      for (double x : {0.2, 1.0, 4.0, 12.0}) {
        const double fd = oracle::central_difference([&](double u) { return psi(k, l, u); }, x, 1e-5 * x);
        const double exact = psi(k - 1, l - 1, x);
        if (exact == 0.0) {
          EXPECT_NEAR(fd, 0.0, 1e-9);
        } else {
          EXPECT_NEAR(fd / exact, 1.0, 1e-6) << k << " " << l << " " << x;
        }
      }
    }
  }
}

TEST(ExtremizerPmf, Examples) {
  EXPECT_EQ(extremizer_pmf({3.0, 4, 4}), DiscretePmf::point_mass(4));
  const auto pair = extremizer_pmf({1.0, 0, 1});
  EXPECT_NEAR(pair.masses()[0], 0.5, 1e-16);
  EXPECT_NEAR(pair.masses()[1], 0.5, 1e-16);
  EXPECT_THROW((void)extremizer_pmf({0.0, 0, 1}), std::invalid_argument);
  EXPECT_THROW((void)extremizer_pmf({1.0, 3, 1}), std::invalid_argument);
}

TEST(ExtremizerPmf, MeanIdentity) {
  EXPECT_NEAR(extremizer_mean({2.0, 1, 3}), 1.875, 1e-15);
  for (double p : {0.1, 1.0, 6.0}) {
    for (std::int64_t k : {0, 1, 4}) {
      for (std::int64_t l : {k, k + 1, k + 20}) {
        const ExtremizerParams params{p, k, l};
        EXPECT_NEAR(extremizer_mean(params), mean(extremizer_pmf(params)), 1e-13 * (1.0 + l));
      }
    }
  }
}

TEST(ExtremizerPmf, UlcEqualityAtInteriorPoints) {
  const auto pmf = extremizer_pmf({3.7, 2, 25});
  EXPECT_TRUE(is_ultra_log_concave(pmf));
  for (std::int64_t n = pmf.offset() + 1; n < pmf.last(); ++n) {
    const double lhs = static_cast<double>(n) * pmf.at(n) * pmf.at(n);
    const double rhs = static_cast<double>(n + 1) * pmf.at(n - 1) * pmf.at(n + 1);
    EXPECT_LE(std::abs(lhs - rhs), 1e-12 * lhs);
  }
}

TEST(FunctionF, FrozenValues) {
  const ExtremizerParams params{2.0, 1, 3};
  EXPECT_NEAR(f_value(params, 2.0), 0.42808101706367453858, 1e-14);
  EXPECT_NEAR(f_value(params, 0.5), 0.22565080980568086307, 1e-14);
  EXPECT_NEAR(f_prime(params, 2.0), 0.72794117647058823529, 1e-14);
  EXPECT_NEAR(f_second(params, 2.0), 0.43339100346020761246, 1e-14);
  // k = 0 exercises the Psi_{K,L} = Psi_{0,L} convention in f''.
  EXPECT_NEAR(f_second({1.5, 0, 4}, 1.3), 0.23127598077473438210, 1e-14);
}

TEST(FunctionF, VanishesToFirstOrderAtOne) {
  for (double p : {0.1, 0.5, 1.0, 2.0, 5.0, 10.0}) {
    for (std::int64_t k = 0; k <= 6; ++k) {
      for (std::int64_t l : {k, k + 1, k + 9}) {
        const ExtremizerParams params{p, k, l};
        EXPECT_NEAR(f_value(params, 1.0), 0.0, 1e-12);
        EXPECT_NEAR(f_prime(params, 1.0), 0.0, 1e-12);
      }
    }
  }
}

TEST(FunctionF, DerivativesMatchFiniteDifferences) {
  for (const ExtremizerParams params : {ExtremizerParams{2.0, 1, 3}, ExtremizerParams{0.5, 0, 6},
                                        ExtremizerParams{5.0, 2, 20}, ExtremizerParams{1.0, 1, 1}}) {
    for (int i = 0; i <= 40; ++i) {
      const double y = 0.1 + (10.0 - 0.1) * i / 40.0;
      const double h = 1e-4 * y;
      const double fd1 = oracle::central_difference([&](double u) { return f_value(params, u); }, y, h);
      const double fd2 = oracle::central_difference([&](double u) { return f_prime(params, u); }, y, h);
      const double d1 = f_prime(params, y);
      const double d2 = f_second(params, y);
      EXPECT_NEAR(fd1, d1, 1e-6 * std::max(1.0, std::abs(d1))) << params.tilt << " y=" << y;
      EXPECT_NEAR(fd2, d2, 1e-6 * std::max(1.0, std::abs(d2))) << params.tilt << " y=" << y;
    }
  }
}

TEST(FunctionF, NonnegativeAndConvex) {
  for (double p : {0.1, 1.0, 10.0}) {
    for (std::int64_t k : {0, 1, 2, 5}) {
      for (std::int64_t l : {k, k + 3, std::int64_t{30}}) {
        const ExtremizerParams params{p, k, l};
        for (int i = 0; i <= 200; ++i) {
          const double y = 0.01 + (20.0 - 0.01) * i / 200.0;
          EXPECT_GE(f_value(params, y), -1e-12);
          EXPECT_GE(f_second(params, y), -1e-10);
        }
      }
    }
  }
}

TEST(FunctionF, SecondDerivativeIsMeanMinusVarianceOfTiltedLaw) {
  // d^2/dy^2 log Psi_{k,l}(y p) = (Var(W) - E[W]) / y^2 for W ~ extremizer(y p).
  for (const ExtremizerParams params : {ExtremizerParams{2.0, 1, 3}, ExtremizerParams{1.5, 0, 4},
                                        ExtremizerParams{0.3, 5, 18}}) {
    for (double y : {0.2, 1.0, 3.5}) {
      const auto tilted = extremizer_pmf({y * params.tilt, params.k, params.l});
      const double expected = (mean(tilted) - variance(tilted)) / (y * y);
      EXPECT_NEAR(f_second(params, y), expected, 1e-11 * std::max(1.0, expected));
    }
  }
}

TEST(PsiLogConcavity, Examples) {
  EXPECT_TRUE(psi_log_concavity_check(0, 2, 1.0));
  for (std::int64_t k = 0; k <= 20; ++k) {
    EXPECT_TRUE(psi_log_concavity_check(k, k, 2.5));
  }
  for (std::int64_t k = 0; k <= 20; ++k) {
    for (std::int64_t l = k; l <= 40; ++l) {
      for (double x : {0.1, 1.0, 10.0}) {
        EXPECT_TRUE(psi_log_concavity_check(k, l, x)) << k << " " << l << " " << x;
      }
    }
  }
  EXPECT_THROW((void)psi_log_concavity_check(3, 2, 1.0), std::invalid_argument);
}

TEST(MgfDomination, PointMass) {
  const std::vector<double> grid = default_t_grid();
  for (std::int64_t k : {0, 1, 5, 20}) {
    const auto report = verify_mgf_domination({1.3, k, k}, grid);
    EXPECT_TRUE(report.holds) << k;
    EXPECT_LE(report.worst_gap, 0.0 + 1e-15);
  }
}

TEST(MgfDomination, SmallExtremizerAgainstDirectSums) {
  const ExtremizerParams params{2.0, 1, 3};
  const std::vector<double> grid{-2.0, -1.0, 0.0, 1.0, 2.0};
  const auto report = verify_mgf_domination(params, grid);
  EXPECT_TRUE(report.holds);
  // (3/8, 3/8, 1/4) on {1, 2, 3}, mean 15/8.
  for (double t : grid) {
    const double lhs = oracle::mgf_direct({3.0 / 8, 3.0 / 8, 1.0 / 4}, 1, t);
    const double rhs = std::exp(1.875 * std::expm1(t));
    EXPECT_LE(lhs, rhs * (1 + 1e-12)) << t;
  }
}

TEST(MgfDomination, NearPoissonGapShrinksWithSupport) {
  const std::vector<double> grid{-1.0, 0.5};
  double previous = -1.0;
  for (std::int64_t l : {10, 15, 20, 40}) {
    const auto report = verify_mgf_domination({5.0, 0, l}, grid);
    EXPECT_TRUE(report.holds);
    EXPECT_GT(report.worst_gap, previous);
    previous = report.worst_gap;
  }
  EXPECT_NEAR(previous, 0.0, 1e-9);
}

TEST(MgfDomination, RandomUlcBeyondExtremizers) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto pmf = random_ulc(seed, 40);
    const double mu = mean(pmf);
    for (double t : default_t_grid()) {
      EXPECT_LE(log_mgf(pmf, t), mu * std::expm1(t) + 1e-10) << "seed " << seed << " t " << t;
    }
  }
}

TEST(DefaultTGrid, Shape) {
  const auto grid = default_t_grid();
  ASSERT_EQ(grid.size(), 43u);
  EXPECT_EQ(grid.front(), -5.0);
  EXPECT_EQ(grid.back(), 5.0);
  EXPECT_EQ(grid[1], -2.0);
  EXPECT_EQ(grid[21], 0.0);
  EXPECT_EQ(grid[41], 2.0);
}

}  // namespace
}  // namespace ulc
