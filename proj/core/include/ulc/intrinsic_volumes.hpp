#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "ulc/pmf.hpp"

namespace ulc {

/// Axis-parallel box with the given side lengths; dimension = sides.size().
struct Box {
  std::vector<double> sides;
};

/// The cube r[0,1]^n.
struct ScaledCube {
  double r;
  std::int64_t n;
};

/// Euclidean ball of the given radius in R^n.
struct Ball {
  double radius;
  std::int64_t n;
};

using ConvexBody = std::variant<Box, ScaledCube, Ball>;

/// Throws std::invalid_argument on a nonpositive length or n < 1.
void validate(const ConvexBody& body);

[[nodiscard]] std::int64_t dimension(const ConvexBody& body);

struct IntrinsicVolumeProfile {
  std::int64_t dim = 0;
  /// V_0, ..., V_n. May overflow to inf for very large bodies; the
  /// normalized sequence is computed independently in log space.
  std::vector<double> volumes;
  /// Wills functional, sum of V_j.
  double wills = 0.0;
  /// V_j / W(K).
  std::vector<double> normalized;
};

/// e_0, ..., e_n of the given values (e_0 = 1), by the product recurrence
/// e_j <- e_j + a_i e_{j-1}.
[[nodiscard]] std::vector<double> elementary_symmetric(std::span<const double> values);

/// The same recurrence in log space for positive values.
[[nodiscard]] std::vector<double> log_elementary_symmetric(std::span<const double> values);

/// Volume of the unit ball in R^m.
[[nodiscard]] double unit_ball_volume(std::int64_t m);

[[nodiscard]] IntrinsicVolumeProfile intrinsic_volumes(const ConvexBody& body);

/// P(Z_K = j) = normalized[j]. Zeros from underflow at either end are trimmed;
/// an interior zero throws std::invalid_argument.
[[nodiscard]] DiscretePmf zk_pmf(const IntrinsicVolumeProfile& profile);

struct TwoSidedTailCheck {
  double t = 0.0;
  /// t * sqrt(n)
  double deviation = 0.0;
  double mean = 0.0;
  double upper_exact = 0.0;
  double lower_exact = 0.0;
  /// P(|Z_K - E Z_K| >= t sqrt(n))
  double exact = 0.0;
  /// 2 e^{-t^2/2}
  double bound = 0.0;
  /// n < t sqrt(n) + E[Z_K]: the upper event is empty.
  bool upper_trivial = false;
  /// Intermediate one-sided bounds from the sub-gamma / sub-Gaussian estimates.
  double upper_bound = 0.0;
  double lower_bound = 0.0;
  /// 2 e^{-t^2 sqrt(n) / (2(t+1))}, reported when E[Z_K] <= sqrt(n).
  std::optional<double> small_mean_bound;
  bool holds = false;
};

/// Exact two-sided deviation probability at t sqrt(n) against 2 e^{-t^2/2}.
/// Requires 0 <= t <= sqrt(n); throws std::invalid_argument otherwise.
[[nodiscard]] TwoSidedTailCheck two_sided_tail_check(const IntrinsicVolumeProfile& profile, double t);

struct PoissonLimitRow {
  std::int64_t n;
  double r;
  double tv_distance;
};

struct PoissonLimitReport {
  double lambda;
  std::vector<PoissonLimitRow> rows;
  /// rows[i].tv_distance strictly decreasing in input order.
  bool decreasing;
};

/// For each n, Z_K of the cube (lambda / (n - lambda))[0,1]^n is Binomial(n, lambda/n);
/// reports its total-variation distance to Poisson(lambda) (truncated at the
/// default mass-loss budget). Every n must exceed lambda.
[[nodiscard]] PoissonLimitReport poisson_limit(double lambda, std::span<const std::int64_t> n_values);

}  // namespace ulc
