#pragma once

#include <cstdint>
#include <span>

namespace ulc {

/// log(n!) via lgamma; exact table for small n.
[[nodiscard]] double log_factorial(std::int64_t n);

/// log C(n, k) for 0 <= k <= n.
[[nodiscard]] double log_binomial_coefficient(std::int64_t n, std::int64_t k);

/// Natural log of the volume of the m-dimensional unit Euclidean ball,
/// log(pi^{m/2} / Gamma(m/2 + 1)). kappa_0 = 1.
[[nodiscard]] double log_unit_ball_volume(std::int64_t m);

/// log(sum_i exp(x_i)) with the maximum factored out and the remaining
/// exponentials accumulated with Neumaier compensation. Returns -inf for an
/// empty input or one made entirely of -inf.
[[nodiscard]] double log_sum_exp(std::span<const double> log_terms);

/// Compensated (Neumaier) summation.
class CompensatedSum {
 public:
  void add(double value) noexcept;
  [[nodiscard]] double value() const noexcept { return sum_ + compensation_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

}  // namespace ulc
