#include "ulc/numerics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace ulc {

namespace {

// n! is exactly representable in double through 22!.
constexpr std::int64_t kFactorialTableSize = 23;

std::array<double, kFactorialTableSize> make_log_factorial_table() {
  std::array<double, kFactorialTableSize> table{};
  double factorial = 1.0;
  table[0] = 0.0;
  for (std::int64_t n = 1; n < kFactorialTableSize; ++n) {
    factorial *= static_cast<double>(n);
    table[static_cast<std::size_t>(n)] = std::log(factorial);
  }
  return table;
}

const std::array<double, kFactorialTableSize>& log_factorial_table() {
  static const auto table = make_log_factorial_table();
  return table;
}

}  // namespace

void CompensatedSum::add(double value) noexcept {
  const double t = sum_ + value;
  if (std::abs(sum_) >= std::abs(value)) {
    compensation_ += (sum_ - t) + value;
  } else {
    compensation_ += (value - t) + sum_;
  }
  sum_ = t;
}

double log_factorial(std::int64_t n) {
  if (n < 0) {
    throw std::domain_error("log_factorial: negative argument");
  }
  if (n < kFactorialTableSize) {
    return log_factorial_table()[static_cast<std::size_t>(n)];
  }
  return std::lgamma(static_cast<double>(n) + 1.0);
}

double log_binomial_coefficient(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) {
    throw std::domain_error("log_binomial_coefficient: k outside [0, n]");
  }
  return log_factorial(n) - log_factorial(k) - log_factorial(n - k);
}

double log_unit_ball_volume(std::int64_t m) {
  if (m < 0) {
    throw std::domain_error("log_unit_ball_volume: negative dimension");
  }
  const double half = 0.5 * static_cast<double>(m);
  return half * std::log(std::numbers::pi) - std::lgamma(half + 1.0);
}

double log_sum_exp(std::span<const double> log_terms) {
  constexpr double kNegInf = -std::numeric_limits<double>::infinity();
  if (log_terms.empty()) {
    return kNegInf;
  }
  const double peak = *std::max_element(log_terms.begin(), log_terms.end());
  if (peak == kNegInf) {
    return kNegInf;
  }
  if (std::isinf(peak)) {
    return peak;
  }
  CompensatedSum sum;
  for (double term : log_terms) {
    sum.add(std::exp(term - peak));
  }
  return peak + std::log(sum.value());
}

}  // namespace ulc
