#include "ulc/extremizers.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "ulc/numerics.hpp"

namespace ulc {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// exp(log_psi(a) - log_psi(b)) with 0 for an empty numerator.
double psi_ratio(std::int64_t num_lower, std::int64_t num_upper, std::int64_t den_lower, std::int64_t den_upper,
                 double x) {
  const double num = log_psi(num_lower, num_upper, x);
  if (num == kNegInf) {
    return 0.0;
  }
  return std::exp(num - log_psi(den_lower, den_upper, x));
}

void require_positive_y(double y) {
  if (!(y > 0.0) || !std::isfinite(y)) {
    throw std::domain_error("y must be positive and finite");
  }
}

}  // namespace

void ExtremizerParams::validate() const {
  if (!(tilt > 0.0) || !std::isfinite(tilt)) {
    throw std::invalid_argument("extremizer tilt must be positive and finite");
  }
  if (k < 0 || l < k) {
    throw std::invalid_argument("extremizer support needs 0 <= k <= l");
  }
}

double log_psi(std::int64_t lower, std::int64_t upper, double x) {
  if (!(x >= 0.0)) {
    throw std::domain_error("psi: x must be nonnegative");
  }
  if (upper < 0) {
    return kNegInf;
  }
  const std::int64_t first = std::max<std::int64_t>(lower, 0);
  if (first > upper) {
    return kNegInf;
  }
  if (x == 0.0) {
    return first == 0 ? 0.0 : kNegInf;
  }
  const double log_x = std::log(x);
  std::vector<double> terms;
  terms.reserve(static_cast<std::size_t>(upper - first + 1));
  for (std::int64_t n = first; n <= upper; ++n) {
    terms.push_back(static_cast<double>(n) * log_x - log_factorial(n));
  }
  return log_sum_exp(terms);
}

double psi(std::int64_t lower, std::int64_t upper, double x) { return std::exp(log_psi(lower, upper, x)); }

double psi_direct(std::int64_t lower, std::int64_t upper, double x) {
  if (!(x >= 0.0)) {
    throw std::domain_error("psi: x must be nonnegative");
  }
  if (upper < 0) {
    return 0.0;
  }
  const std::int64_t first = std::max<std::int64_t>(lower, 0);
  double term = 1.0;  // x^n / n! at n = 0
  double sum = 0.0;
  for (std::int64_t n = 0; n <= upper; ++n) {
    if (n > 0) {
      term *= x / static_cast<double>(n);
    }
    if (n >= first) {
      sum += term;
    }
  }
  return sum;
}

DiscretePmf extremizer_pmf(const ExtremizerParams& params) {
  params.validate();
  const double log_tilt = std::log(params.tilt);
  std::vector<double> log_w;
  log_w.reserve(static_cast<std::size_t>(params.l - params.k + 1));
  for (std::int64_t n = params.k; n <= params.l; ++n) {
    log_w.push_back(static_cast<double>(n) * log_tilt - log_factorial(n));
  }
  return DiscretePmf::from_log_weights(params.k, log_w);
}

double extremizer_mean(const ExtremizerParams& params) {
  params.validate();
  return params.tilt * psi_ratio(params.k - 1, params.l - 1, params.k, params.l, params.tilt);
}

double f_value(const ExtremizerParams& params, double y) {
  require_positive_y(y);
  const double mu = extremizer_mean(params);
  return mu * (y - 1.0) - log_psi(params.k, params.l, y * params.tilt) + log_psi(params.k, params.l, params.tilt);
}

double f_prime(const ExtremizerParams& params, double y) {
  require_positive_y(y);
  const double x = y * params.tilt;
  return extremizer_mean(params) - params.tilt * psi_ratio(params.k - 1, params.l - 1, params.k, params.l, x);
}

double f_second(const ExtremizerParams& params, double y) {
  require_positive_y(y);
  params.validate();
  const double x = y * params.tilt;
  const double r1 = psi_ratio(params.k - 1, params.l - 1, params.k, params.l, x);
  const double r2 = psi_ratio(params.k - 2, params.l - 2, params.k, params.l, x);
  return params.tilt * params.tilt * (r1 * r1 - r2);
}

bool psi_log_concavity_check(std::int64_t k, std::int64_t l, double x) {
  if (k < 0 || l < k) {
    throw std::invalid_argument("psi_log_concavity_check: need 0 <= k <= l");
  }
  if (!(x > 0.0)) {
    throw std::domain_error("psi_log_concavity_check: x must be positive");
  }
  const double lhs = log_psi(k, l, x) + log_psi(k - 2, l - 2, x);
  if (lhs == kNegInf) {
    return true;
  }
  return lhs <= 2.0 * log_psi(k - 1, l - 1, x) + std::log1p(1e-12);
}

std::vector<double> default_t_grid() {
  std::vector<double> grid;
  grid.reserve(43);
  grid.push_back(-5.0);
  for (int i = 0; i <= 40; ++i) {
    grid.push_back(static_cast<double>(i - 20) / 10.0);
  }
  grid.push_back(5.0);
  return grid;
}

MgfDominationReport verify_mgf_domination(const ExtremizerParams& params, std::span<const double> t_grid,
                                          double rel_tol) {
  const DiscretePmf pmf = extremizer_pmf(params);
  const double mu = mean(pmf);
  MgfDominationReport report{params, std::vector<double>(t_grid.begin(), t_grid.end()),
                             -std::numeric_limits<double>::infinity(), 0.0, true};
  for (double t : t_grid) {
    const double log_ratio = log_mgf(pmf, t) - mu * std::expm1(t);
    const double gap = std::expm1(log_ratio);
    if (gap > report.worst_gap) {
      report.worst_gap = gap;
      report.worst_t = t;
    }
  }
  report.holds = t_grid.empty() || report.worst_gap <= rel_tol;
  if (t_grid.empty()) {
    report.worst_gap = 0.0;
  }
  return report;
}

}  // namespace ulc
