#include "ulc/pmf.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>

#include "ulc/numerics.hpp"

namespace ulc {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr double kThresholdSlack = 1e-12;

// log-weights further than this below the peak are trimmed by random_ulc so
// that masses, and products of two masses, stay normal doubles.
constexpr double kRandomUlcLogFloor = 300.0;

std::string format_number(double value) {
  std::ostringstream out;
  out.precision(12);
  out << value;
  return out.str();
}

double threshold_slack(double threshold) {
  return kThresholdSlack * std::max(1.0, std::abs(threshold));
}

// Uniform on [0, 1) from the top 53 bits; portable across standard libraries.
double unit_uniform(std::mt19937_64& engine) {
  return static_cast<double>(engine() >> 11) * 0x1.0p-53;
}

std::int64_t uniform_index(std::mt19937_64& engine, std::int64_t upper_inclusive) {
  const auto span = static_cast<std::uint64_t>(upper_inclusive) + 1;
  return static_cast<std::int64_t>(engine() % span);
}

std::optional<std::int64_t> first_violation(const DiscretePmf& pmf, double rel_tol, bool poisson_reference) {
  const auto masses = pmf.masses();
  if (masses.size() < 3) {
    return std::nullopt;
  }
  auto log_q = [&](std::size_t i) {
    const std::int64_t n = pmf.offset() + static_cast<std::int64_t>(i);
    const double log_p = std::log(masses[i]);
    return poisson_reference ? log_p + log_factorial(n) : log_p;
  };
  for (std::size_t i = 1; i + 1 < masses.size(); ++i) {
    if (2.0 * log_q(i) < log_q(i - 1) + log_q(i + 1) - rel_tol) {
      return pmf.offset() + static_cast<std::int64_t>(i);
    }
  }
  return std::nullopt;
}

}  // namespace

DiscretePmf::DiscretePmf(std::int64_t offset, std::vector<double> masses)
    : offset_(offset), masses_(std::move(masses)) {
  if (offset_ < 0) {
    throw std::invalid_argument("offset must be nonnegative, got " + std::to_string(offset_));
  }
  if (masses_.empty()) {
    throw std::invalid_argument("masses must be nonempty");
  }
  CompensatedSum total;
  for (std::size_t i = 0; i < masses_.size(); ++i) {
    const double m = masses_[i];
    if (!std::isfinite(m) || m <= 0.0 || m > 1.0) {
      throw std::invalid_argument("mass at n=" + std::to_string(offset_ + static_cast<std::int64_t>(i)) +
                                  " is " + format_number(m) + "; masses must lie in (0, 1]");
    }
    total.add(m);
  }
  if (std::abs(total.value() - 1.0) > kNormalizationTolerance) {
    throw std::invalid_argument("masses sum to " + format_number(total.value()) + ", not 1");
  }
}

DiscretePmf DiscretePmf::from_weights(std::int64_t offset, std::span<const double> weights) {
  CompensatedSum total;
  for (double w : weights) {
    if (!std::isfinite(w) || w <= 0.0) {
      throw std::invalid_argument("weights must be finite and strictly positive");
    }
    total.add(w);
  }
  std::vector<double> masses(weights.begin(), weights.end());
  for (double& m : masses) {
    m /= total.value();
  }
  return DiscretePmf(offset, std::move(masses));
}

DiscretePmf DiscretePmf::from_log_weights(std::int64_t offset, std::span<const double> log_weights) {
  const double log_total = log_sum_exp(log_weights);
  if (!std::isfinite(log_total)) {
    throw std::invalid_argument("log-weights must be finite");
  }
  std::vector<double> masses;
  masses.reserve(log_weights.size());
  for (double lw : log_weights) {
    masses.push_back(std::exp(lw - log_total));
  }
  return DiscretePmf(offset, std::move(masses));
}

DiscretePmf DiscretePmf::point_mass(std::int64_t at) { return DiscretePmf(at, {1.0}); }

double DiscretePmf::at(std::int64_t n) const noexcept {
  if (n < offset_ || n > last()) {
    return 0.0;
  }
  return masses_[static_cast<std::size_t>(n - offset_)];
}

double mean(const DiscretePmf& pmf) {
  CompensatedSum sum;
  const auto masses = pmf.masses();
  for (std::size_t i = 0; i < masses.size(); ++i) {
    sum.add(static_cast<double>(pmf.offset() + static_cast<std::int64_t>(i)) * masses[i]);
  }
  return sum.value();
}

double variance(const DiscretePmf& pmf) {
  const double mu = mean(pmf);
  CompensatedSum sum;
  const auto masses = pmf.masses();
  for (std::size_t i = 0; i < masses.size(); ++i) {
    const double d = static_cast<double>(pmf.offset() + static_cast<std::int64_t>(i)) - mu;
    sum.add(d * d * masses[i]);
  }
  return std::max(0.0, sum.value());
}

double log_mgf(const DiscretePmf& pmf, double t) {
  if (!std::isfinite(t)) {
    throw std::domain_error("log_mgf: t must be finite");
  }
  const auto masses = pmf.masses();
  std::vector<double> terms(masses.size());
  for (std::size_t i = 0; i < masses.size(); ++i) {
    const auto n = static_cast<double>(pmf.offset() + static_cast<std::int64_t>(i));
    terms[i] = t * n + std::log(masses[i]);
  }
  return log_sum_exp(terms);
}

double mgf(const DiscretePmf& pmf, double t) {
  const double log_value = log_mgf(pmf, t);
  if (log_value > std::log(std::numeric_limits<double>::max())) {
    throw std::overflow_error("mgf: E[e^{tX}] exceeds the double range (log = " + format_number(log_value) + ")");
  }
  return std::exp(log_value);
}

double upper_tail(const DiscretePmf& pmf, double t) {
  const double threshold = mean(pmf) + t;
  const double cut = threshold - threshold_slack(threshold);
  const auto masses = pmf.masses();
  CompensatedSum sum;
  for (std::size_t i = masses.size(); i-- > 0;) {
    const auto n = static_cast<double>(pmf.offset() + static_cast<std::int64_t>(i));
    if (n < cut) {
      break;
    }
    sum.add(masses[i]);
  }
  return std::min(1.0, sum.value());
}

double lower_tail(const DiscretePmf& pmf, double t) {
  const double threshold = mean(pmf) - t;
  const double cut = threshold + threshold_slack(threshold);
  const auto masses = pmf.masses();
  CompensatedSum sum;
  for (std::size_t i = 0; i < masses.size(); ++i) {
    const auto n = static_cast<double>(pmf.offset() + static_cast<std::int64_t>(i));
    if (n > cut) {
      break;
    }
    sum.add(masses[i]);
  }
  return std::min(1.0, sum.value());
}

std::optional<std::int64_t> first_log_concavity_violation(const DiscretePmf& pmf, double rel_tol) {
  return first_violation(pmf, rel_tol, false);
}

std::optional<std::int64_t> first_ulc_violation(const DiscretePmf& pmf, double rel_tol) {
  return first_violation(pmf, rel_tol, true);
}

bool is_log_concave(const DiscretePmf& pmf, double rel_tol) {
  return !first_log_concavity_violation(pmf, rel_tol).has_value();
}

bool is_ultra_log_concave(const DiscretePmf& pmf, double rel_tol) {
  return !first_ulc_violation(pmf, rel_tol).has_value();
}

DiscretePmf convolve(const DiscretePmf& a, const DiscretePmf& b) {
  const auto ma = a.masses();
  const auto mb = b.masses();
  std::vector<double> log_a(ma.size());
  std::vector<double> log_b(mb.size());
  std::transform(ma.begin(), ma.end(), log_a.begin(), [](double m) { return std::log(m); });
  std::transform(mb.begin(), mb.end(), log_b.begin(), [](double m) { return std::log(m); });

  const std::size_t out_size = ma.size() + mb.size() - 1;
  std::vector<double> log_c(out_size);
  std::vector<double> terms;
  for (std::size_t n = 0; n < out_size; ++n) {
    const std::size_t lo = n >= mb.size() ? n - mb.size() + 1 : 0;
    const std::size_t hi = std::min(n, ma.size() - 1);
    terms.clear();
    for (std::size_t i = lo; i <= hi; ++i) {
      terms.push_back(log_a[i] + log_b[n - i]);
    }
    log_c[n] = log_sum_exp(terms);
  }

  const double log_floor = std::log(std::numeric_limits<double>::min());
  std::size_t first = 0;
  std::size_t last = out_size;
  while (first + 1 < last && log_c[first] < log_floor) {
    ++first;
  }
  while (last - 1 > first && log_c[last - 1] < log_floor) {
    --last;
  }
  const std::span<const double> kept(log_c.data() + first, last - first);
  return DiscretePmf::from_log_weights(a.offset() + b.offset() + static_cast<std::int64_t>(first), kept);
}

DiscretePmf make_binomial(std::int64_t n, double p) {
  if (n < 1) {
    throw std::invalid_argument("make_binomial: n must be >= 1");
  }
  if (!(p > 0.0 && p < 1.0)) {
    throw std::invalid_argument("make_binomial: p must lie in (0, 1); build point masses explicitly");
  }
  const double log_p = std::log(p);
  const double log_q = std::log1p(-p);
  std::vector<double> log_w(static_cast<std::size_t>(n + 1));
  for (std::int64_t j = 0; j <= n; ++j) {
    log_w[static_cast<std::size_t>(j)] =
        log_binomial_coefficient(n, j) + static_cast<double>(j) * log_p + static_cast<double>(n - j) * log_q;
  }
  return DiscretePmf::from_log_weights(0, log_w);
}

DiscretePmf make_truncated_poisson(double lambda, std::int64_t k, std::int64_t l) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    throw std::invalid_argument("make_truncated_poisson: lambda must be positive and finite");
  }
  if (k < 0 || l < k) {
    throw std::invalid_argument("make_truncated_poisson: need 0 <= k <= l");
  }
  const double log_lambda = std::log(lambda);
  std::vector<double> log_w(static_cast<std::size_t>(l - k + 1));
  for (std::int64_t n = k; n <= l; ++n) {
    log_w[static_cast<std::size_t>(n - k)] = static_cast<double>(n) * log_lambda - log_factorial(n);
  }
  return DiscretePmf::from_log_weights(k, log_w);
}

DiscretePmf make_poisson(double lambda, double mass_loss) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    throw std::invalid_argument("make_poisson: lambda must be positive and finite");
  }
  if (!(mass_loss > 0.0 && mass_loss < 1.0)) {
    throw std::invalid_argument("make_poisson: mass_loss must lie in (0, 1)");
  }
  // Walk up until the remaining tail P(N > L) falls below the budget. The tail
  // past L is bounded by the geometric series of term ratios lambda / (n + 1).
  const double log_lambda = std::log(lambda);
  const double log_budget = std::log(mass_loss);
  std::int64_t last = static_cast<std::int64_t>(std::ceil(lambda));
  for (;; ++last) {
    const std::int64_t next = last + 1;
    const double ratio = lambda / static_cast<double>(next + 1);
    if (ratio >= 1.0) {
      continue;
    }
    const double log_next = -lambda + static_cast<double>(next) * log_lambda - log_factorial(next);
    if (log_next - std::log1p(-ratio) < log_budget) {
      break;
    }
  }
  return make_truncated_poisson(lambda, 0, last);
}

DiscretePmf make_geometric(double ratio, std::int64_t last) {
  if (!(ratio > 0.0) || !std::isfinite(ratio)) {
    throw std::invalid_argument("make_geometric: ratio must be positive");
  }
  if (last < 0) {
    throw std::invalid_argument("make_geometric: last must be >= 0");
  }
  std::vector<double> log_w(static_cast<std::size_t>(last + 1));
  for (std::int64_t n = 0; n <= last; ++n) {
    log_w[static_cast<std::size_t>(n)] = static_cast<double>(n) * std::log(ratio);
  }
  return DiscretePmf::from_log_weights(0, log_w);
}

DiscretePmf random_ulc(std::uint64_t seed, std::int64_t max_support) {
  if (max_support < 1) {
    throw std::invalid_argument("random_ulc: max_support must be >= 1");
  }
  std::mt19937_64 engine(seed);
  std::int64_t k = uniform_index(engine, max_support);
  std::int64_t l = uniform_index(engine, max_support);
  if (k > l) {
    std::swap(k, l);
  }
  const double slope_lo = -2.0;
  const double slope_hi = std::log(static_cast<double>(max_support)) + 1.0;
  double slope = slope_lo + (slope_hi - slope_lo) * unit_uniform(engine);

  std::vector<double> log_w;
  log_w.reserve(static_cast<std::size_t>(l - k + 1));
  double b = 0.0;
  for (std::int64_t n = k; n <= l; ++n) {
    log_w.push_back(b - log_factorial(n));
    b += slope;
    slope -= 2.0 * unit_uniform(engine);
  }

  const double peak = *std::max_element(log_w.begin(), log_w.end());
  auto first = log_w.begin();
  auto last = log_w.end();
  while (*first < peak - kRandomUlcLogFloor) {
    ++first;
  }
  while (*(last - 1) < peak - kRandomUlcLogFloor) {
    --last;
  }
  const auto trimmed_offset = k + (first - log_w.begin());
  return DiscretePmf::from_log_weights(trimmed_offset, std::span<const double>(&*first, static_cast<std::size_t>(last - first)));
}

double total_variation(const DiscretePmf& a, const DiscretePmf& b) {
  const std::int64_t lo = std::min(a.offset(), b.offset());
  const std::int64_t hi = std::max(a.last(), b.last());
  CompensatedSum sum;
  for (std::int64_t n = lo; n <= hi; ++n) {
    sum.add(std::abs(a.at(n) - b.at(n)));
  }
  return 0.5 * sum.value();
}

}  // namespace ulc
