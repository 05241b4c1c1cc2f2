#include "ulc/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#if defined(ULC_HAVE_QUADMATH)
#include <quadmath.h>
#endif

namespace ulc {

namespace {

#if defined(ULC_HAVE_QUADMATH)
using wide_float = __float128;
wide_float wide_log1p(wide_float x) { return log1pq(x); }
#else
using wide_float = long double;
wide_float wide_log1p(wide_float x) { return std::log1p(x); }
#endif

double clamp_probability(double p) { return std::clamp(p, 0.0, 1.0); }

void require_positive(double value, const char* what) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw std::domain_error(std::string(what) + " must be positive and finite");
  }
}

void require_nonnegative(double value, const char* what) {
  if (!(value >= 0.0) || std::isnan(value)) {
    throw std::domain_error(std::string(what) + " must be nonnegative");
  }
}

// exp(-(t^2 / 2mu) h(+-t/mu))
double bennett_exponential(double mu, double t, double sign) {
  const double x = sign * t / mu;
  return clamp_probability(std::exp(-(t * t / (2.0 * mu)) * bennett_h(x)));
}

}  // namespace

double bennett_h_series(double x) {
  double sum = 0.0;
  double power = 1.0;
  for (int k = 0; k < 400; ++k) {
    const double term = power / ((k + 1.0) * (k + 2.0));
    sum += term;
    if (std::abs(term) <= 1e-17 * std::abs(sum)) {
      break;
    }
    power *= -x;
  }
  return 2.0 * sum;
}

double bennett_h_closed_form(double x) {
  if (x == 0.0) {
    return 1.0;
  }
  if (x == -1.0) {
    return 2.0;
  }
  if (std::isinf(x)) {
    return 0.0;
  }
  const wide_float w = x;
  const wide_float numerator = (1 + w) * wide_log1p(w) - w;
  return static_cast<double>(2 * numerator / (w * w));
}

double bennett_h(double x) {
  if (std::isnan(x) || x < -1.0) {
    throw std::domain_error("bennett_h: x must be >= -1");
  }
  if (std::abs(x) < kBennettSeriesCrossover) {
    return bennett_h_series(x);
  }
  return bennett_h_closed_form(x);
}

double bennett_upper_bound(double mu, double t) {
  require_positive(mu, "mean");
  require_nonnegative(t, "t");
  return bennett_exponential(mu, t, 1.0);
}

double bennett_lower_bound(double mu, double t) {
  require_positive(mu, "mean");
  require_nonnegative(t, "t");
  if (t > mu) {
    return 0.0;
  }
  if (t == mu) {
    return clamp_probability(std::exp(-mu));
  }
  return bennett_exponential(mu, t, -1.0);
}

double relaxed_upper_bound(double mu, double t) {
  require_positive(mu, "mean");
  require_nonnegative(t, "t");
  return clamp_probability(std::exp(-t * t / (2.0 * (t + mu))));
}

double relaxed_lower_bound(double mu, double t) {
  require_positive(mu, "mean");
  require_nonnegative(t, "t");
  return clamp_probability(std::exp(-t * t / (2.0 * mu)));
}

double c_log_concave_bound(double c, double t) {
  require_positive(c, "c");
  require_nonnegative(t, "t");
  return clamp_probability(std::exp(-(c * t * t / 2.0) * bennett_h(c * t)));
}

double chernoff_upper_oracle(const DiscretePmf& pmf, double t, const ChernoffGrid& grid) {
  require_nonnegative(t, "t");
  if (grid.points < 2 || !(grid.s_min > 0.0) || !(grid.s_max > grid.s_min)) {
    throw std::invalid_argument("chernoff_upper_oracle: need >= 2 points on 0 < s_min < s_max");
  }
  const double level = mean(pmf) + t;
  auto exponent = [&](double s) { return -s * level + log_mgf(pmf, s); };

  const double log_lo = std::log(grid.s_min);
  const double step = (std::log(grid.s_max) - log_lo) / static_cast<double>(grid.points - 1);
  auto grid_point = [&](std::size_t i) { return std::exp(log_lo + step * static_cast<double>(i)); };

  std::size_t best_index = 0;
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < grid.points; ++i) {
    const double value = exponent(grid_point(i));
    if (value < best) {
      best = value;
      best_index = i;
    }
  }

  if (grid.refine) {
    // The exponent is convex in s, so the minimum lies between the grid
    // neighbours of the best grid point.
    double a = grid_point(best_index == 0 ? 0 : best_index - 1);
    double b = grid_point(std::min(best_index + 1, grid.points - 1));
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = exponent(c);
    double fd = exponent(d);
    for (int iter = 0; iter < 200 && (b - a) > 1e-15 * b; ++iter) {
      if (fc < fd) {
        b = d;
        d = c;
        fd = fc;
        c = b - inv_phi * (b - a);
        fc = exponent(c);
      } else {
        a = c;
        c = d;
        fc = fd;
        d = a + inv_phi * (b - a);
        fd = exponent(d);
      }
    }
    best = std::min({best, fc, fd});
  }
  return clamp_probability(std::exp(best));
}

TailBoundReport tail_bound_report(double mu, double t, TailSide side, std::optional<double> c) {
  TailBoundReport report;
  report.t = t;
  report.side = side;
  if (side == TailSide::upper) {
    report.bennett = bennett_upper_bound(mu, t);
    report.relaxed = relaxed_upper_bound(mu, t);
    if (c) {
      report.c_log_concave = TailBoundReport::CBound{*c, c_log_concave_bound(*c, t)};
    }
  } else {
    report.bennett = bennett_lower_bound(mu, t);
    report.relaxed = relaxed_lower_bound(mu, t);
  }
  return report;
}

TailBoundReport tail_bound_report(const DiscretePmf& pmf, double t, TailSide side, std::optional<double> c) {
  auto report = tail_bound_report(mean(pmf), t, side, c);
  report.exact = side == TailSide::upper ? upper_tail(pmf, t) : lower_tail(pmf, t);
  return report;
}

VarianceCheck check_variance(const DiscretePmf& pmf, double rel_tol) {
  if (const auto bad = first_ulc_violation(pmf, rel_tol)) {
    throw std::invalid_argument("check_variance: input is not ultra log-concave (first violation at n=" +
                                std::to_string(*bad) + ")");
  }
  VarianceCheck check{mean(pmf), variance(pmf), false};
  check.holds = check.variance <= check.mean + 1e-12;
  return check;
}

}  // namespace ulc
