#include "ulc/intrinsic_volumes.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "ulc/bounds.hpp"
#include "ulc/numerics.hpp"

namespace ulc {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void require_length(double value, const char* what) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw std::invalid_argument(std::string(what) + " must be positive and finite");
  }
}

void require_dimension(std::int64_t n) {
  if (n < 1) {
    throw std::invalid_argument("dimension must be >= 1");
  }
}

std::vector<double> log_intrinsic_volumes(const ConvexBody& body) {
  return std::visit(
      overloaded{
          [](const Box& box) { return log_elementary_symmetric(box.sides); },
          [](const ScaledCube& cube) {
            std::vector<double> out(static_cast<std::size_t>(cube.n + 1));
            const double log_r = std::log(cube.r);
            for (std::int64_t j = 0; j <= cube.n; ++j) {
              out[static_cast<std::size_t>(j)] = log_binomial_coefficient(cube.n, j) + static_cast<double>(j) * log_r;
            }
            return out;
          },
          [](const Ball& ball) {
            // V_j(R B^n) = C(n, j) kappa_n / kappa_{n-j} R^j
            std::vector<double> out(static_cast<std::size_t>(ball.n + 1));
            const double log_radius = std::log(ball.radius);
            const double log_kappa_n = log_unit_ball_volume(ball.n);
            for (std::int64_t j = 0; j <= ball.n; ++j) {
              out[static_cast<std::size_t>(j)] = log_binomial_coefficient(ball.n, j) + log_kappa_n -
                                                 log_unit_ball_volume(ball.n - j) +
                                                 static_cast<double>(j) * log_radius;
            }
            return out;
          },
      },
      body);
}

}  // namespace

void validate(const ConvexBody& body) {
  std::visit(overloaded{
                 [](const Box& box) {
                   if (box.sides.empty()) {
                     throw std::invalid_argument("box needs at least one side");
                   }
                   for (double side : box.sides) {
                     require_length(side, "box side");
                   }
                 },
                 [](const ScaledCube& cube) {
                   require_length(cube.r, "cube scale r");
                   require_dimension(cube.n);
                 },
                 [](const Ball& ball) {
                   require_length(ball.radius, "ball radius");
                   require_dimension(ball.n);
                 },
             },
             body);
}

std::int64_t dimension(const ConvexBody& body) {
  return std::visit(overloaded{
                        [](const Box& box) { return static_cast<std::int64_t>(box.sides.size()); },
                        [](const ScaledCube& cube) { return cube.n; },
                        [](const Ball& ball) { return ball.n; },
                    },
                    body);
}

std::vector<double> elementary_symmetric(std::span<const double> values) {
  std::vector<double> e(values.size() + 1, 0.0);
  e[0] = 1.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    for (std::size_t j = i + 1; j >= 1; --j) {
      e[j] += values[i] * e[j - 1];
    }
  }
  return e;
}

std::vector<double> log_elementary_symmetric(std::span<const double> values) {
  std::vector<double> e(values.size() + 1, kNegInf);
  e[0] = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!(values[i] > 0.0)) {
      throw std::domain_error("log_elementary_symmetric: values must be positive");
    }
    const double log_value = std::log(values[i]);
    for (std::size_t j = i + 1; j >= 1; --j) {
      const double pair[2] = {e[j], log_value + e[j - 1]};
      e[j] = log_sum_exp(pair);
    }
  }
  return e;
}

double unit_ball_volume(std::int64_t m) { return std::exp(log_unit_ball_volume(m)); }

IntrinsicVolumeProfile intrinsic_volumes(const ConvexBody& body) {
  validate(body);
  const std::vector<double> log_v = log_intrinsic_volumes(body);
  const double log_wills = log_sum_exp(log_v);

  IntrinsicVolumeProfile profile;
  profile.dim = dimension(body);
  profile.wills = std::exp(log_wills);
  profile.volumes.reserve(log_v.size());
  profile.normalized.reserve(log_v.size());
  for (double lv : log_v) {
    profile.volumes.push_back(std::exp(lv));
    profile.normalized.push_back(std::exp(lv - log_wills));
  }
  return profile;
}

DiscretePmf zk_pmf(const IntrinsicVolumeProfile& profile) {
  const auto& w = profile.normalized;
  std::size_t first = 0;
  std::size_t last = w.size();
  while (first < last && w[first] == 0.0) {
    ++first;
  }
  while (last > first && w[last - 1] == 0.0) {
    --last;
  }
  if (first == last) {
    throw std::invalid_argument("intrinsic-volume profile has no positive entries");
  }
  for (std::size_t j = first; j < last; ++j) {
    if (!(w[j] > 0.0)) {
      throw std::invalid_argument("intrinsic-volume profile has an interior zero at j=" + std::to_string(j));
    }
  }
  return DiscretePmf::from_weights(static_cast<std::int64_t>(first),
                                   std::span<const double>(w.data() + first, last - first));
}

TwoSidedTailCheck two_sided_tail_check(const IntrinsicVolumeProfile& profile, double t) {
  const double n = static_cast<double>(profile.dim);
  const double root_n = std::sqrt(n);
  if (!(t >= 0.0) || t > root_n) {
    throw std::invalid_argument("t must lie in [0, sqrt(n)] = [0, " + std::to_string(root_n) + "]");
  }
  const DiscretePmf pmf = zk_pmf(profile);

  TwoSidedTailCheck check;
  check.t = t;
  check.deviation = t * root_n;
  check.mean = mean(pmf);
  check.upper_exact = upper_tail(pmf, check.deviation);
  check.lower_exact = lower_tail(pmf, check.deviation);
  check.exact = t == 0.0 ? 1.0 : std::min(1.0, check.upper_exact + check.lower_exact);
  check.bound = 2.0 * std::exp(-t * t / 2.0);
  check.upper_trivial = n < check.deviation + check.mean;
  if (check.mean > 0.0) {
    check.upper_bound = check.upper_trivial ? 0.0 : relaxed_upper_bound(check.mean, check.deviation);
    check.lower_bound = relaxed_lower_bound(check.mean, check.deviation);
  } else {
    check.upper_bound = check.upper_trivial ? 0.0 : 1.0;
    check.lower_bound = check.deviation > 0.0 ? 0.0 : 1.0;
  }
  if (check.mean <= root_n) {
    check.small_mean_bound = 2.0 * std::exp(-t * t * root_n / (2.0 * (t + 1.0)));
  }
  check.holds = check.exact <= check.bound + 1e-12;
  return check;
}

PoissonLimitReport poisson_limit(double lambda, std::span<const std::int64_t> n_values) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    throw std::invalid_argument("lambda must be positive and finite");
  }
  const DiscretePmf poisson = make_poisson(lambda);
  PoissonLimitReport report{lambda, {}, true};
  for (std::int64_t n : n_values) {
    if (!(static_cast<double>(n) > lambda)) {
      throw std::invalid_argument("every n must exceed lambda; got n=" + std::to_string(n));
    }
    const double r = lambda / (static_cast<double>(n) - lambda);
    const DiscretePmf z = zk_pmf(intrinsic_volumes(ScaledCube{r, n}));
    const double tv = total_variation(z, poisson);
    if (!report.rows.empty() && !(tv < report.rows.back().tv_distance)) {
      report.decreasing = false;
    }
    report.rows.push_back({n, r, tv});
  }
  return report;
}

}  // namespace ulc
