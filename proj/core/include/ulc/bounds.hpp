#pragma once

#include <cstddef>
#include <optional>

#include "ulc/pmf.hpp"

namespace ulc {

/// Below this |x| the Bennett function is evaluated by its power series.
inline constexpr double kBennettSeriesCrossover = 1e-4;

/// Bennett function h(x) = 2((1+x)log(1+x) - x)/x^2 on [-1, inf).
/// h(-1) = 2, h(0) = 1, decreasing to 0. Throws std::domain_error for x < -1.
[[nodiscard]] double bennett_h(double x);

/// The alternating series 2 sum_k (-x)^k / ((k+1)(k+2)), summed until terms
/// drop below double resolution. Only meaningful for |x| < 1.
[[nodiscard]] double bennett_h_series(double x);

/// The closed form evaluated in extended precision; x = 0 and x = -1 map
/// to their limits.
[[nodiscard]] double bennett_h_closed_form(double x);

/// Poisson-type tail bound for ULC variables with mean mu:
/// P(X - mu >= t) <= exp(-(t^2 / 2mu) h(t/mu)) for t >= 0.
[[nodiscard]] double bennett_upper_bound(double mu, double t);

/// P(X - mu <= -t) <= exp(-(t^2 / 2mu) h(-t/mu)) for 0 <= t <= mu, 0 for
/// t > mu (X >= 0). At t = mu returns the limit e^{-mu}.
[[nodiscard]] double bennett_lower_bound(double mu, double t);

/// Sub-gamma relaxation of the upper bound: exp(-t^2 / (2(t + mu))).
[[nodiscard]] double relaxed_upper_bound(double mu, double t);

/// Sub-Gaussian relaxation of the lower bound: exp(-t^2 / (2 mu)).
[[nodiscard]] double relaxed_lower_bound(double mu, double t);

/// Upper-tail bound for c-log-concave variables: exp(-(c t^2 / 2) h(c t)).
[[nodiscard]] double c_log_concave_bound(double c, double t);

struct ChernoffGrid {
  std::size_t points = 10'000;
  double s_min = 1e-6;
  double s_max = 50.0;
  /// Golden-section refinement inside the bracket around the best grid point.
  bool refine = true;
};

/// Numerical Chernoff bound min_s e^{-s(E[X] + t)} E[e^{sX}] over a
/// log-spaced grid of s, clamped to 1 (the s -> 0 endpoint). Independent of
/// the closed-form optimizer; intended as a test oracle.
[[nodiscard]] double chernoff_upper_oracle(const DiscretePmf& pmf, double t, const ChernoffGrid& grid = {});

enum class TailSide { upper, lower };

/// Exact tail and every bound at one threshold.
struct TailBoundReport {
  double t = 0.0;
  TailSide side = TailSide::upper;
  std::optional<double> exact;
  double bennett = 1.0;
  double relaxed = 1.0;
  struct CBound {
    double c;
    double value;
  };
  /// Upper side only.
  std::optional<CBound> c_log_concave;

  /// exact - bennett, nonpositive when the bound holds.
  [[nodiscard]] std::optional<double> gap() const {
    if (!exact) {
      return std::nullopt;
    }
    return *exact - bennett;
  }
};

/// Bounds only, for a variable known through its mean.
[[nodiscard]] TailBoundReport tail_bound_report(double mu, double t, TailSide side,
                                                std::optional<double> c = std::nullopt);

/// Bounds plus the exact tail of pmf (mean taken from pmf).
[[nodiscard]] TailBoundReport tail_bound_report(const DiscretePmf& pmf, double t, TailSide side,
                                                std::optional<double> c = std::nullopt);

struct VarianceCheck {
  double mean;
  double variance;
  bool holds;
};

/// Var(X) <= E[X] (+1e-12). Throws std::invalid_argument if pmf is not ULC.
[[nodiscard]] VarianceCheck check_variance(const DiscretePmf& pmf, double rel_tol = kDefaultRelTol);

}  // namespace ulc
