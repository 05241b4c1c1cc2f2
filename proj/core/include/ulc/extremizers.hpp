#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ulc/pmf.hpp"

namespace ulc {

/// Truncated-Poisson extremizer p(n) = C tilt^n / n! on {k, ..., l}.
struct ExtremizerParams {
  double tilt;
  std::int64_t k;
  std::int64_t l;

  /// Throws std::invalid_argument unless tilt > 0 and 0 <= k <= l.
  void validate() const;
};

/// Partial exponential sum Psi_{K,L}(x) = sum_{n=K}^{L} x^n / n!, with
/// Psi_{K,L} = Psi_{0,L} when K <= 0 <= L and Psi_{K,L} = 0 when L < 0.
/// Evaluated through log_psi so large x and L do not overflow prematurely.
[[nodiscard]] double psi(std::int64_t lower, std::int64_t upper, double x);

/// log Psi_{K,L}(x); -inf when the sum is empty or zero.
[[nodiscard]] double log_psi(std::int64_t lower, std::int64_t upper, double x);

/// Plain left-to-right summation of x^n / n!, used as a cross-check of
/// log_psi for small x and short ranges.
[[nodiscard]] double psi_direct(std::int64_t lower, std::int64_t upper, double x);

[[nodiscard]] DiscretePmf extremizer_pmf(const ExtremizerParams& params);

/// tilt * Psi_{k-1,l-1}(tilt) / Psi_{k,l}(tilt).
[[nodiscard]] double extremizer_mean(const ExtremizerParams& params);

/// f(y) = mu (y - 1) - log Psi_{k,l}(y tilt) + log Psi_{k,l}(tilt), with mu
/// the extremizer mean. f >= 0 is the MGF comparison at e^t = y.
[[nodiscard]] double f_value(const ExtremizerParams& params, double y);
[[nodiscard]] double f_prime(const ExtremizerParams& params, double y);
/// -tilt^2 (Psi_{k,l} Psi_{k-2,l-2} - Psi_{k-1,l-1}^2)(y tilt) / Psi_{k,l}^2(y tilt),
/// formed from log-domain ratios.
[[nodiscard]] double f_second(const ExtremizerParams& params, double y);

/// Psi_{k,l}(x) Psi_{k-2,l-2}(x) <= Psi_{k-1,l-1}(x)^2 up to a relative 1e-12.
[[nodiscard]] bool psi_log_concavity_check(std::int64_t k, std::int64_t l, double x);

/// 41 evenly spaced points on [-2, 2] plus -5 and 5, ascending.
[[nodiscard]] std::vector<double> default_t_grid();

struct MgfDominationReport {
  ExtremizerParams params;
  std::vector<double> grid;
  /// max over the grid of E[e^{tX}] / e^{mu(e^t - 1)} - 1; <= 0 means strict domination.
  double worst_gap;
  double worst_t;
  bool holds;
};

/// Compares the extremizer MGF with the Poisson MGF of the same mean at each
/// t; holds when every relative gap is at most rel_tol.
[[nodiscard]] MgfDominationReport verify_mgf_domination(const ExtremizerParams& params,
                                                        std::span<const double> t_grid,
                                                        double rel_tol = 1e-10);

}  // namespace ulc
