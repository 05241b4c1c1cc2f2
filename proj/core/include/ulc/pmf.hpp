#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace ulc {

/// Absolute tolerance on the total mass accepted by the DiscretePmf constructor.
inline constexpr double kNormalizationTolerance = 1e-12;

/// Default slack (in log space) of the log-concavity predicates.
inline constexpr double kDefaultRelTol = 1e-9;

/// Default mass-loss budget when an infinite-support family is truncated.
inline constexpr double kDefaultMassLoss = 1e-12;

/// Probability mass function on {offset, ..., offset + size - 1} with every
/// entry strictly positive. Immutable once constructed.
class DiscretePmf {
 public:
  /// Validates the masses: offset >= 0, nonempty, every entry finite and in
  /// (0, 1], total within kNormalizationTolerance of 1. Throws
  /// std::invalid_argument naming the first violated invariant.
  DiscretePmf(std::int64_t offset, std::vector<double> masses);

  /// Normalizes nonnegative weights. Zero weights anywhere are rejected.
  [[nodiscard]] static DiscretePmf from_weights(std::int64_t offset, std::span<const double> weights);

  /// Normalizes weights given as logs, working entirely in log space so
  /// that very large or very small weights do not overflow.
  [[nodiscard]] static DiscretePmf from_log_weights(std::int64_t offset,
                                                    std::span<const double> log_weights);

  [[nodiscard]] static DiscretePmf point_mass(std::int64_t at);

  [[nodiscard]] std::int64_t offset() const noexcept { return offset_; }
  /// Largest support point.
  [[nodiscard]] std::int64_t last() const noexcept {
    return offset_ + static_cast<std::int64_t>(masses_.size()) - 1;
  }
  [[nodiscard]] std::size_t size() const noexcept { return masses_.size(); }
  [[nodiscard]] std::span<const double> masses() const noexcept { return masses_; }

  /// P(X = n); zero outside the support.
  [[nodiscard]] double at(std::int64_t n) const noexcept;

  friend bool operator==(const DiscretePmf&, const DiscretePmf&) = default;

 private:
  std::int64_t offset_;
  std::vector<double> masses_;
};

[[nodiscard]] double mean(const DiscretePmf& pmf);

/// Centered second moment, accumulated around the mean.
[[nodiscard]] double variance(const DiscretePmf& pmf);

/// log E[e^{tX}] in log-sum-exp form; finite for any finite t.
[[nodiscard]] double log_mgf(const DiscretePmf& pmf, double t);

/// E[e^{tX}]. Throws std::overflow_error when the result is not representable.
[[nodiscard]] double mgf(const DiscretePmf& pmf, double t);

/// P(X >= E[X] + t), summed from the top of the support downwards.
/// Support points within a relative 1e-12 of the threshold are counted.
[[nodiscard]] double upper_tail(const DiscretePmf& pmf, double t);

/// P(X <= E[X] - t), summed from the bottom of the support upwards.
[[nodiscard]] double lower_tail(const DiscretePmf& pmf, double t);

/// First interior n with 2 log p(n) < log p(n-1) + log p(n+1) - rel_tol.
[[nodiscard]] std::optional<std::int64_t> first_log_concavity_violation(const DiscretePmf& pmf,
                                                                        double rel_tol = kDefaultRelTol);

/// First interior n at which n! p(n) fails log-concavity by more than
/// rel_tol in log space, i.e. n p(n)^2 < (n+1) p(n-1) p(n+1) beyond the slack.
[[nodiscard]] std::optional<std::int64_t> first_ulc_violation(const DiscretePmf& pmf,
                                                              double rel_tol = kDefaultRelTol);

[[nodiscard]] bool is_log_concave(const DiscretePmf& pmf, double rel_tol = kDefaultRelTol);
[[nodiscard]] bool is_ultra_log_concave(const DiscretePmf& pmf, double rel_tol = kDefaultRelTol);

/// Law of the independent sum. Computed in log space; end entries that would
/// underflow below the smallest normal double are dropped before
/// renormalizing.
[[nodiscard]] DiscretePmf convolve(const DiscretePmf& a, const DiscretePmf& b);

/// Binomial(n, p). Requires n >= 1 and 0 < p < 1.
[[nodiscard]] DiscretePmf make_binomial(std::int64_t n, double p);

/// Poisson(lambda) conditioned on {k, ..., l}: masses proportional to
/// lambda^n / n!. Requires lambda > 0 and 0 <= k <= l.
[[nodiscard]] DiscretePmf make_truncated_poisson(double lambda, std::int64_t k, std::int64_t l);

/// Poisson(lambda) truncated at the smallest L with P(Poisson > L) below
/// mass_loss, then renormalized.
[[nodiscard]] DiscretePmf make_poisson(double lambda, double mass_loss = kDefaultMassLoss);

/// Geometric masses proportional to ratio^n on {0, ..., last}.
/// Log-concave, and ultra log-concave only in degenerate cases.
[[nodiscard]] DiscretePmf make_geometric(double ratio, std::int64_t last);

/// Random ULC pmf: a concave sequence b(n) on a random window
/// [k, l] of [0, max_support] (second differences uniform in [-2, 0]),
/// masses proportional to e^{b(n)} / n!. Deterministic in seed.
[[nodiscard]] DiscretePmf random_ulc(std::uint64_t seed, std::int64_t max_support);

/// Total-variation distance, 1/2 sum |a(n) - b(n)| over the union of supports.
[[nodiscard]] double total_variation(const DiscretePmf& a, const DiscretePmf& b);

}  // namespace ulc
