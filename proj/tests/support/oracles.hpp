#pragma once

// Brute-force reference computations for the test suites. Nothing here calls
// into the library's numerical paths; inputs and outputs are plain vectors.

#include <cmath>
#include <cstdint>
#include <functional>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace ulc::oracle {

/// Binomial(n, p) masses by the multiplicative recurrence
/// P(j+1) = P(j) (n-j)/(j+1) p/(1-p), starting from (1-p)^n.
inline std::vector<double> binomial_masses(std::int64_t n, double p) {
  std::vector<double> out(static_cast<std::size_t>(n + 1));
  out[0] = std::pow(1.0 - p, static_cast<double>(n));
  for (std::int64_t j = 0; j < n; ++j) {
    out[static_cast<std::size_t>(j + 1)] =
        out[static_cast<std::size_t>(j)] * static_cast<double>(n - j) / static_cast<double>(j + 1) * p / (1.0 - p);
  }
  return out;
}

/// Poisson(lambda) masses on {0..last}, not renormalized.
inline std::vector<double> poisson_masses(double lambda, std::int64_t last) {
  std::vector<double> out(static_cast<std::size_t>(last + 1));
  out[0] = std::exp(-lambda);
  for (std::int64_t j = 1; j <= last; ++j) {
    out[static_cast<std::size_t>(j)] = out[static_cast<std::size_t>(j - 1)] * lambda / static_cast<double>(j);
  }
  return out;
}

/// Sum of masses over support points n >= threshold_index (integers).
inline double tail_from(const std::vector<double>& masses, std::int64_t offset, std::int64_t threshold_index) {
  double s = 0.0;
  for (std::size_t i = 0; i < masses.size(); ++i) {
    if (offset + static_cast<std::int64_t>(i) >= threshold_index) {
      s += masses[i];
    }
  }
  return s;
}

/// Sum of masses over support points n <= threshold_index.
inline double head_to(const std::vector<double>& masses, std::int64_t offset, std::int64_t threshold_index) {
  double s = 0.0;
  for (std::size_t i = 0; i < masses.size(); ++i) {
    if (offset + static_cast<std::int64_t>(i) <= threshold_index) {
      s += masses[i];
    }
  }
  return s;
}

/// sum_n e^{t n} p(n), plain loop.
inline double mgf_direct(const std::vector<double>& masses, std::int64_t offset, double t) {
  double s = 0.0;
  for (std::size_t i = 0; i < masses.size(); ++i) {
    s += std::exp(t * static_cast<double>(offset + static_cast<std::int64_t>(i))) * masses[i];
  }
  return s;
}

/// e_j by summing products over all subsets of size j.
inline std::vector<double> elementary_symmetric_by_subsets(const std::vector<double>& values) {
  const std::size_t n = values.size();
  std::vector<double> e(n + 1, 0.0);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    double product = 1.0;
    std::size_t bits = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (std::uint64_t{1} << i)) {
        product *= values[i];
        ++bits;
      }
    }
    e[bits] += product;
  }
  return e;
}

/// Solve the (n+1)x(n+1) Vandermonde system sum_m a_m t_i^m = y_i by
/// Gaussian elimination with partial pivoting.
inline std::vector<double> polynomial_fit(const std::vector<double>& ts, const std::vector<double>& ys) {
  const std::size_t n = ts.size();
  std::vector<std::vector<double>> a(n, std::vector<double>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    double power = 1.0;
    for (std::size_t m = 0; m < n; ++m) {
      a[i][m] = power;
      power *= ts[i];
    }
    a[i][n] = ys[i];
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (std::abs(a[r][col]) > std::abs(a[pivot][col])) {
        pivot = r;
      }
    }
    std::swap(a[col], a[pivot]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col) {
        continue;
      }
      const double factor = a[r][col] / a[col][col];
      for (std::size_t c = col; c <= n; ++c) {
        a[r][c] -= factor * a[col][c];
      }
    }
  }
  std::vector<double> coeffs(n);
  for (std::size_t i = 0; i < n; ++i) {
    coeffs[i] = a[i][n] / a[i][i];
  }
  return coeffs;
}

/// Volume of the m-ball of radius 1 for m <= 3 (hard-coded).
inline double small_ball_volume(int m) {
  switch (m) {
    case 0: return 1.0;
    case 1: return 2.0;
    case 2: return std::numbers::pi;
    case 3: return 4.0 * std::numbers::pi / 3.0;
    default: throw std::invalid_argument("small_ball_volume: m <= 3 only");
  }
}

/// Intrinsic volumes from a Steiner expansion: sample vol(K + tB) at n+1
/// values of t, fit the degree-n polynomial, and read V_i = a_{n-i} / kappa_{n-i}.
inline std::vector<double> intrinsic_volumes_from_parallel_volume(int n, const std::function<double(double)>& parallel_volume) {
  std::vector<double> ts;
  std::vector<double> ys;
  for (int i = 0; i <= n; ++i) {
    ts.push_back(static_cast<double>(i) * 0.5);
    ys.push_back(parallel_volume(ts.back()));
  }
  const auto a = polynomial_fit(ts, ys);
  std::vector<double> v(static_cast<std::size_t>(n + 1));
  for (int i = 0; i <= n; ++i) {
    v[static_cast<std::size_t>(i)] = a[static_cast<std::size_t>(n - i)] / small_ball_volume(n - i);
  }
  return v;
}

/// vol(K + tB) for an axis box with sides a (n <= 3): the body, slabs on the
/// facets, quarter-cylinders on the edges and ball octants on the vertices.
inline double box_parallel_volume(const std::vector<double>& a, double t) {
  const double pi = std::numbers::pi;
  switch (a.size()) {
    case 1: return a[0] + 2.0 * t;
    case 2: return a[0] * a[1] + 2.0 * (a[0] + a[1]) * t + pi * t * t;
    case 3: {
      const double facets = 2.0 * (a[0] * a[1] + a[1] * a[2] + a[0] * a[2]) * t;
      const double edges = pi * (a[0] + a[1] + a[2]) * t * t;
      const double corners = 4.0 * pi / 3.0 * t * t * t;
      return a[0] * a[1] * a[2] + facets + edges + corners;
    }
    default: throw std::invalid_argument("box_parallel_volume: n <= 3 only");
  }
}

/// Central difference of f at x with step h.
inline double central_difference(const std::function<double(double)>& f, double x, double h) {
  return (f(x + h) - f(x - h)) / (2.0 * h);
}

}  // namespace ulc::oracle
