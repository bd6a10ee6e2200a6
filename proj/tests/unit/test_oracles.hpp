// Copyright 2026 The fasp Authors
// SPDX-License-Identifier: Apache-2.0

// Reference implementations used only by tests. They share no code with
// the library.

#pragma once

#include <cmath>
#include <functional>
#include <numbers>
#include <vector>

namespace fasp::testing {

/// Gauss-Legendre nodes and weights on [-1, 1] by Newton iteration.
struct GaussLegendre {
  std::vector<double> x;
  std::vector<double> w;

  explicit GaussLegendre(int n) : x(n), w(n) {
    for (int i = 0; i < n; ++i) {
      double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
      double dp = 0.0;
      for (int it = 0; it < 100; ++it) {
        double p0 = 1.0, p1 = z;
        for (int k = 2; k <= n; ++k) {
          const double pk = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p0) / k;
          p0 = p1;
          p1 = pk;
        }
        dp = n * (z * p1 - p0) / (z * z - 1.0);
        const double dz = p1 / dp;
        z -= dz;
        if (std::abs(dz) < 1e-16) break;
      }
      x[i] = z;
      w[i] = 2.0 / ((1.0 - z * z) * dp * dp);
    }
  }
};

/// Composite Gauss-Legendre over `pieces` equal subintervals.
inline double gauss_integrate(const std::function<double(double)>& f, double lo, double hi,
                              int pieces = 64, int order = 20) {
  static const GaussLegendre gl20(20);
  const GaussLegendre local = order == 20 ? gl20 : GaussLegendre(order);
  const double h = (hi - lo) / pieces;
  long double sum = 0.0L;
  for (int p = 0; p < pieces; ++p) {
    const double a = lo + p * h;
    const double mid = a + 0.5 * h;
    for (std::size_t i = 0; i < local.x.size(); ++i) {
      sum += local.w[i] * f(mid + 0.5 * h * local.x[i]);
    }
  }
  return static_cast<double>(sum * 0.5L * h);
}

/// erf by its Maclaurin series (|z| <= 3) or erfc by Lentz's continued
/// fraction beyond.
inline double erfc_reference(double z) {
  const double az = std::abs(z);
  if (az <= 3.0) {
    long double term = az, sum = az;
    for (int k = 1; k < 200; ++k) {
      term *= -static_cast<long double>(az) * az / k;
      const long double add = term / (2 * k + 1);
      sum += add;
      if (std::abs(static_cast<double>(add)) < 1e-22) break;
    }
    const double erf_abs = static_cast<double>(sum * 2.0L / std::sqrt(std::numbers::pi_v<long double>));
    return z >= 0 ? 1.0 - erf_abs : 1.0 + erf_abs;
  }
  // erfc(x) = exp(-x^2)/sqrt(pi) * 1/(x + 1/2/(x + 1/(x + 3/2/(x + ...))))
  const double tiny = 1e-300;
  double f = az, c = az, d = 0.0;
  for (int k = 1; k < 500; ++k) {
    const double an = k * 0.5;
    d = az + an * d;
    d = std::abs(d) < tiny ? tiny : d;
    c = az + an / c;
    c = std::abs(c) < tiny ? tiny : c;
    d = 1.0 / d;
    const double delta = c * d;
    f *= delta;
    if (std::abs(delta - 1.0) < 1e-16) break;
  }
  const double tail = std::exp(-az * az) / (std::sqrt(std::numbers::pi) * f);
  return z >= 0 ? tail : 2.0 - tail;
}

inline double normal_cdf_reference(double z) { return 0.5 * erfc_reference(-z / std::sqrt(2.0)); }

/// Raised-cosine rate membership, written out independently.
inline double raised_cosine(double center_rate, double a, double lambda) {
  const double d = lambda - center_rate;
  if (std::abs(d) >= 1.0 / a) return 0.0;
  return 0.5 * (1.0 + std::cos(a * std::numbers::pi * d));
}

/// a ∫ g(λ) H(λ) dλ by Gauss-Legendre.
inline double mixture_expectation(double mean_life, double a, const std::function<double(double)>& g,
                                  int pieces = 64) {
  const double c = 1.0 / mean_life;
  return a * gauss_integrate([&](double l) { return g(l) * raised_cosine(c, a, l); }, c - 1.0 / a,
                             c + 1.0 / a, pieces);
}

}  // namespace fasp::testing
