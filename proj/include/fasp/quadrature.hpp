// Copyright 2026 The fasp Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <utility>

namespace fasp {

struct QuadratureSettings {
  int initial_panels = 64;  // must be even
  double rel_tol = 1e-10;
  int max_refinements = 20;

  /// Throws DomainError on an odd or non-positive panel count, a
  /// non-positive tolerance or fewer than one refinement.
  void validate() const;
};

/// Composite Simpson's rule with panel doubling until successive estimates
/// agree to rel_tol. Throws ConvergenceError carrying the last two estimates
/// when max_refinements is exhausted.
double simpson(const std::function<double(double)>& f, double lo, double hi,
               const QuadratureSettings& s = {});

/// Single composite Simpson pass with a fixed (even) number of panels.
double simpson_fixed(const std::function<double(double)>& f, double lo,
                     double hi, int panels);

struct OscillatoryPair {
  double cos_integral;  // ∫ cos(u)/u du over [c - π, c + π]
  double sin_integral;  // ∫ sin(u)/u du over [c - π, c + π]
};

/// Requires c > π so the integrands are smooth on the interval.
OscillatoryPair oscillatory_pair(double c, const QuadratureSettings& s = {});

/// Standard normal CDF via the complementary error function.
double std_normal_cdf(double z);

}  // namespace fasp
