// Copyright 2026 The fasp Authors
// SPDX-License-Identifier: Apache-2.0

#include "fasp/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "fasp/errors.hpp"

namespace fasp {

void QuadratureSettings::validate() const {
  if (initial_panels <= 0 || initial_panels % 2 != 0) {
    throw DomainError("QuadratureSettings: initial_panels must be even and positive");
  }
  if (!(rel_tol > 0.0)) throw DomainError("QuadratureSettings: rel_tol must be positive");
  if (max_refinements < 1) {
    throw DomainError("QuadratureSettings: max_refinements must be at least 1");
  }
}

double simpson_fixed(const std::function<double(double)>& f, double lo,
                     double hi, int panels) {
  if (panels <= 0 || panels % 2 != 0) {
    throw DomainError("simpson_fixed: panel count must be even and positive");
  }
  const double h = (hi - lo) / panels;
  double odd = 0.0;
  double even = 0.0;
  for (int i = 1; i < panels; ++i) {
    const double v = f(lo + i * h);
    (i % 2 == 1 ? odd : even) += v;
  }
  return h / 3.0 * (f(lo) + 4.0 * odd + 2.0 * even + f(hi));
}

double simpson(const std::function<double(double)>& f, double lo, double hi,
               const QuadratureSettings& s) {
  s.validate();
  if (!(lo < hi)) throw DomainError("simpson: requires lo < hi");

  // Keep the running sums so each doubling only evaluates the new midpoints.
  long long panels = s.initial_panels;
  double h = (hi - lo) / static_cast<double>(panels);
  const double ends = f(lo) + f(hi);
  double odd = 0.0;
  double even = 0.0;
  for (long long i = 1; i < panels; ++i) {
    const double v = f(lo + static_cast<double>(i) * h);
    (i % 2 == 1 ? odd : even) += v;
  }
  double estimate = h / 3.0 * (ends + 4.0 * odd + 2.0 * even);

  for (int r = 0; r < s.max_refinements; ++r) {
    even += odd;
    panels *= 2;
    h *= 0.5;
    odd = 0.0;
    for (long long i = 1; i < panels; i += 2) {
      odd += f(lo + static_cast<double>(i) * h);
    }
    const double refined = h / 3.0 * (ends + 4.0 * odd + 2.0 * even);
    const double diff = std::abs(refined - estimate);
    if (diff <= s.rel_tol * std::abs(refined) || diff == 0.0) return refined;
    if (r + 1 == s.max_refinements) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "simpson: no convergence after " << s.max_refinements
          << " refinements (last estimates " << estimate << ", " << refined << ")";
      throw ConvergenceError(msg.str(), estimate, refined);
    }
    estimate = refined;
  }
  return estimate;  // unreachable: max_refinements >= 1
}

OscillatoryPair oscillatory_pair(double c, const QuadratureSettings& s) {
  constexpr double pi = std::numbers::pi;
  if (!(c > pi)) throw DomainError("oscillatory_pair: requires c > pi");
  // Over a full period ∫cos(u)du = ∫sin(u)du = 0, so with u = c + v and
  // 1/u = 1/c - v/(c u) each integral equals -(1/c)∫ v·trig(u)/u dv on
  // [-π, π]. Folding v and -v together leaves two integrands on [0, π]
  // that do not cancel, so relative accuracy holds for large c. The trig
  // factors are expanded around c to avoid large-argument reduction.
  const double cc = std::cos(c);
  const double sc = std::sin(c);
  const double c2 = c * c;
  const double even = simpson([c2](double v) { return v * v * std::cos(v) / (c2 - v * v); }, 0.0, pi, s);
  const double odd = simpson([c2](double v) { return v * std::sin(v) / (c2 - v * v); }, 0.0, pi, s);
  return {2.0 / c * (cc * even + c * sc * odd), 2.0 / c * (sc * even - c * cc * odd)};
}

double std_normal_cdf(double z) {
  return 0.5 * std::erfc(-z / std::numbers::sqrt2);
}

}  // namespace fasp
