// Copyright 2026 The fasp Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <variant>

#include "fasp/membership.hpp"
#include "fasp/quadrature.hpp"

namespace fasp {

/// Acceptance/continuation band of a plan: reject below t1, accept at or
/// above t2.
struct Thresholds {
  double t1;
  double t2;

  /// Throws DomainError unless 0 < t1 and t1 < t2 (t1 <= t2 when
  /// `allow_equal`).
  void validate(bool allow_equal) const;
};

struct TriProb {
  double p_a;  // accept
  double p_r;  // reject
  double p_c;  // continue
};

/// Long-run quantities of a repetitive plan.
struct LongRun {
  double P_A;
  double P_R;
  double N;  // expected number of groups (or inspected failures)
};

/// Plain exponential lifetime with a known mean; the limit of FuzzyLife as
/// its scale grows without bound.
struct CrispLife {
  double mean_life;
};

using LifeLaw = std::variant<FuzzyLife, CrispLife>;

double nominal_mean_life(const LifeLaw& law);

/// P(Y >= t) for the membership-weighted exponential mixture. Equal to
/// scale · ∫ exp(-λt) H(λ) dλ. Throws DomainError for t <= 0.
double weighted_survival(const FuzzyLife& f, double t);

/// P(Y >= t) under either law.
double survival(const LifeLaw& law, double t);

/// 1 - survival(law, t), evaluated without cancellation for small t.
double failure_cdf(const LifeLaw& law, double t);

/// Requires 0 < t1 <= t2 for all the *_triprob functions below.
TriProb ssp_triprob(const LifeLaw& law, const Thresholds& th);
TriProb rgsp_min_triprob(const LifeLaw& law, const Thresholds& th, int n);
/// Item rates are drawn independently, so the weighted CDF is raised to
/// the n-th power.
TriProb rgsp_max_triprob(const LifeLaw& law, const Thresholds& th, int n);

/// Normal approximation of the censored MLE: mean λ_j and standard
/// deviation λ_j / sqrt(n (1 - exp(-τ/λ_j))).
TriProb typeI_triprob(double mean_life, const Thresholds& th, int n, double tau);

/// Throws DegeneratePlanError when p_c == 1.
LongRun long_run(const TriProb& p);

/// Mean of the weighted lifetime under H0 (the crisp mean for CrispLife).
double expected_y(const LifeLaw& law, const QuadratureSettings& qs = {});
/// Analytic bound (a/2)·ln((a+λ0)/(a-λ0))·(1 + |cos(aπ/λ0)| + |sin(aπ/λ0)|).
/// CrispLife returns its exact mean.
double expected_y_upper_bound(const LifeLaw& law);

double expected_ymin(const LifeLaw& law, int n, const QuadratureSettings& qs = {});
double expected_ymin_upper_bound(const LifeLaw& law, int n);
double expected_ymax(const LifeLaw& law, int n, const QuadratureSettings& qs = {});
double expected_ymax_upper_bound(const LifeLaw& law, int n);

double harmonic_number(int n);

}  // namespace fasp
