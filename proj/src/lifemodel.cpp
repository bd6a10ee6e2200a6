// Copyright 2026 The fasp Authors
// SPDX-License-Identifier: Apache-2.0

#include "fasp/lifemodel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <type_traits>

#include "fasp/errors.hpp"

namespace fasp {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTinyTime = 1e-12;
constexpr double kClampTol = 1e-12;

// log(sinh(x) / x) for x >= 0.
double log_sinhc(double x) {
  if (x < 1e-3) {
    const double x2 = x * x;
    return x2 / 6.0 - x2 * x2 / 180.0;
  }
  if (x < 20.0) return std::log(std::sinh(x) / x);
  return x - std::log(2.0 * x) + std::log1p(-std::exp(-2.0 * x));
}

// log P(Y >= t). The weighted closed form
//   π²a³ (e^{2t/a} - 1) e^{-t/λ - t/a} / (2t³ + 2π²a²t)
// factors as sinhc(t/a) · e^{-t/λ} / (1 + t²/(π a)²), which stays finite
// for large t and has no 0/0 at small t.
double log_survival(const LifeLaw& law, double t) {
  if (!(t > 0.0)) throw DomainError("survival: t must be positive");
  if (t < kTinyTime) return 0.0;
  if (const auto* crisp = std::get_if<CrispLife>(&law)) {
    return -t / crisp->mean_life;
  }
  const auto& f = std::get<FuzzyLife>(law);
  const double a = f.scale();
  const double r = t / (kPi * a);
  return log_sinhc(t / a) - std::log1p(r * r) - t / f.mean_life();
}

double checked(double p, const char* what) {
  if (!(p >= -kClampTol && p <= 1.0 + kClampTol)) {
    throw ConsistencyError(std::string(what) + ": probability outside [0, 1]: " +
                           std::to_string(p));
  }
  return std::clamp(p, 0.0, 1.0);
}

TriProb finish(double p_a, double p_r, double p_c, const char* what) {
  TriProb out{checked(p_a, what), checked(p_r, what), checked(p_c, what)};
  const double sum = out.p_a + out.p_r + out.p_c;
  if (std::abs(sum - 1.0) > 1e-10) {
    throw ConsistencyError(std::string(what) + ": probabilities do not sum to one");
  }
  return out;
}

void check_band(const Thresholds& th) {
  if (!(th.t1 > 0.0) || !(th.t2 >= th.t1) || !std::isfinite(th.t2)) {
    throw DomainError("thresholds must satisfy 0 < t1 <= t2 < inf");
  }
}

void check_n(int n) {
  if (n < 1) throw DomainError("group size n must be at least 1");
}

}  // namespace

void Thresholds::validate(bool allow_equal) const {
  if (!(t1 > 0.0) || !std::isfinite(t2)) {
    throw DomainError("Thresholds: t1 must be positive and t2 finite");
  }
  if (allow_equal ? !(t2 >= t1) : !(t2 > t1)) {
    throw DomainError(allow_equal ? "Thresholds: requires t1 <= t2"
                                  : "Thresholds: requires t1 < t2");
  }
}

double nominal_mean_life(const LifeLaw& law) {
  return std::visit(
      [](const auto& l) {
        if constexpr (std::is_same_v<std::decay_t<decltype(l)>, FuzzyLife>) {
          return l.mean_life();
        } else {
          return l.mean_life;
        }
      },
      law);
}

double weighted_survival(const FuzzyLife& f, double t) {
  return std::exp(log_survival(f, t));
}

double survival(const LifeLaw& law, double t) { return std::exp(log_survival(law, t)); }

double failure_cdf(const LifeLaw& law, double t) {
  return -std::expm1(log_survival(law, t));
}

TriProb ssp_triprob(const LifeLaw& law, const Thresholds& th) {
  check_band(th);
  const double s1 = survival(law, th.t1);
  const double s2 = survival(law, th.t2);
  return finish(s2, failure_cdf(law, th.t1), s1 - s2, "ssp_triprob");
}

TriProb rgsp_min_triprob(const LifeLaw& law, const Thresholds& th, int n) {
  check_band(th);
  check_n(n);
  // The minimum of n items sharing one rate is exponential with rate nλ, so
  // every term is the single-item form evaluated at n·t.
  const double nt1 = n * th.t1;
  const double nt2 = n * th.t2;
  const double s1 = survival(law, nt1);
  const double s2 = survival(law, nt2);
  return finish(s2, failure_cdf(law, nt1), s1 - s2, "rgsp_min_triprob");
}

TriProb rgsp_max_triprob(const LifeLaw& law, const Thresholds& th, int n) {
  check_band(th);
  check_n(n);
  const double log_f1 = std::log(failure_cdf(law, th.t1));
  const double log_f2 = std::log(failure_cdf(law, th.t2));
  const double reject = std::exp(n * log_f1);
  const double below_t2 = std::exp(n * log_f2);
  return finish(-std::expm1(n * log_f2), reject, below_t2 - reject, "rgsp_max_triprob");
}

TriProb typeI_triprob(double mean_life, const Thresholds& th, int n, double tau) {
  check_band(th);
  check_n(n);
  if (!(mean_life > 0.0)) throw DomainError("typeI_triprob: mean life must be positive");
  if (!(tau > 0.0)) throw DomainError("typeI_triprob: tau must be positive");
  const double root = std::sqrt(n * -std::expm1(-tau / mean_life));
  const double z1 = (th.t1 - mean_life) / mean_life * root;
  const double z2 = (th.t2 - mean_life) / mean_life * root;
  const double phi1 = std_normal_cdf(z1);
  const double phi2 = std_normal_cdf(z2);
  return finish(std_normal_cdf(-z2), phi1, phi2 - phi1, "typeI_triprob");
}

LongRun long_run(const TriProb& p) {
  const double stop = 1.0 - p.p_c;
  if (!(stop > 0.0)) throw DegeneratePlanError("long_run: continuation probability is one");
  // Normalize by p_a + p_r rather than 1 - p_c so P_A + P_R is exactly 1
  // up to rounding even when p_c carries its own rounding error.
  const double decided = p.p_a + p.p_r;
  return {p.p_a / decided, p.p_r / decided, 1.0 / stop};
}

double expected_y(const LifeLaw& law, const QuadratureSettings& qs) {
  if (const auto* crisp = std::get_if<CrispLife>(&law)) return crisp->mean_life;
  const auto& f = std::get<FuzzyLife>(law);
  const double a = f.scale();
  const double l0 = f.mean_life();
  const double c = a * kPi / l0;
  const auto [ic, is] = oscillatory_pair(c, qs);
  // ln((a+λ0)/(a-λ0)) written as 2·atanh(λ0/a).
  const double log_ratio = 2.0 * std::atanh(l0 / a);
  return 0.5 * a * log_ratio + 0.5 * a * (std::cos(c) * ic + std::sin(c) * is);
}

double expected_y_upper_bound(const LifeLaw& law) {
  if (const auto* crisp = std::get_if<CrispLife>(&law)) return crisp->mean_life;
  const auto& f = std::get<FuzzyLife>(law);
  const double a = f.scale();
  const double l0 = f.mean_life();
  const double c = a * kPi / l0;
  const double log_ratio = 2.0 * std::atanh(l0 / a);
  return 0.5 * a * log_ratio * (1.0 + std::abs(std::cos(c)) + std::abs(std::sin(c)));
}

double harmonic_number(int n) {
  check_n(n);
  double h = 0.0;
  for (int i = n; i >= 1; --i) h += 1.0 / i;
  return h;
}

double expected_ymin(const LifeLaw& law, int n, const QuadratureSettings& qs) {
  check_n(n);
  return expected_y(law, qs) / n;
}

double expected_ymin_upper_bound(const LifeLaw& law, int n) {
  check_n(n);
  return expected_y_upper_bound(law) / n;
}

double expected_ymax(const LifeLaw& law, int n, const QuadratureSettings& qs) {
  return harmonic_number(n) * expected_y(law, qs);
}

double expected_ymax_upper_bound(const LifeLaw& law, int n) {
  return harmonic_number(n) * expected_y_upper_bound(law);
}

}  // namespace fasp
