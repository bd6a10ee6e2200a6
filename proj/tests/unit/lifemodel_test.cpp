// Copyright 2026 The fasp Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "fasp/errors.hpp"
#include "fasp/lifemodel.hpp"
#include "test_oracles.hpp"

namespace fasp {
namespace {

double mixture_survival(double m, double a, double t) {
  return testing::mixture_expectation(m, a, [t](double l) { return std::exp(-l * t); });
}

void expect_sums_to_one(const TriProb& p) {
  EXPECT_NEAR(p.p_a + p.p_r + p.p_c, 1.0, 1e-10);
  for (double v : {p.p_a, p.p_r, p.p_c}) {
    EXPECT_GE(v, 0.0);
    EXPECT_LE(v, 1.0);
  }
}

TEST(WeightedSurvival, LimitsAndDomain) {
  FuzzyLife f(300, 1500);
  EXPECT_NEAR(weighted_survival(f, 1e-15), 1.0, 1e-15);
  EXPECT_NEAR(weighted_survival(FuzzyLife(50, 1500), 1e6), 0.0, 1e-12);
  EXPECT_THROW(weighted_survival(f, 0.0), DomainError);
  EXPECT_THROW(weighted_survival(f, -1.0), DomainError);
}

TEST(WeightedSurvival, MatchesPrintedClosedForm) {
  // Direct transcription of the closed form, fine at moderate t/a.
  const double a = 1500, m = 300, t = 251.1178;
  const double pi2 = std::numbers::pi * std::numbers::pi;
  const double direct = pi2 * a * a * a * std::expm1(2 * t / a) * std::exp(-t / m - t / a) /
                        (2 * t * t * t + 2 * pi2 * a * a * t);
  EXPECT_NEAR(weighted_survival(FuzzyLife(m, a), t), direct, 1e-14);
}

TEST(WeightedSurvival, MixtureIdentity) {
  EXPECT_NEAR(weighted_survival(FuzzyLife(300, 1500), 251.1178), mixture_survival(300, 1500, 251.1178),
              1e-8);
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> mean(10, 1000), ratio(1.1, 200), tf(0.001, 10);
  for (int i = 0; i < 100; ++i) {
    const double m = mean(rng), a = m * ratio(rng), t = m * tf(rng);
    EXPECT_NEAR(weighted_survival(FuzzyLife(m, a), t), mixture_survival(m, a, t), 1e-8)
        << m << ' ' << a << ' ' << t;
  }
}

TEST(WeightedSurvival, StrictlyDecreasing) {
  FuzzyLife f(300, 1500);
  double prev = 2.0;
  for (int i = 0; i <= 10000; ++i) {
    const double t = 1e-6 + (3000 - 1e-6) * i / 10000.0;
    const double s = weighted_survival(f, t);
    EXPECT_LT(s, prev) << t;
    prev = s;
  }
}

TEST(WeightedSurvival, VeryLargeScaleApproachesExponential) {
  FuzzyLife f(300, 3e8);
  for (double t : {1e-6, 1.0, 100.0, 1000.0}) {
    EXPECT_NEAR(weighted_survival(f, t), std::exp(-t / 300), 1e-9);
  }
}

TEST(SspTriprob, Components) {
  FuzzyLife f(300, 1500);
  const TriProb p = ssp_triprob(f, {5.8231, 251.1178});
  expect_sums_to_one(p);
  EXPECT_NEAR(p.p_a, weighted_survival(f, 251.1178), 1e-15);
  EXPECT_NEAR(p.p_r, 1 - weighted_survival(f, 5.8231), 1e-15);
  const TriProb q = ssp_triprob(f, {100, 100});
  EXPECT_EQ(q.p_c, 0.0);
}

TEST(SspTriprob, RejectsBadBand) {
  FuzzyLife f(300, 1500);
  EXPECT_THROW(ssp_triprob(f, {200, 100}), DomainError);
  EXPECT_THROW(ssp_triprob(f, {0, 100}), DomainError);
}

TEST(RgspMinTriprob, IsSspAtScaledThresholds) {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> mean(10, 1000), ratio(1.1, 200), tf(1e-4, 2);
  std::uniform_int_distribution<int> nd(1, 60);
  for (int i = 0; i < 200; ++i) {
    const double m = mean(rng);
    FuzzyLife f(m, m * ratio(rng));
    double t1 = m * tf(rng), t2 = m * tf(rng);
    if (t1 > t2) std::swap(t1, t2);
    const int n = nd(rng);
    const TriProb a = rgsp_min_triprob(f, {t1, t2}, n);
    const TriProb b = ssp_triprob(f, {n * t1, n * t2});
    EXPECT_NEAR(a.p_a, b.p_a, 1e-12);
    EXPECT_NEAR(a.p_r, b.p_r, 1e-12);
    EXPECT_NEAR(a.p_c, b.p_c, 1e-12);
  }
  FuzzyLife f(300, 1500);
  const TriProb one = rgsp_min_triprob(f, {5, 250}, 1);
  const TriProb s = ssp_triprob(f, {5, 250});
  EXPECT_NEAR(one.p_a, s.p_a, 1e-14);
  EXPECT_NEAR(one.p_r, s.p_r, 1e-14);
}

TEST(RgspMaxTriprob, PowersOfTheWeightedCdf) {
  FuzzyLife f(300, 15000);
  const double t1 = 130.6584, t2 = 338.9876;
  const int n = 12;
  const TriProb p = rgsp_max_triprob(f, {t1, t2}, n);
  const double f1 = 1 - mixture_survival(300, 15000, t1), f2 = 1 - mixture_survival(300, 15000, t2);
  EXPECT_NEAR(p.p_r, std::pow(f1, n), 1e-9);
  EXPECT_NEAR(p.p_a, 1 - std::pow(f2, n), 1e-9);
  expect_sums_to_one(p);
  const TriProb one = rgsp_max_triprob(f, {t1, t2}, 1);
  const TriProb s = ssp_triprob(f, {t1, t2});
  EXPECT_NEAR(one.p_a, s.p_a, 1e-14);
  EXPECT_NEAR(one.p_r, s.p_r, 1e-14);
}

TEST(TypeITriprob, NormalApproximation) {
  const double m = 300, t = 236.8898, tau = 50;
  const int n = 33;
  const TriProb p = typeI_triprob(m, {t, t}, n, tau);
  EXPECT_EQ(p.p_c, 0.0);
  EXPECT_NEAR(p.p_a + p.p_r, 1.0, 1e-15);
  const double z = (t - m) / m * std::sqrt(n * (1 - std::exp(-tau / m)));
  EXPECT_NEAR(p.p_r, testing::normal_cdf_reference(z), 1e-12);
  const TriProb half = typeI_triprob(m, {200, 300}, n, tau);
  EXPECT_DOUBLE_EQ(half.p_a, 0.5);
}

TEST(TypeITriprob, ShiftingThresholdsUpIsStricter) {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> u(0.5, 1.5), d(0, 50);
  for (int i = 0; i < 200; ++i) {
    const double m = 300, t1 = m * u(rng), t2 = t1 + d(rng), delta = d(rng);
    const TriProb a = typeI_triprob(m, {t1, t2}, 20, 50);
    const TriProb b = typeI_triprob(m, {t1 + delta, t2 + delta}, 20, 50);
    EXPECT_LE(b.p_a, a.p_a + 1e-15);
    EXPECT_GE(b.p_r, a.p_r - 1e-15);
  }
}

TEST(LongRun, Arithmetic) {
  const LongRun a = long_run({0.3, 0.7, 0.0});
  EXPECT_DOUBLE_EQ(a.P_A, 0.3);
  EXPECT_DOUBLE_EQ(a.N, 1.0);
  const LongRun b = long_run({0.25, 0.25, 0.5});
  EXPECT_DOUBLE_EQ(b.P_A, 0.5);
  EXPECT_DOUBLE_EQ(b.P_R, 0.5);
  EXPECT_DOUBLE_EQ(b.N, 2.0);
  EXPECT_THROW(long_run({0.0, 0.0, 1.0}), DegeneratePlanError);
}

TEST(ProbabilityIdentity, RandomDrawsAllFamilies) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> mean(5, 5000), ratio(1.05, 1e4), tf(1e-6, 5), tau(1, 500);
  std::uniform_int_distribution<int> nd(1, 100);
  for (int i = 0; i < 1000; ++i) {
    const double m = mean(rng);
    FuzzyLife f(m, m * ratio(rng));
    double t1 = m * tf(rng), t2 = m * tf(rng);
    if (t1 > t2) std::swap(t1, t2);
    const int n = nd(rng);
    expect_sums_to_one(ssp_triprob(f, {t1, t2}));
    expect_sums_to_one(rgsp_min_triprob(f, {t1, t2}, n));
    expect_sums_to_one(rgsp_max_triprob(f, {t1, t2}, n));
    expect_sums_to_one(typeI_triprob(m, {t1, t2}, n, tau(rng)));
    const LongRun lr = long_run(ssp_triprob(f, {t1, t2}));
    EXPECT_NEAR(lr.P_A + lr.P_R, 1.0, 1e-12);
  }
}

TEST(ExpectedY, MatchesMixtureMean) {
  for (auto [m, a] : {std::pair{300.0, 1500.0}, {300.0, 15000.0}, {70.0, 2100.0}, {500.0, 1500.0},
                      {300.0, 330.0}}) {
    const double q = testing::mixture_expectation(m, a, [](double l) { return 1.0 / l; }, 256);
    EXPECT_NEAR(expected_y(FuzzyLife(m, a)) / q, 1.0, 1e-9) << m << ' ' << a;
  }
  const double e = expected_y(FuzzyLife(300, 15000));
  EXPECT_GT(e, 299.0);
  EXPECT_LT(e, 301.0);
}

TEST(ExpectedY, ApproachesMeanLifeForLargeScale) {
  const double e = expected_y(FuzzyLife(300, 3e8));
  EXPECT_LE(std::abs(e - 300) / 300, 1e-4);
  EXPECT_EQ(expected_y(CrispLife{300}), 300);
}

TEST(ExpectedYUpperBound, PrintedFormAndDomination) {
  const double a = 1500, m = 300, c = a * std::numbers::pi / m;
  const double printed = a / 2 * std::log((a + m) / (a - m)) * (1 + std::abs(std::cos(c)) + std::abs(std::sin(c)));
  EXPECT_NEAR(expected_y_upper_bound(FuzzyLife(m, a)), printed, 1e-12 * printed);
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> mean(10, 1000), ratio(1.05, 1000);
  std::uniform_int_distribution<int> nd(1, 60);
  for (int i = 0; i < 100; ++i) {
    const double mm = mean(rng);
    FuzzyLife f(mm, mm * ratio(rng));
    const int n = nd(rng);
    EXPECT_LE(std::abs(expected_y(f)), expected_y_upper_bound(f));
    EXPECT_LE(expected_ymin(f, n), expected_ymin_upper_bound(f, n));
    EXPECT_LE(expected_ymax(f, n), expected_ymax_upper_bound(f, n));
    const double factor = expected_y_upper_bound(f) / (f.scale() / 2 * std::log((f.scale() + mm) / (f.scale() - mm)));
    EXPECT_GE(factor, 1.0 - 1e-12);
    EXPECT_LE(factor, 1.0 + std::sqrt(2.0) + 1e-12);
  }
  EXPECT_EQ(expected_y_upper_bound(CrispLife{300}), 300);
}

TEST(ExpectedOrderStatistics, Scalings) {
  FuzzyLife f(300, 1500);
  const double e = expected_y(f);
  EXPECT_NEAR(expected_ymin(f, 1), e, 1e-12 * e);
  EXPECT_NEAR(expected_ymin(f, 50), e / 50, 1e-12 * e);
  EXPECT_NEAR(expected_ymax(f, 1), e, 1e-12 * e);
  EXPECT_NEAR(expected_ymax(f, 2), 1.5 * e, 1e-12 * e);
  EXPECT_NEAR(harmonic_number(3), 11.0 / 6.0, 1e-15);
  const double qmin = testing::mixture_expectation(300, 1500, [](double l) { return 1.0 / (7 * l); }, 256);
  EXPECT_NEAR(expected_ymin(f, 7) / qmin, 1.0, 1e-9);
}

}  // namespace
}  // namespace fasp
