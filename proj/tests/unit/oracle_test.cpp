// Copyright 2026 The fasp Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <cmath>

#include "fasp/errors.hpp"
#include "fasp/oracle.hpp"

namespace fasp {
namespace {

TEST(MixtureSampler, HalfOfProposalsAccepted) {
  EXPECT_NEAR(mixture_acceptance_rate(FuzzyLife(300, 1500), 200000, 7), 0.5, 0.01);
}

TEST(MixtureSampler, MeanOfInverseRateMatchesExpectedLife) {
  FuzzyLife f(300, 1500);
  Xoshiro256 rng(11);
  const int n = 200000;
  double sum = 0, sum2 = 0;
  for (int i = 0; i < n; ++i) {
    const double l = sample_mixture_rate(f, rng);
    ASSERT_GE(l, f.support_lo());
    ASSERT_LE(l, f.support_hi());
    sum += 1 / l;
    sum2 += 1 / (l * l);
  }
  const double mean = sum / n, se = std::sqrt((sum2 / n - mean * mean) / n);
  EXPECT_NEAR(mean, expected_y(f), 4 * se);
}

TEST(McTriprob, ReproducibleForSeed) {
  const McCase c{"ssp", PlanFamily::ssp, FuzzyLife(300, 1500), {5.8231, 251.1178}, 1, 0.0};
  const McEstimate a = mc_triprob(c, 20000, 42), b = mc_triprob(c, 20000, 42);
  EXPECT_EQ(a.p.p_a, b.p.p_a);
  EXPECT_EQ(a.p.p_r, b.p.p_r);
  const McEstimate other = mc_triprob(c, 20000, 43);
  EXPECT_NE(a.p.p_a, other.p.p_a);
  EXPECT_NEAR(a.p.p_a + a.p.p_r + a.p.p_c, 1.0, 1e-12);
  EXPECT_THROW(mc_triprob(c, 0, 42), DomainError);
}

TEST(McTriprob, MaxWithSingleItemMatchesSsp) {
  const Thresholds th{130.6584, 338.9876};
  const McCase ssp{"s", PlanFamily::ssp, FuzzyLife(300, 15000), th, 1, 0.0};
  const McCase max{"m", PlanFamily::rgsp_max, FuzzyLife(300, 15000), th, 1, 0.0};
  const McEstimate a = mc_triprob(ssp, 200000, 1), b = mc_triprob(max, 200000, 2);
  const double se = std::hypot(a.se.p_a, b.se.p_a);
  EXPECT_NEAR(a.p.p_a, b.p.p_a, 3 * se);
  EXPECT_NEAR(closed_form_triprob(ssp).p_a, closed_form_triprob(max).p_a, 1e-14);
}

TEST(Quadrature, MatchesClosedFormOnGrid) {
  const auto grid = regression_grid();
  ASSERT_EQ(grid.size(), 20u);
  for (const McCase& c : grid) {
    const TriProb q = quadrature_triprob(c), cf = closed_form_triprob(c);
    EXPECT_NEAR(q.p_a, cf.p_a, 1e-8) << c.label;
    EXPECT_NEAR(q.p_r, cf.p_r, 1e-8) << c.label;
    EXPECT_NEAR(q.p_c, cf.p_c, 1e-8) << c.label;
  }
}

TEST(RunOracle, SmallDrawsStillDefined) {
  const auto reports = run_oracle_cases(regression_grid(), 100, 42);
  EXPECT_FALSE(reports.empty());
  for (const auto& r : reports) {
    EXPECT_TRUE(std::isfinite(r.closed_form)) << r.quantity;
    EXPECT_TRUE(std::isfinite(r.tolerance)) << r.quantity;
    EXPECT_GT(r.tolerance, 0.0) << r.quantity;
  }
}

TEST(RunOracle, TypeIRowsAreInformational) {
  const auto reports = run_oracle_cases(typeI_gap_cases(), 2000, 42);
  for (const auto& r : reports) EXPECT_TRUE(r.informational) << r.quantity;
  EXPECT_TRUE(all_pass(reports));
}

TEST(Golden, EmbeddedRowsParse) {
  const auto& rows = golden_rows();
  EXPECT_EQ(rows.size(), 80u);
  EXPECT_EQ(parse_golden_csv(golden_csv_text()).size(), rows.size());
  EXPECT_THROW(parse_golden_csv("table,row\n1,2\n"), InputError);
}

TEST(Golden, CostTolerances) {
  EXPECT_DOUBLE_EQ(cost_tolerance_for_table(1), 0.02);
  EXPECT_DOUBLE_EQ(cost_tolerance_for_table(3), 0.05);
  EXPECT_DOUBLE_EQ(cost_tolerance_for_table(7), 0.02);
}

TEST(Golden, VerifyWithoutSolverOnTableOne) {
  std::vector<GoldenRow> rows;
  for (const auto& r : golden_rows()) {
    if (r.table == 1) rows.push_back(r);
  }
  VerifySettings s;
  s.run_solver = false;
  const TableReport rep = verify_tables(rows, s);
  EXPECT_EQ(rep.fuzzy_design_rows, 16);
  EXPECT_EQ(rep.fuzzy_feasible_rows, 16);
  EXPECT_DOUBLE_EQ(rep.feasible_fraction, 1.0);
  const TableReport empty = verify_tables({}, s);
  EXPECT_DOUBLE_EQ(empty.feasible_fraction, 1.0);
  EXPECT_NE(to_csv(rep).find("table,row"), std::string::npos);
}

}  // namespace
}  // namespace fasp
