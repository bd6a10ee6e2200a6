// Copyright 2026 The fasp Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <fstream>

#include "fasp/disposition.hpp"
#include "fasp/errors.hpp"

namespace fasp {
namespace {

FailureData data(std::vector<double> v) {
  FailureData d;
  d.values = std::move(v);
  return d;
}

TEST(CaseStudy, Fixture) {
  const FailureData d = case_study_data();
  ASSERT_EQ(d.values.size(), 36u);
  EXPECT_EQ(d.values[0], 170);
  EXPECT_EQ(d.values[7], 13403);
}

TEST(DisposeSsp, CaseStudyAccepts) {
  const Disposition r = dispose_ssp(case_study_data(), {41, 3159});
  EXPECT_EQ(r.decision, Decision::accept);
  EXPECT_GE(case_study_data().values[r.decided_at - 1], 3159);
}

TEST(DisposeSsp, TrivialRules) {
  EXPECT_EQ(dispose_ssp(data({40}), {41, 3159}).decision, Decision::reject);
  EXPECT_EQ(dispose_ssp(data({40}), {41, 3159}).decided_at, 1);
  const Disposition c = dispose_ssp(data({100, 200}), {41, 3159});
  EXPECT_EQ(c.decision, Decision::continue_exhausted);
  EXPECT_EQ(c.decided_at, 0);
  EXPECT_EQ(c.evidence.size(), 2u);
  EXPECT_EQ(dispose_ssp(data({41}), {41, 3159}).decision, Decision::continue_exhausted);
  EXPECT_EQ(dispose_ssp(data({3159}), {41, 3159}).decision, Decision::accept);
  EXPECT_NE(dispose_ssp(case_study_data(), {0, 1e300}).decision, Decision::reject);
  EXPECT_NE(dispose_ssp(case_study_data(), {0, 1e300}).decision, Decision::accept);
  EXPECT_THROW(dispose_ssp(data({}), {41, 3159}), InputError);
  FailureData items = case_study_data();
  items.interpretation = Interpretation::item_lifetimes;
  EXPECT_THROW(dispose_ssp(items, {41, 3159}), InputError);
}

TEST(DisposeGroups, CaseStudy) {
  const Disposition mn = dispose_rgsp_min(case_study_data(), {4, 141, 20});
  EXPECT_EQ(mn.decision, Decision::accept);
  EXPECT_EQ(mn.decided_at, 1);
  EXPECT_EQ(mn.evidence.at(0), 170);
  const Disposition mx = dispose_rgsp_max(case_study_data(), {203, 2630, 2});
  EXPECT_EQ(mx.decision, Decision::accept);
  EXPECT_EQ(mx.decided_at, 1);
  EXPECT_EQ(mx.evidence.at(0), 2694);
  EXPECT_THROW(dispose_rgsp_min(data({1, 2}), {1, 2, 3}), InputError);
}

TEST(DisposeGroups, BandContinuesToNextBlock) {
  const Disposition r = dispose_rgsp_min(data({50, 60, 200, 300}), {10, 100, 2});
  EXPECT_EQ(r.decision, Decision::accept);
  EXPECT_EQ(r.decided_at, 2);
  const Disposition x = dispose_rgsp_max(data({50, 60, 200}), {10, 100, 2});
  EXPECT_EQ(x.decision, Decision::continue_exhausted);
}

TEST(CensoredMle, CaseStudy) {
  EXPECT_NEAR(censored_mle(case_study_data(), 13, 2000), 3040.6667, 1e-4);
  EXPECT_DOUBLE_EQ(censored_mle(data({1, 2, 3}), 3, 10), 2.0);
  EXPECT_THROW(censored_mle(data({50}), 1, 10), DomainError);
}

TEST(DisposeType1, CaseStudy) {
  const Disposition r = dispose_type1(case_study_data(), {1219, 1990, 13}, 2000.0);
  EXPECT_EQ(r.decision, Decision::accept);
  EXPECT_EQ(r.decided_at, 1);
  EXPECT_NEAR(r.evidence.at(0), 3040.6667, 1e-4);
  // λ̂ = 2 lands in the band, and one value does not fill the next block.
  const Disposition c = dispose_type1(data({1, 3, 5}), {1, 3, 2}, 10.0);
  EXPECT_EQ(c.decision, Decision::continue_exhausted);
  EXPECT_THROW(dispose_type1(case_study_data(), {1219, 1990, 13}), InputError);
}

TEST(Dispatch, MatchesFamilyFunction) {
  const FailureData d = case_study_data();
  EXPECT_EQ(dispose(PlanFamily::rgsp_min, d, {4, 141, 20}).decided_at,
            dispose_rgsp_min(d, {4, 141, 20}).decided_at);
}

TEST(Ingestion, CsvAndJson) {
  const FailureData c = parse_failure_csv("cycles\n1\n2.5\n\n3\n");
  EXPECT_EQ(c.values, (std::vector<double>{1, 2.5, 3}));
  EXPECT_THROW(parse_failure_csv("1\nx\n"), InputError);
  EXPECT_THROW(parse_failure_csv(""), InputError);
  EXPECT_EQ(parse_failure_json("[1, 2]").values.size(), 2u);
  const FailureData j =
      parse_failure_json(R"({"values": [5], "censor_time": 2, "interpretation": "item_lifetimes"})");
  EXPECT_EQ(*j.censor_time, 2);
  EXPECT_EQ(j.interpretation, Interpretation::item_lifetimes);
  EXPECT_THROW(parse_failure_json("{"), InputError);
  EXPECT_THROW(parse_failure_json("[-1]"), InputError);
  EXPECT_THROW(load_failure_data("/nonexistent/file.csv"), InputError);
}

}  // namespace
}  // namespace fasp
