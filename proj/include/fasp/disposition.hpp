// Copyright 2026 The fasp Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fasp/plan_solver.hpp"

namespace fasp {

enum class Interpretation { inter_failure_times, item_lifetimes };

struct FailureData {
  std::vector<double> values;  // in recorded order
  Interpretation interpretation = Interpretation::inter_failure_times;
  std::optional<double> censor_time;

  /// Throws InputError unless every value and the censor time are positive.
  void validate() const;
};

enum class Decision { accept, reject, continue_exhausted };

const char* to_string(Decision d);

struct Disposition {
  Decision decision;
  int decided_at;  // 1-based value index (SSP) or group number; 0 if undecided
  std::vector<double> evidence;  // statistic of every step examined
};

/// The thresholds (and group size) a disposition applies.
struct PlanRule {
  double t1;
  double t2;
  int n = 1;

  static PlanRule from_design(const PlanDesign& d);
};

/// Reject on the first value below t1, accept on the first at or above t2.
Disposition dispose_ssp(const FailureData& d, const PlanRule& rule);
/// Consecutive blocks of n values; the block minimum is the statistic.
Disposition dispose_rgsp_min(const FailureData& d, const PlanRule& rule);
/// As dispose_rgsp_min with the block maximum.
Disposition dispose_rgsp_max(const FailureData& d, const PlanRule& rule);
/// Censored MLE of each block (censor time from the data or `tau`).
Disposition dispose_type1(const FailureData& d, const PlanRule& rule,
                          std::optional<double> tau = std::nullopt);

Disposition dispose(PlanFamily family, const FailureData& d, const PlanRule& rule,
                    std::optional<double> tau = std::nullopt);

/// (sum of failures before tau + (n - q) tau) / q over the first n values,
/// q being the number of values below tau. Throws DomainError when q = 0.
double censored_mle(const FailureData& d, int n, double tau);

/// One value per line, optional non-numeric header line.
FailureData parse_failure_csv(const std::string& text);
/// A JSON array of numbers, or an object {"values": [...], "censor_time": x}.
FailureData parse_failure_json(const std::string& text);
/// Picks the parser by extension (.json, anything else as CSV).
FailureData load_failure_data(const std::string& path);

/// The 36 recorded lifetimes (cycles) of the appliance life test.
FailureData case_study_data();

}  // namespace fasp
