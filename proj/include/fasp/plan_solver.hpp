// Copyright 2026 The fasp Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fasp/fuzzyopt.hpp"
#include "fasp/plans.hpp"

namespace fasp {

/// Outcome of the inner solve at one group size.
struct PlanCandidate {
  int n;
  bool feasible;
  double phi;        // NaN when infeasible
  double objective;  // NaN when infeasible
  double t1;
  double t2;
  double best_violation;  // tight-program violation when infeasible, else 0
};

struct PlanDesign {
  PlanFamily family;
  double t1;
  double t2;
  std::optional<int> n;
  double phi;
  double objective_value;
  double g;
  double h;
  double g_margin;  // relaxed bound at phi minus g
  double h_margin;
  double z_lower;
  double z_upper;
  MembershipForm form;
  bool objective_constraint_dropped;
  std::vector<double> trace;
  std::vector<PlanCandidate> candidates;
};

struct DesignOptions {
  MembershipForm form = MembershipForm::paper_verbatim;
  QuadratureSettings quadrature{};
};

/// Search over n = 1..n_max (a single solve for SSP). Picks the largest φ,
/// then the smaller objective, then the smaller n. Group sizes that provably
/// cannot beat a φ = 1 incumbent are skipped and left out of `candidates`.
/// Throws
/// InfeasibleError listing per-n violations when no n is feasible.
PlanDesign solve_plan(const PlanProblem& p, const SolverSettings& s = {},
                      const DesignOptions& o = {});

/// The same pipeline on pure exponential lives with zero slack.
PlanDesign crisp_baseline(const PlanProblem& p, const SolverSettings& s = {},
                          const DesignOptions& o = {});

}  // namespace fasp
