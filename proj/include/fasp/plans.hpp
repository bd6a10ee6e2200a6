// Copyright 2026 The fasp Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fasp/fuzzyopt.hpp"
#include "fasp/lifemodel.hpp"
#include "fasp/membership.hpp"
#include "fasp/quadrature.hpp"

namespace fasp {

enum class PlanFamily { ssp, rgsp_min, rgsp_max, type_i };
enum class ObjectiveVariant { etc_star, etc_upper_bound };

const char* to_string(PlanFamily f);
PlanFamily plan_family_from_string(const std::string& s);
const char* to_string(ObjectiveVariant v);
ObjectiveVariant objective_variant_from_string(const std::string& s);

struct PlanProblem {
  PlanFamily family = PlanFamily::ssp;
  FuzzyLife lambda0{300.0, 1500.0};
  FuzzyLife lambda1{50.0, 1500.0};
  FuzzyLevel alpha{0.05, 0.05};
  FuzzyLevel beta{0.05, 0.05};
  double unit_cost = 1.0;
  std::optional<double> tau;  // TYPE_I only
  ObjectiveVariant objective_variant = ObjectiveVariant::etc_star;
  /// Largest group size searched; 0 picks the family default.
  int n_max = 0;
  /// Caps t2 at the acceptable mean life instead of ten times it.
  bool restrict_t2_to_aql = false;
  /// Pure exponential lives (the a -> infinity limit) instead of the
  /// weighted mixtures.
  bool crisp_model = false;

  void validate() const;
  int effective_n_max() const;
  bool uses_group_size() const { return family != PlanFamily::ssp; }
  LifeLaw law0() const;
  LifeLaw law1() const;
};

inline constexpr int kDefaultGroupMax = 50;
inline constexpr int kDefaultTypeIGroupMax = 1000;

/// Objective and risks of one plan at one decision point.
struct PlanPoint {
  double objective;
  double g;  // P_R at the acceptable life
  double h;  // P_A at the rejectable life
  TriProb at_aql;
  TriProb at_rql;
};

/// Evaluates (objective, g, h) at (t1, t2, n). Unusable points (every
/// group continues) get an infinite objective.
using PlanFunction = std::function<PlanPoint(double t1, double t2, int n)>;

PlanFunction ssp_objective_and_constraints(const PlanProblem& p,
                                           const QuadratureSettings& qs = {});
PlanFunction rgsp_min_objective_and_constraints(const PlanProblem& p,
                                                const QuadratureSettings& qs = {});
PlanFunction rgsp_max_objective_and_constraints(const PlanProblem& p,
                                                const QuadratureSettings& qs = {});
PlanFunction typeI_objective_and_constraints(const PlanProblem& p,
                                             const QuadratureSettings& qs = {});
/// Smallest objective any (t1, t2) can reach at group size n: the cost of
/// a single group.
double objective_lower_bound(const PlanProblem& p, int n, const QuadratureSettings& qs = {});

/// Dispatches on p.family.
PlanFunction objective_and_constraints(const PlanProblem& p,
                                       const QuadratureSettings& qs = {});

/// Decision box over (t1, t2) for the family.
std::vector<Variable> decision_box(const PlanProblem& p);

/// The fuzzy program over (t1, t2) at a fixed group size.
FuzzyProgram plan_program(const PlanProblem& p, const PlanFunction& f, int n);

}  // namespace fasp
