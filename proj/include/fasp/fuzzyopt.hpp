// Copyright 2026 The fasp Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "fasp/membership.hpp"

namespace fasp {

// ---------------------------------------------------------------------------
// Crisp constrained minimization
// ---------------------------------------------------------------------------

enum class VarScale { linear, log };

struct Variable {
  double lo;
  double hi;
  VarScale scale = VarScale::linear;
};

/// x[upper] >= x[lower], with a relative gap when strict.
struct Ordering {
  std::size_t lower;
  std::size_t upper;
  bool strict = true;
};

/// Minimize objective(x) subject to constraint_k(x) <= upper_k inside a box.
///
/// The objective and all constraint values come from one callback so that
/// shared intermediate quantities are computed once per point. A non-finite
/// objective marks a point as unusable.
struct CrispNlp {
  using Evaluator =
      std::function<double(std::span<const double> x, std::span<double> constraints)>;

  Evaluator evaluate;
  std::vector<double> upper;  // one bound per constraint
  std::vector<std::string> names;
  std::vector<Variable> box;
  std::vector<Ordering> ordering;
  /// Extra starting points tried before the random restarts.
  std::vector<std::vector<double>> warm_starts;

  /// Builds the combined evaluator from separate callables.
  static CrispNlp from_functions(
      std::function<double(std::span<const double>)> objective,
      std::vector<std::function<double(std::span<const double>)>> constraints,
      std::vector<double> upper, std::vector<Variable> box,
      std::vector<Ordering> ordering = {});

  void validate() const;
};

struct SolverSettings {
  int restarts = 32;
  std::uint64_t seed = 42;
  double penalty_initial = 10.0;
  double penalty_growth = 10.0;  // multiplier per escalation
  int penalty_escalations = 10;
  double x_tol = 1e-8;   // simplex size in normalized coordinates
  double f_tol = 1e-12;  // relative spread of simplex values
  int max_iterations = 2000;  // per Nelder-Mead run
  double feasibility_tol = 1e-6;

  void validate() const;
};

struct CrispSolution {
  std::vector<double> x;
  double objective = 0.0;
  double max_violation = 0.0;
  std::vector<double> constraints;
  /// Best penalized objective reached by each start, in start order
  /// (warm starts first); +inf for starts that never became usable.
  std::vector<double> trace;
};

/// Multi-start Nelder-Mead with an escalating exterior quadratic penalty.
/// Deterministic for a fixed seed. Throws InfeasibleError when no start
/// ends within feasibility_tol of every constraint.
CrispSolution solve_crisp(const CrispNlp& nlp, const SolverSettings& s = {});

// ---------------------------------------------------------------------------
// Fuzzy program and the max-min (Zimmermann) reduction
// ---------------------------------------------------------------------------

/// Objective and the two risk functions evaluated at one decision point.
struct ProgramValues {
  double objective;
  double g;  // producer's-risk function, fuzzy-bounded by alpha
  double h;  // consumer's-risk function, fuzzy-bounded by beta
};

/// min objective(x) subject to g(x) ≲ alpha, h(x) ≲ beta.
struct FuzzyProgram {
  std::function<ProgramValues(std::span<const double>)> evaluate;
  std::vector<Variable> box;
  std::vector<Ordering> ordering;
  FuzzyLevel alpha;
  FuzzyLevel beta;
  std::vector<std::vector<double>> warm_starts;
};

struct ZimmermannBounds {
  double z_lower;
  double z_upper;
  CrispSolution tight;    // g <= alpha, h <= beta
  CrispSolution relaxed;  // g <= alpha + b1, h <= beta + b2
};

/// Solves the tight and relaxed crisp programs. The relaxed search also
/// starts from the tight optimum, so its objective never exceeds the tight
/// one. Throws InfeasibleError if the tight program is infeasible; the
/// message says whether the relaxed one was.
ZimmermannBounds zimmermann_bounds(const FuzzyProgram& p, const SolverSettings& s = {});

enum class MembershipForm {
  /// φ <= (objective - Z_L) / (Z_U - Z_L); rises with the objective.
  paper_verbatim,
  /// φ <= (Z_U - objective) / (Z_U - Z_L), the usual cost-minimizing form.
  standard,
};

const char* to_string(MembershipForm f);
MembershipForm membership_form_from_string(const std::string& s);

struct MaxPhiProblem {
  FuzzyProgram program;
  double z_lower;
  double z_upper;
  MembershipForm form = MembershipForm::paper_verbatim;
};

struct MaxPhiResult {
  std::vector<double> x;
  double phi;
  ProgramValues values;
  double objective_membership;  // 1 when the objective constraint is dropped
  double g_membership;
  double h_membership;
  bool objective_constraint_dropped;
  std::vector<double> trace;
};

/// Objective spreads below this are treated as Z_U == Z_L.
inline constexpr double kDegenerateObjectiveSpread = 1e-9;

/// Membership of a risk value, clipped above at 1 but not below, so a
/// negative result marks a violated relaxed bound. With zero slack it is 1
/// up to `tol` past the level and reaches 0 at `2 tol` past it.
double risk_membership(const FuzzyLevel& l, double value, double tol = 1e-6);

/// Maximizes φ subject to the three membership constraints, then, holding
/// φ at its optimum, picks the lowest-objective point. The reported φ is
/// the minimum of the memberships at the returned point. Throws
/// InfeasibleError when no point reaches φ >= 0.
MaxPhiResult solve_max_phi(const MaxPhiProblem& p, const SolverSettings& s = {});

}  // namespace fasp
