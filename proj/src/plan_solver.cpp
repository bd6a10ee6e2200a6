// Copyright 2026 The fasp Authors
// SPDX-License-Identifier: Apache-2.0

#include "fasp/plan_solver.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "fasp/errors.hpp"

namespace fasp {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

struct Chosen {
  int n;
  ZimmermannBounds bounds;
  MaxPhiResult result;
};

// (φ, -objective, -n) ordering; φ within 1e-9 and relative objective
// within 1e-9 count as ties.
bool better(const MaxPhiResult& a, int na, const MaxPhiResult& b, int nb) {
  if (std::abs(a.phi - b.phi) > 1e-9) return a.phi > b.phi;
  const double oa = a.values.objective;
  const double ob = b.values.objective;
  if (std::abs(oa - ob) > 1e-9 * std::max(std::abs(oa), std::abs(ob))) return oa < ob;
  return na < nb;
}

}  // namespace

PlanDesign solve_plan(const PlanProblem& p, const SolverSettings& s, const DesignOptions& o) {
  p.validate();
  s.validate();
  const PlanFunction f = objective_and_constraints(p, o.quadrature);
  const int n_hi = p.effective_n_max();

  std::optional<Chosen> best;
  std::vector<PlanCandidate> candidates;
  std::vector<double> previous;
  for (int n = 1; n <= n_hi; ++n) {
    // Once φ = 1 is reached, a group size whose single-group cost already
    // matches the incumbent cannot win the ordering.
    if (best && best->result.phi >= 1.0 - 1e-12 &&
        objective_lower_bound(p, n, o.quadrature) >= best->result.values.objective) {
      if (p.family == PlanFamily::rgsp_max || p.family == PlanFamily::type_i) break;
      continue;
    }
    FuzzyProgram prog = plan_program(p, f, n);
    if (!previous.empty()) prog.warm_starts.push_back(previous);
    PlanCandidate cand{n, false, kNaN, kNaN, kNaN, kNaN, 0.0};
    try {
      ZimmermannBounds zb = zimmermann_bounds(prog, s);
      MaxPhiProblem mp{prog, zb.z_lower, zb.z_upper, o.form};
      mp.program.warm_starts.push_back(zb.tight.x);
      mp.program.warm_starts.push_back(zb.relaxed.x);
      MaxPhiResult r = solve_max_phi(mp, s);
      cand.feasible = true;
      cand.phi = r.phi;
      cand.objective = r.values.objective;
      cand.t1 = r.x[0];
      cand.t2 = r.x[1];
      previous = zb.tight.x;
      if (!best || better(r, n, best->result, best->n)) {
        best = Chosen{n, std::move(zb), std::move(r)};
      }
    } catch (const InfeasibleError& e) {
      cand.best_violation = e.best_violation();
    }
    candidates.push_back(cand);
  }

  if (!best) {
    std::ostringstream msg;
    msg << "no feasible " << to_string(p.family) << " design for n = 1.." << n_hi
        << "; best tight violation per n:";
    double overall = std::numeric_limits<double>::infinity();
    for (const PlanCandidate& c : candidates) {
      msg << ' ' << c.n << ':' << c.best_violation;
      overall = std::min(overall, c.best_violation);
    }
    throw InfeasibleError(msg.str(), overall);
  }

  const MaxPhiResult& r = best->result;
  PlanDesign d;
  d.family = p.family;
  d.t1 = r.x[0];
  d.t2 = r.x[1];
  if (p.uses_group_size()) d.n = best->n;
  d.phi = r.phi;
  const PlanPoint pt = f(d.t1, d.t2, best->n);
  d.objective_value = pt.objective;
  d.g = pt.g;
  d.h = pt.h;
  const double phi = std::clamp(r.phi, 0.0, 1.0);
  d.g_margin = p.alpha.level() + p.alpha.slack() * (1.0 - phi) - d.g;
  d.h_margin = p.beta.level() + p.beta.slack() * (1.0 - phi) - d.h;
  d.z_lower = best->bounds.z_lower;
  d.z_upper = best->bounds.z_upper;
  d.form = o.form;
  d.objective_constraint_dropped = r.objective_constraint_dropped;
  d.trace = r.trace;
  d.candidates = std::move(candidates);
  return d;
}

PlanDesign crisp_baseline(const PlanProblem& p, const SolverSettings& s, const DesignOptions& o) {
  PlanProblem q = p;
  q.crisp_model = true;
  q.alpha = FuzzyLevel(p.alpha.level(), 0.0);
  q.beta = FuzzyLevel(p.beta.level(), 0.0);
  return solve_plan(q, s, o);
}

}  // namespace fasp
