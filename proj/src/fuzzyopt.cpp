// Copyright 2026 The fasp Authors
// SPDX-License-Identifier: Apache-2.0

#include "fasp/fuzzyopt.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "fasp/errors.hpp"

namespace fasp {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

CrispNlp risk_nlp(const FuzzyProgram& p, double g_upper, double h_upper) {
  CrispNlp nlp;
  auto eval = p.evaluate;
  nlp.evaluate = [eval](std::span<const double> x, std::span<double> c) {
    const ProgramValues v = eval(x);
    c[0] = v.g;
    c[1] = v.h;
    return v.objective;
  };
  nlp.upper = {g_upper, h_upper};
  nlp.names = {"g", "h"};
  nlp.box = p.box;
  nlp.ordering = p.ordering;
  nlp.warm_starts = p.warm_starts;
  return nlp;
}

bool spread_degenerate(double z_lower, double z_upper) {
  return (z_upper - z_lower) < kDegenerateObjectiveSpread * std::max(1.0, std::abs(z_upper));
}

double objective_membership(MembershipForm form, double objective, double z_lower,
                            double z_upper) {
  const double spread = z_upper - z_lower;
  return form == MembershipForm::paper_verbatim ? (objective - z_lower) / spread
                                                : (z_upper - objective) / spread;
}

struct Memberships {
  double objective;
  double g;
  double h;
  double phi;
};

Memberships memberships_at(const MaxPhiProblem& p, const ProgramValues& v, bool dropped) {
  Memberships m;
  m.objective = dropped ? 1.0 : objective_membership(p.form, v.objective, p.z_lower, p.z_upper);
  m.g = risk_membership(p.program.alpha, v.g);
  m.h = risk_membership(p.program.beta, v.h);
  m.phi = std::min({1.0, m.objective, m.g, m.h});
  return m;
}

}  // namespace

double risk_membership(const FuzzyLevel& l, double value, double tol) {
  if (l.slack() > 0.0) return std::min(1.0, (l.relaxed() - value) / l.slack());
  const double excess = value - l.level() - tol;
  return excess <= 0.0 ? 1.0 : 1.0 - excess / tol;
}

ZimmermannBounds zimmermann_bounds(const FuzzyProgram& p, const SolverSettings& s) {
  if (!p.evaluate) throw DomainError("zimmermann_bounds: missing evaluator");
  ZimmermannBounds out;
  try {
    out.tight = solve_crisp(risk_nlp(p, p.alpha.level(), p.beta.level()), s);
  } catch (const InfeasibleError& e) {
    CrispNlp relaxed = risk_nlp(p, p.alpha.relaxed(), p.beta.relaxed());
    std::string relaxed_state = "relaxed program infeasible as well";
    try {
      solve_crisp(relaxed, s);
      relaxed_state = "relaxed program feasible";
    } catch (const InfeasibleError&) {
    }
    throw InfeasibleError("tight program infeasible (best violation " +
                              std::to_string(e.best_violation()) + "); " + relaxed_state,
                          e.best_violation());
  }
  CrispNlp relaxed = risk_nlp(p, p.alpha.relaxed(), p.beta.relaxed());
  relaxed.warm_starts.insert(relaxed.warm_starts.begin(), out.tight.x);
  out.relaxed = solve_crisp(relaxed, s);
  out.z_lower = std::min(out.tight.objective, out.relaxed.objective);
  out.z_upper = std::max(out.tight.objective, out.relaxed.objective);
  return out;
}

const char* to_string(MembershipForm f) {
  return f == MembershipForm::paper_verbatim ? "paper_verbatim" : "standard";
}

MembershipForm membership_form_from_string(const std::string& s) {
  if (s == "paper_verbatim" || s == "verbatim") return MembershipForm::paper_verbatim;
  if (s == "standard") return MembershipForm::standard;
  throw DomainError("unknown membership form '" + s + "' (expected paper_verbatim or standard)");
}

MaxPhiResult solve_max_phi(const MaxPhiProblem& p, const SolverSettings& s) {
  const FuzzyProgram& prog = p.program;
  if (!prog.evaluate) throw DomainError("solve_max_phi: missing evaluator");
  if (!(p.z_lower <= p.z_upper)) throw DomainError("solve_max_phi: requires z_lower <= z_upper");
  const bool dropped = spread_degenerate(p.z_lower, p.z_upper);
  const double spread = p.z_upper - p.z_lower;
  const auto alpha = prog.alpha;
  const auto beta = prog.beta;
  const std::size_t d = prog.box.size();

  // Phase 1: variables (x, φ); minimize -φ.
  CrispNlp phase1;
  auto eval = prog.evaluate;
  const MembershipForm form = p.form;
  const double zl = p.z_lower;
  const double zu = p.z_upper;
  phase1.evaluate = [=](std::span<const double> y, std::span<double> c) {
    const double phi = y[d];
    const ProgramValues v = eval(y.first(d));
    if (!std::isfinite(v.objective)) return kInf;
    c[0] = v.g - (alpha.level() + alpha.slack() * (1.0 - phi));
    c[1] = v.h - (beta.level() + beta.slack() * (1.0 - phi));
    c[2] = dropped ? 0.0 : phi - objective_membership(form, v.objective, zl, zu);
    return -phi;
  };
  phase1.upper = {0.0, 0.0, 0.0};
  phase1.names = {"g", "h", "objective"};
  phase1.box = prog.box;
  phase1.box.push_back({0.0, 1.0, VarScale::linear});
  phase1.ordering = prog.ordering;
  for (const auto& w : prog.warm_starts) {
    for (double phi : {1.0, 0.0}) {
      auto y = w;
      y.push_back(phi);
      phase1.warm_starts.push_back(std::move(y));
    }
  }

  CrispSolution first = solve_crisp(phase1, s);
  std::vector<double> x(first.x.begin(), first.x.begin() + static_cast<std::ptrdiff_t>(d));
  ProgramValues values = prog.evaluate(x);
  Memberships m = memberships_at(p, values, dropped);
  if (m.phi < -s.feasibility_tol) {
    throw InfeasibleError("solve_max_phi: no point reaches phi >= 0", -m.phi);
  }

  // Phase 2: lowest objective among points keeping every membership >= φ*.
  const double phi_star = std::clamp(m.phi, 0.0, 1.0);
  CrispNlp phase2;
  phase2.evaluate = [=](std::span<const double> xx, std::span<double> c) {
    const ProgramValues v = eval(xx);
    if (!std::isfinite(v.objective)) return kInf;
    c[0] = v.g;
    c[1] = v.h;
    c[2] = dropped ? 0.0
                   : (form == MembershipForm::paper_verbatim ? -(v.objective - zl) / spread
                                                             : (v.objective - zl) / spread);
    return v.objective;
  };
  phase2.upper = {alpha.level() + alpha.slack() * (1.0 - phi_star),
                  beta.level() + beta.slack() * (1.0 - phi_star),
                  dropped ? 0.0
                          : (form == MembershipForm::paper_verbatim ? -phi_star
                                                                    : 1.0 - phi_star)};
  phase2.names = {"g", "h", "objective"};
  phase2.box = prog.box;
  phase2.ordering = prog.ordering;
  phase2.warm_starts.push_back(x);
  for (const auto& w : prog.warm_starts) phase2.warm_starts.push_back(w);
  try {
    CrispSolution second = solve_crisp(phase2, s);
    const ProgramValues v2 = prog.evaluate(second.x);
    const Memberships m2 = memberships_at(p, v2, dropped);
    if (m2.phi >= m.phi - 1e-6 && v2.objective <= values.objective) {
      x = second.x;
      values = v2;
      m = m2;
    }
  } catch (const InfeasibleError&) {
    // The phase-1 point stands.
  }

  MaxPhiResult out;
  out.x = std::move(x);
  out.phi = m.phi;
  out.values = values;
  out.objective_membership = m.objective;
  out.g_membership = m.g;
  out.h_membership = m.h;
  out.objective_constraint_dropped = dropped;
  out.trace = std::move(first.trace);
  return out;
}

}  // namespace fasp
