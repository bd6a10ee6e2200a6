// Copyright 2026 The fasp Authors
// SPDX-License-Identifier: Apache-2.0

#include "fasp/plans.hpp"

#include <cmath>
#include <limits>

#include "fasp/errors.hpp"

namespace fasp {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kThresholdFloor = 1e-6;

// Long-run assembly shared by all families: the objective is the cost of
// one group times the expected number of groups.
PlanPoint assemble(double group_cost, const TriProb& aql, const TriProb& rql) {
  PlanPoint pt{kInf, 0.0, 0.0, aql, rql};
  const double decided0 = aql.p_a + aql.p_r;
  const double decided1 = rql.p_a + rql.p_r;
  if (!(decided0 > 0.0) || !(decided1 > 0.0)) return pt;
  pt.objective = group_cost / decided0;
  pt.g = aql.p_r / decided0;
  pt.h = rql.p_a / decided1;
  return pt;
}

double base_expectation(const PlanProblem& p, const QuadratureSettings& qs) {
  const LifeLaw law = p.law0();
  return p.objective_variant == ObjectiveVariant::etc_upper_bound ? expected_y_upper_bound(law)
                                                                  : expected_y(law, qs);
}

void require_family(const PlanProblem& p, PlanFamily f, const char* who) {
  p.validate();
  if (p.family != f) {
    throw DomainError(std::string(who) + ": problem family is " + to_string(p.family));
  }
}

}  // namespace

const char* to_string(PlanFamily f) {
  switch (f) {
    case PlanFamily::ssp: return "ssp";
    case PlanFamily::rgsp_min: return "rgsp_min";
    case PlanFamily::rgsp_max: return "rgsp_max";
    case PlanFamily::type_i: return "type1";
  }
  return "?";
}

PlanFamily plan_family_from_string(const std::string& s) {
  if (s == "ssp") return PlanFamily::ssp;
  if (s == "rgsp_min" || s == "min") return PlanFamily::rgsp_min;
  if (s == "rgsp_max" || s == "max") return PlanFamily::rgsp_max;
  if (s == "type1" || s == "type_i" || s == "typeI") return PlanFamily::type_i;
  throw DomainError("unknown plan family '" + s + "' (expected ssp, rgsp_min, rgsp_max, type1)");
}

const char* to_string(ObjectiveVariant v) {
  return v == ObjectiveVariant::etc_star ? "etc_star" : "etc_upper_bound";
}

ObjectiveVariant objective_variant_from_string(const std::string& s) {
  if (s == "etc_star" || s == "star") return ObjectiveVariant::etc_star;
  if (s == "etc_upper_bound" || s == "upper_bound" || s == "ub") {
    return ObjectiveVariant::etc_upper_bound;
  }
  throw DomainError("unknown objective variant '" + s + "' (expected etc_star or etc_upper_bound)");
}

void PlanProblem::validate() const {
  if (!(lambda0.mean_life() > lambda1.mean_life())) {
    throw DomainError("PlanProblem: acceptable mean life must exceed the rejectable one");
  }
  if (lambda0.scale() != lambda1.scale()) {
    throw DomainError("PlanProblem: both fuzzy lives must share the scale a");
  }
  if (!(unit_cost > 0.0) || !std::isfinite(unit_cost)) {
    throw DomainError("PlanProblem: unit cost must be positive");
  }
  if (family == PlanFamily::type_i) {
    if (!tau) throw DomainError("PlanProblem: type1 plans require tau");
    if (!(*tau > 0.0) || !std::isfinite(*tau)) throw DomainError("PlanProblem: tau must be positive");
  }
  if (n_max < 0) throw DomainError("PlanProblem: n_max must be positive (0 selects the default)");
}

int PlanProblem::effective_n_max() const {
  if (family == PlanFamily::ssp) return 1;
  if (n_max > 0) return n_max;
  return family == PlanFamily::type_i ? kDefaultTypeIGroupMax : kDefaultGroupMax;
}

LifeLaw PlanProblem::law0() const {
  if (crisp_model) return CrispLife{lambda0.mean_life()};
  return lambda0;
}

LifeLaw PlanProblem::law1() const {
  if (crisp_model) return CrispLife{lambda1.mean_life()};
  return lambda1;
}

PlanFunction ssp_objective_and_constraints(const PlanProblem& p, const QuadratureSettings& qs) {
  require_family(p, PlanFamily::ssp, "ssp_objective_and_constraints");
  const double group = p.unit_cost * base_expectation(p, qs);
  const LifeLaw l0 = p.law0();
  const LifeLaw l1 = p.law1();
  return [=](double t1, double t2, int) {
    const Thresholds th{t1, t2};
    return assemble(group, ssp_triprob(l0, th), ssp_triprob(l1, th));
  };
}

PlanFunction rgsp_min_objective_and_constraints(const PlanProblem& p,
                                                const QuadratureSettings& qs) {
  require_family(p, PlanFamily::rgsp_min, "rgsp_min_objective_and_constraints");
  const double base = p.unit_cost * base_expectation(p, qs);
  const LifeLaw l0 = p.law0();
  const LifeLaw l1 = p.law1();
  return [=](double t1, double t2, int n) {
    const Thresholds th{t1, t2};
    return assemble(base / n, rgsp_min_triprob(l0, th, n), rgsp_min_triprob(l1, th, n));
  };
}

PlanFunction rgsp_max_objective_and_constraints(const PlanProblem& p,
                                                const QuadratureSettings& qs) {
  require_family(p, PlanFamily::rgsp_max, "rgsp_max_objective_and_constraints");
  const double base = p.unit_cost * base_expectation(p, qs);
  const LifeLaw l0 = p.law0();
  const LifeLaw l1 = p.law1();
  return [=](double t1, double t2, int n) {
    const Thresholds th{t1, t2};
    return assemble(base * harmonic_number(n), rgsp_max_triprob(l0, th, n),
                    rgsp_max_triprob(l1, th, n));
  };
}

PlanFunction typeI_objective_and_constraints(const PlanProblem& p, const QuadratureSettings&) {
  require_family(p, PlanFamily::type_i, "typeI_objective_and_constraints");
  const double group = p.unit_cost * *p.tau;
  const double m0 = p.lambda0.mean_life();
  const double m1 = p.lambda1.mean_life();
  const double tau = *p.tau;
  return [=](double t1, double t2, int n) {
    const Thresholds th{t1, t2};
    return assemble(group, typeI_triprob(m0, th, n, tau), typeI_triprob(m1, th, n, tau));
  };
}

PlanFunction objective_and_constraints(const PlanProblem& p, const QuadratureSettings& qs) {
  switch (p.family) {
    case PlanFamily::ssp: return ssp_objective_and_constraints(p, qs);
    case PlanFamily::rgsp_min: return rgsp_min_objective_and_constraints(p, qs);
    case PlanFamily::rgsp_max: return rgsp_max_objective_and_constraints(p, qs);
    case PlanFamily::type_i: return typeI_objective_and_constraints(p, qs);
  }
  throw DomainError("objective_and_constraints: unknown family");
}

double objective_lower_bound(const PlanProblem& p, int n, const QuadratureSettings& qs) {
  p.validate();
  switch (p.family) {
    case PlanFamily::ssp: return p.unit_cost * base_expectation(p, qs);
    case PlanFamily::rgsp_min: return p.unit_cost * base_expectation(p, qs) / n;
    case PlanFamily::rgsp_max: return p.unit_cost * base_expectation(p, qs) * harmonic_number(n);
    case PlanFamily::type_i: return p.unit_cost * *p.tau;
  }
  return 0.0;
}

std::vector<Variable> decision_box(const PlanProblem& p) {
  const double m0 = p.lambda0.mean_life();
  const double t2_hi = p.restrict_t2_to_aql ? m0 : 10.0 * m0;
  return {{kThresholdFloor, m0, VarScale::log}, {kThresholdFloor, t2_hi, VarScale::log}};
}

FuzzyProgram plan_program(const PlanProblem& p, const PlanFunction& f, int n) {
  FuzzyProgram prog{
      [f, n](std::span<const double> x) {
        const PlanPoint pt = f(x[0], x[1], n);
        return ProgramValues{pt.objective, pt.g, pt.h};
      },
      decision_box(p),
      {Ordering{0, 1, p.family != PlanFamily::type_i}},
      p.alpha,
      p.beta,
      {}};
  return prog;
}

}  // namespace fasp
