// Copyright 2026 The fasp Authors
// SPDX-License-Identifier: Apache-2.0

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fasp/disposition.hpp"
#include "fasp/errors.hpp"
#include "fasp/lifemodel.hpp"
#include "fasp/oracle.hpp"
#include "fasp/plan_solver.hpp"

namespace py = pybind11;
using namespace fasp;

namespace {

PlanProblem make_problem(const std::string& family, double lambda0, double lambda1, double alpha,
                         double beta, std::optional<double> a, double b1, double b2, double cost,
                         std::optional<double> tau, const std::string& objective, int n_max,
                         bool restrict_t2_to_aql) {
  PlanProblem p;
  p.family = plan_family_from_string(family);
  const double scale = a.value_or(50.0 * lambda0);
  p.lambda0 = FuzzyLife(lambda0, scale);
  p.lambda1 = FuzzyLife(lambda1, scale);
  p.alpha = FuzzyLevel(alpha, b1);
  p.beta = FuzzyLevel(beta, b2);
  p.unit_cost = cost;
  p.tau = tau;
  p.objective_variant = objective_variant_from_string(objective);
  p.n_max = n_max;
  p.restrict_t2_to_aql = restrict_t2_to_aql;
  return p;
}

py::dict design_dict(const PlanDesign& d) {
  py::dict r;
  r["family"] = to_string(d.family);
  r["t1"] = d.t1;
  r["t2"] = d.t2;
  r["n"] = d.n;
  r["phi"] = d.phi;
  r["objective"] = d.objective_value;
  r["g"] = d.g;
  r["h"] = d.h;
  r["g_margin"] = d.g_margin;
  r["h_margin"] = d.h_margin;
  r["z_lower"] = d.z_lower;
  r["z_upper"] = d.z_upper;
  r["form"] = to_string(d.form);
  return r;
}

template <class F>
auto design_fn(F solve) {
  return [solve](const std::string& family, double lambda0, double lambda1, double alpha, double beta,
                 std::optional<double> a, double b1, double b2, double cost, std::optional<double> tau,
                 const std::string& objective, int n_max, bool restrict_t2_to_aql, std::uint64_t seed,
                 int restarts, const std::string& form) {
    const PlanProblem p = make_problem(family, lambda0, lambda1, alpha, beta, a, b1, b2, cost, tau,
                                       objective, n_max, restrict_t2_to_aql);
    SolverSettings s;
    s.seed = seed;
    s.restarts = restarts;
    DesignOptions o;
    o.form = membership_form_from_string(form);
    return design_dict(solve(p, s, o));
  };
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Fuzzy life-test acceptance sampling plans";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<InfeasibleError>(m, "InfeasibleError", PyExc_RuntimeError);
  py::register_exception<ConvergenceError>(m, "ConvergenceError", PyExc_RuntimeError);

  py::class_<FuzzyLife>(m, "FuzzyLife")
      .def(py::init<double, double>(), py::arg("mean_life"), py::arg("scale"))
      .def_property_readonly("mean_life", &FuzzyLife::mean_life)
      .def_property_readonly("scale", &FuzzyLife::scale);

  py::class_<TriProb>(m, "TriProb")
      .def_readonly("p_a", &TriProb::p_a)
      .def_readonly("p_r", &TriProb::p_r)
      .def_readonly("p_c", &TriProb::p_c)
      .def("__repr__", [](const TriProb& p) {
        return "TriProb(p_a=" + std::to_string(p.p_a) + ", p_r=" + std::to_string(p.p_r) +
               ", p_c=" + std::to_string(p.p_c) + ")";
      });

  m.def("weighted_survival", &weighted_survival, py::arg("life"), py::arg("t"));
  m.def("ssp_triprob", [](const FuzzyLife& f, double t1, double t2) { return ssp_triprob(f, {t1, t2}); },
        py::arg("life"), py::arg("t1"), py::arg("t2"));
  m.def("rgsp_min_triprob",
        [](const FuzzyLife& f, double t1, double t2, int n) { return rgsp_min_triprob(f, {t1, t2}, n); },
        py::arg("life"), py::arg("t1"), py::arg("t2"), py::arg("n"));
  m.def("rgsp_max_triprob",
        [](const FuzzyLife& f, double t1, double t2, int n) { return rgsp_max_triprob(f, {t1, t2}, n); },
        py::arg("life"), py::arg("t1"), py::arg("t2"), py::arg("n"));
  m.def("typeI_triprob",
        [](double mean_life, double t1, double t2, int n, double tau) {
          return typeI_triprob(mean_life, {t1, t2}, n, tau);
        },
        py::arg("mean_life"), py::arg("t1"), py::arg("t2"), py::arg("n"), py::arg("tau"));
  m.def("expected_y", [](const FuzzyLife& f) { return expected_y(f); }, py::arg("life"));
  m.def("expected_y_upper_bound", [](const FuzzyLife& f) { return expected_y_upper_bound(f); },
        py::arg("life"));

  const auto design_args = [] {
    return std::make_tuple(py::arg("family") = "ssp", py::arg("lambda0"), py::arg("lambda1"),
                           py::arg("alpha") = 0.05, py::arg("beta") = 0.05, py::arg("a") = py::none(),
                           py::arg("b1") = 0.05, py::arg("b2") = 0.05, py::arg("cost") = 1.0,
                           py::arg("tau") = py::none(), py::arg("objective") = "etc_star",
                           py::arg("n_max") = 0, py::arg("restrict_t2_to_aql") = false,
                           py::arg("seed") = 42, py::arg("restarts") = 32,
                           py::arg("form") = "paper_verbatim");
  };
  std::apply([&](auto... a) { m.def("design", design_fn(solve_plan), a..., "Solve for a plan"); },
             design_args());
  std::apply(
      [&](auto... a) {
        m.def("crisp_baseline", design_fn(crisp_baseline), a..., "Solve with crisp lives and risks");
      },
      design_args());

  m.def(
      "dispose",
      [](const std::string& family, std::vector<double> values, double t1, double t2, int n,
         std::optional<double> tau) {
        FailureData d;
        d.values = std::move(values);
        const Disposition r = fasp::dispose(plan_family_from_string(family), d, {t1, t2, n}, tau);
        py::dict out;
        out["decision"] = to_string(r.decision);
        out["decided_at"] = r.decided_at;
        out["evidence"] = r.evidence;
        return out;
      },
      py::arg("family"), py::arg("values"), py::arg("t1"), py::arg("t2"), py::arg("n") = 1,
      py::arg("tau") = py::none());
  m.def(
      "censored_mle",
      [](std::vector<double> values, int n, double tau) {
        FailureData d;
        d.values = std::move(values);
        return censored_mle(d, n, tau);
      },
      py::arg("values"), py::arg("n"), py::arg("tau"));
  m.def("case_study_data", [] { return case_study_data().values; });

  m.def(
      "oracle",
      [](std::int64_t draws, std::uint64_t seed) {
        const auto reports = run_oracle_cases(regression_grid(), draws, seed);
        py::list out;
        for (const auto& r : reports) {
          py::dict d;
          d["quantity"] = r.quantity;
          d["method"] = r.method;
          d["closed_form"] = r.closed_form;
          d["oracle"] = r.oracle;
          d["tolerance"] = r.tolerance;
          d["pass"] = r.pass;
          out.append(d);
        }
        return out;
      },
      py::arg("draws") = 100000, py::arg("seed") = 42);
  m.def(
      "verify_tables_json",
      [](bool run_solver) {
        VerifySettings s;
        s.run_solver = run_solver;
        return to_json(verify_tables(golden_rows(), s));
      },
      py::arg("run_solver") = false);
}
