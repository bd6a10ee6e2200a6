// Copyright 2026 The fasp Authors
// SPDX-License-Identifier: Apache-2.0

#include "fasp/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "fasp/errors.hpp"
#include "fasp/report.hpp"

namespace fasp {
namespace {


const FuzzyLife& fuzzy_or_throw(const LifeLaw& law, const char* who) {
  if (const auto* f = std::get_if<FuzzyLife>(&law)) return *f;
  throw DomainError(std::string(who) + ": requires a fuzzy life");
}

double draw_rate(const LifeLaw& law, Xoshiro256& rng) {
  if (const auto* f = std::get_if<FuzzyLife>(&law)) return sample_mixture_rate(*f, rng);
  return 1.0 / std::get<CrispLife>(law).mean_life;
}

enum class Outcome { accept, reject, proceed };

Outcome classify(double statistic, const Thresholds& th) {
  if (statistic < th.t1) return Outcome::reject;
  if (statistic >= th.t2) return Outcome::accept;
  return Outcome::proceed;
}

double group_statistic(const McCase& c, Xoshiro256& rng) {
  switch (c.family) {
    case PlanFamily::ssp:
      return rng.exponential(draw_rate(c.law, rng));
    case PlanFamily::rgsp_min: {
      const double rate = draw_rate(c.law, rng);
      double m = std::numeric_limits<double>::infinity();
      for (int i = 0; i < c.n; ++i) m = std::min(m, rng.exponential(rate));
      return m;
    }
    case PlanFamily::rgsp_max: {
      double m = 0.0;
      for (int i = 0; i < c.n; ++i) m = std::max(m, rng.exponential(draw_rate(c.law, rng)));
      return m;
    }
    case PlanFamily::type_i: {
      const double rate = 1.0 / nominal_mean_life(c.law);
      double total = 0.0;
      int failures = 0;
      for (int i = 0; i < c.n; ++i) {
        const double y = rng.exponential(rate);
        if (y < c.tau) {
          total += y;
          ++failures;
        } else {
          total += c.tau;
        }
      }
      // No failure before τ: the estimate is unbounded, so the lot passes.
      return failures == 0 ? std::numeric_limits<double>::infinity() : total / failures;
    }
  }
  return 0.0;
}

double binomial_se(double p, std::int64_t draws) {
  const double nd = static_cast<double>(draws);
  return std::max(std::sqrt(std::max(p * (1.0 - p), 0.0) / nd), 1.0 / nd);
}

OracleReport make_report(std::string quantity, std::string method, double closed, double oracle,
                         double se, double tol) {
  OracleReport r;
  r.quantity = std::move(quantity);
  r.method = std::move(method);
  r.closed_form = closed;
  r.oracle = oracle;
  r.standard_error = se;
  r.tolerance = tol;
  r.pass = std::abs(closed - oracle) <= tol;
  return r;
}

}  // namespace

double sample_mixture_rate(const FuzzyLife& f, Xoshiro256& rng) {
  const double lo = f.support_lo();
  const double width = 2.0 * f.half_width();
  for (;;) {
    const double lambda = lo + width * rng.uniform();
    if (rng.uniform() < life_membership(f, lambda)) return lambda;
  }
}

double mixture_acceptance_rate(const FuzzyLife& f, std::int64_t proposals, std::uint64_t seed) {
  Xoshiro256 rng(seed);
  const double lo = f.support_lo();
  const double width = 2.0 * f.half_width();
  std::int64_t accepted = 0;
  for (std::int64_t i = 0; i < proposals; ++i) {
    const double lambda = lo + width * rng.uniform();
    if (rng.uniform() < life_membership(f, lambda)) ++accepted;
  }
  return static_cast<double>(accepted) / static_cast<double>(proposals);
}

McEstimate mc_triprob(const McCase& c, std::int64_t draws, std::uint64_t seed) {
  if (draws < 1) throw DomainError("mc_triprob: draws must be positive");
  if (c.n < 1) throw DomainError("mc_triprob: group size must be positive");
  if (c.family == PlanFamily::type_i && !(c.tau > 0.0)) {
    throw DomainError("mc_triprob: type1 cases need tau > 0");
  }
  Xoshiro256 rng(seed);
  std::int64_t accept = 0;
  std::int64_t reject = 0;
  for (std::int64_t i = 0; i < draws; ++i) {
    switch (classify(group_statistic(c, rng), c.th)) {
      case Outcome::accept: ++accept; break;
      case Outcome::reject: ++reject; break;
      case Outcome::proceed: break;
    }
  }
  const double nd = static_cast<double>(draws);
  McEstimate e;
  e.draws = draws;
  e.p.p_a = static_cast<double>(accept) / nd;
  e.p.p_r = static_cast<double>(reject) / nd;
  e.p.p_c = static_cast<double>(draws - accept - reject) / nd;
  auto se = [nd](double p) { return std::sqrt(p * (1.0 - p) / nd); };
  e.se = {se(e.p.p_a), se(e.p.p_r), se(e.p.p_c)};
  return e;
}

TriProb closed_form_triprob(const McCase& c) {
  switch (c.family) {
    case PlanFamily::ssp: return ssp_triprob(c.law, c.th);
    case PlanFamily::rgsp_min: return rgsp_min_triprob(c.law, c.th, c.n);
    case PlanFamily::rgsp_max: return rgsp_max_triprob(c.law, c.th, c.n);
    case PlanFamily::type_i: return typeI_triprob(nominal_mean_life(c.law), c.th, c.n, c.tau);
  }
  throw DomainError("closed_form_triprob: unknown family");
}

double quadrature_survival(const FuzzyLife& f, double t, const QuadratureSettings& qs) {
  const double a = f.scale();
  return simpson([&](double lambda) { return a * std::exp(-lambda * t) * life_membership(f, lambda); },
                 f.support_lo(), f.support_hi(), qs);
}

double quadrature_mean_life(const FuzzyLife& f, const QuadratureSettings& qs) {
  const double a = f.scale();
  return simpson([&](double lambda) { return a * life_membership(f, lambda) / lambda; },
                 f.support_lo(), f.support_hi(), qs);
}

TriProb quadrature_triprob(const McCase& c, const QuadratureSettings& qs) {
  const FuzzyLife& f = fuzzy_or_throw(c.law, "quadrature_triprob");
  TriProb p{};
  switch (c.family) {
    case PlanFamily::ssp:
    case PlanFamily::rgsp_min: {
      const double k = c.family == PlanFamily::ssp ? 1.0 : static_cast<double>(c.n);
      const double s1 = quadrature_survival(f, k * c.th.t1, qs);
      const double s2 = quadrature_survival(f, k * c.th.t2, qs);
      p = {s2, 1.0 - s1, s1 - s2};
      break;
    }
    case PlanFamily::rgsp_max: {
      const double f1 = std::pow(1.0 - quadrature_survival(f, c.th.t1, qs), c.n);
      const double f2 = std::pow(1.0 - quadrature_survival(f, c.th.t2, qs), c.n);
      p = {1.0 - f2, f1, f2 - f1};
      break;
    }
    case PlanFamily::type_i:
      throw DomainError("quadrature_triprob: no mixture form for type1 plans");
  }
  return p;
}

std::vector<McCase> regression_grid() {
  using F = PlanFamily;
  auto fz = [](double m, double a) { return LifeLaw{FuzzyLife(m, a)}; };
  return {
      {"ssp-300-1500", F::ssp, fz(300, 1500), {5.8231, 251.1178}, 1, 0},
      {"ssp-300-15000", F::ssp, fz(300, 15000), {6.4907, 251.617}, 1, 0},
      {"ssp-50-1500", F::ssp, fz(50, 1500), {5.8231, 251.1178}, 1, 0},
      {"ssp-70-2100", F::ssp, fz(70, 2100), {10.8498, 289.1994}, 1, 0},
      {"ssp-300-2100", F::ssp, fz(300, 2100), {3.8761, 412.3522}, 1, 0},
      {"ssp-500-1500", F::ssp, fz(500, 1500), {100, 800}, 1, 0},
      {"ssp-200-600", F::ssp, fz(200, 600), {20, 150}, 1, 0},
      {"min-300-1500", F::rgsp_min, fz(300, 1500), {0.5, 80}, 5, 0},
      {"min-200-1500", F::rgsp_min, fz(200, 1500), {1, 70}, 10, 0},
      {"min-300-15000", F::rgsp_min, fz(300, 15000), {0.2, 100}, 3, 0},
      {"min-500-1500", F::rgsp_min, fz(500, 1500), {2, 180}, 23, 0},
      {"min-50-1500", F::rgsp_min, fz(50, 1500), {1, 20}, 8, 0},
      {"min-300-600", F::rgsp_min, fz(300, 600), {5, 60}, 4, 0},
      {"min-150-15000", F::rgsp_min, fz(150, 15000), {0.5, 30}, 12, 0},
      {"max-300-1500", F::rgsp_max, fz(300, 1500), {130.947, 338.7602}, 11, 0},
      {"max-50-1500", F::rgsp_max, fz(50, 1500), {130.947, 338.7602}, 11, 0},
      {"max-500-15000", F::rgsp_max, fz(500, 15000), {224.4646, 938.2128}, 4, 0},
      {"max-150-15000", F::rgsp_max, fz(150, 15000), {224.4646, 938.2128}, 4, 0},
      {"max-300-15000", F::rgsp_max, fz(300, 15000), {176.3513, 196.9506}, 5, 0},
      {"max-200-2000", F::rgsp_max, fz(200, 2000), {100, 400}, 1, 0},
  };
}

std::vector<McCase> typeI_gap_cases() {
  using F = PlanFamily;
  return {
      {"type1-300-tau50", F::type_i, CrispLife{300}, {236.8898, 236.8898}, 33, 50},
      {"type1-200-tau50", F::type_i, CrispLife{200}, {236.8898, 236.8898}, 33, 50},
      {"type1-300-tau100", F::type_i, CrispLife{300}, {235.182, 235.182}, 28, 100},
  };
}

std::vector<OracleReport> run_oracle_cases(const std::vector<McCase>& cases, std::int64_t draws,
                                           std::uint64_t seed, const QuadratureSettings& qs) {
  std::vector<OracleReport> out;
  constexpr double kQuadTol = 1e-8;
  const char* names[3] = {"p_a", "p_r", "p_c"};
  for (std::size_t i = 0; i < cases.size(); ++i) {
    const McCase& c = cases[i];
    const TriProb closed = closed_form_triprob(c);
    const double cf[3] = {closed.p_a, closed.p_r, closed.p_c};
    const bool approx = c.family == PlanFamily::type_i;

    if (!approx && std::holds_alternative<FuzzyLife>(c.law)) {
      const FuzzyLife& f = std::get<FuzzyLife>(c.law);
      for (double t : {c.th.t1, c.th.t2}) {
        OracleReport r = make_report(c.label + ".survival(" + format_sig(t) + ")",
                                     "quadrature", weighted_survival(f, t),
                                     quadrature_survival(f, t, qs), 0.0, kQuadTol);
        r.panels = qs.initial_panels;
        out.push_back(std::move(r));
      }
      const TriProb q = quadrature_triprob(c, qs);
      const double qv[3] = {q.p_a, q.p_r, q.p_c};
      for (int k = 0; k < 3; ++k) {
        OracleReport r = make_report(c.label + "." + names[k], "quadrature", cf[k], qv[k], 0.0,
                                     kQuadTol);
        r.panels = qs.initial_panels;
        out.push_back(std::move(r));
      }
    }

    const McEstimate mc = mc_triprob(c, draws, Xoshiro256::derive(seed, i));
    const double mv[3] = {mc.p.p_a, mc.p.p_r, mc.p.p_c};
    for (int k = 0; k < 3; ++k) {
      const double se = binomial_se(cf[k], draws);
      OracleReport r = make_report(c.label + "." + names[k], "monte_carlo", cf[k], mv[k], se,
                                   3.0 * se);
      r.draws = draws;
      r.informational = approx;
      out.push_back(std::move(r));
    }
  }
  return out;
}

bool all_pass(const std::vector<OracleReport>& reports) {
  return std::all_of(reports.begin(), reports.end(),
                     [](const OracleReport& r) { return r.informational || r.pass; });
}

}  // namespace fasp
