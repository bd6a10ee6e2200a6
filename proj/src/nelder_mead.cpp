// Copyright 2026 The fasp Authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include "fasp/errors.hpp"
#include "fasp/fuzzyopt.hpp"
#include "fasp/rng.hpp"

namespace fasp {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Maps normalized coordinates y in [0,1]^d onto the box (linearly or in log
// space) and enforces the ordering pairs by projection.
class BoxMap {
 public:
  BoxMap(const std::vector<Variable>& box, const std::vector<Ordering>& ordering)
      : box_(box), ordering_(ordering) {}

  std::size_t dim() const { return box_.size(); }

  void to_x(std::span<const double> y, std::span<double> x) const {
    for (std::size_t k = 0; k < box_.size(); ++k) {
      const double u = std::clamp(y[k], 0.0, 1.0);
      const Variable& v = box_[k];
      if (v.scale == VarScale::log) {
        const double llo = std::log(v.lo);
        x[k] = std::exp(llo + u * (std::log(v.hi) - llo));
      } else {
        x[k] = v.lo + u * (v.hi - v.lo);
      }
      x[k] = std::clamp(x[k], v.lo, v.hi);
    }
    for (const Ordering& o : ordering_) {
      const double gap = o.strict ? 1e-9 * std::max(std::abs(x[o.lower]), 1e-300) : 0.0;
      if (x[o.upper] < x[o.lower] + gap) {
        x[o.upper] = std::min(x[o.lower] + gap, box_[o.upper].hi);
        x[o.lower] = std::min(x[o.lower], x[o.upper] - gap);
      }
    }
  }

  void to_y(std::span<const double> x, std::span<double> y) const {
    for (std::size_t k = 0; k < box_.size(); ++k) {
      const Variable& v = box_[k];
      const double xc = std::clamp(x[k], v.lo, v.hi);
      double u;
      if (v.scale == VarScale::log) {
        const double llo = std::log(v.lo);
        const double span = std::log(v.hi) - llo;
        u = span > 0.0 ? (std::log(xc) - llo) / span : 0.0;
      } else {
        const double span = v.hi - v.lo;
        u = span > 0.0 ? (xc - v.lo) / span : 0.0;
      }
      y[k] = std::clamp(u, 0.0, 1.0);
    }
  }

  static double outside(std::span<const double> y) {
    double d = 0.0;
    for (double u : y) {
      if (u < 0.0) d += u * u;
      if (u > 1.0) d += (u - 1.0) * (u - 1.0);
    }
    return d;
  }

 private:
  const std::vector<Variable>& box_;
  const std::vector<Ordering>& ordering_;
};

struct PointEval {
  double objective;
  double violation;  // max over constraints of max(0, c - upper)
  double penalty;    // sum of squared violations
};

class Problem {
 public:
  Problem(const CrispNlp& nlp) : nlp_(nlp), map_(nlp.box, nlp.ordering),
      x_(nlp.box.size()), c_(nlp.upper.size()) {}

  const BoxMap& map() const { return map_; }

  PointEval at_x(std::span<const double> x) {
    std::copy(x.begin(), x.end(), x_.begin());
    return evaluate_current();
  }

  PointEval at_y(std::span<const double> y) {
    map_.to_x(y, x_);
    return evaluate_current();
  }

  std::span<const double> last_constraints() const { return c_; }

 private:
  PointEval evaluate_current() {
    std::fill(c_.begin(), c_.end(), 0.0);
    const double f = nlp_.evaluate(x_, c_);
    PointEval e{f, 0.0, 0.0};
    if (!std::isfinite(f)) {
      e.objective = kInf;
      e.violation = kInf;
      e.penalty = kInf;
      return e;
    }
    for (std::size_t k = 0; k < c_.size(); ++k) {
      const double v = c_[k] - nlp_.upper[k];
      if (!std::isfinite(v)) {
        e.violation = e.penalty = kInf;
      } else if (v > 0.0) {
        e.violation = std::max(e.violation, v);
        e.penalty += v * v;
      }
    }
    return e;
  }

  const CrispNlp& nlp_;
  BoxMap map_;
  std::vector<double> x_;
  std::vector<double> c_;
};

struct Merit {
  Problem& problem;
  double scale;
  double weight;

  double operator()(std::span<const double> y) const {
    const PointEval e = problem.at_y(y);
    if (!std::isfinite(e.objective) || !std::isfinite(e.penalty)) return kInf;
    return e.objective / scale + weight * e.penalty + 1e3 * BoxMap::outside(y);
  }
};

// One Nelder-Mead run (standard coefficients) from y0 with an axis-aligned
// initial simplex of edge `step`. Returns the best vertex; `best_value`
// receives its merit.
std::vector<double> nelder_mead(const Merit& merit, std::vector<double> y0,
                                double step, const SolverSettings& s,
                                double& best_value) {
  const std::size_t d = y0.size();
  std::vector<std::vector<double>> simplex(d + 1, y0);
  for (std::size_t k = 0; k < d; ++k) {
    simplex[k + 1][k] += (y0[k] + step <= 1.0) ? step : -step;
  }
  std::vector<double> values(d + 1);
  for (std::size_t i = 0; i <= d; ++i) values[i] = merit(simplex[i]);

  std::vector<std::size_t> order(d + 1);
  std::vector<double> centroid(d), trial(d), trial2(d);
  auto along = [&](double coeff, std::vector<double>& out) {
    const auto& worst = simplex[order[d]];
    for (std::size_t k = 0; k < d; ++k) {
      out[k] = centroid[k] + coeff * (worst[k] - centroid[k]);
    }
  };

  for (int iter = 0; iter < s.max_iterations; ++iter) {
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    const double fbest = values[order[0]];
    const double fworst = values[order[d]];

    double size = 0.0;
    for (std::size_t i = 1; i <= d; ++i) {
      for (std::size_t k = 0; k < d; ++k) {
        size = std::max(size, std::abs(simplex[order[i]][k] - simplex[order[0]][k]));
      }
    }
    const bool flat = std::isfinite(fworst) &&
                      (fworst - fbest) <= s.f_tol * std::max(std::abs(fbest), 1e-300);
    if (size <= s.x_tol && (flat || !std::isfinite(fbest))) break;
    if (size <= s.x_tol * 1e-3) break;

    std::fill(centroid.begin(), centroid.end(), 0.0);
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t k = 0; k < d; ++k) centroid[k] += simplex[order[i]][k];
    }
    for (double& c : centroid) c /= static_cast<double>(d);

    const std::size_t w = order[d];
    const double fsecond = values[order[d - 1]];
    along(-1.0, trial);
    const double fr = merit(trial);
    if (fr < fbest) {
      along(-2.0, trial2);
      const double fe = merit(trial2);
      if (fe < fr) {
        simplex[w] = trial2;
        values[w] = fe;
      } else {
        simplex[w] = trial;
        values[w] = fr;
      }
      continue;
    }
    if (fr < fsecond) {
      simplex[w] = trial;
      values[w] = fr;
      continue;
    }
    bool accepted = false;
    if (fr < fworst) {
      along(-0.5, trial2);
      const double fc = merit(trial2);
      if (fc <= fr) {
        simplex[w] = trial2;
        values[w] = fc;
        accepted = true;
      }
    } else {
      along(0.5, trial2);
      const double fc = merit(trial2);
      if (fc < fworst) {
        simplex[w] = trial2;
        values[w] = fc;
        accepted = true;
      }
    }
    if (!accepted) {
      const auto best = simplex[order[0]];
      for (std::size_t i = 1; i <= d; ++i) {
        auto& v = simplex[order[i]];
        for (std::size_t k = 0; k < d; ++k) v[k] = best[k] + 0.5 * (v[k] - best[k]);
        values[order[i]] = merit(v);
      }
    }
  }
  const auto it = std::min_element(values.begin(), values.end());
  best_value = *it;
  return simplex[static_cast<std::size_t>(it - values.begin())];
}

struct StartResult {
  std::vector<double> x;
  PointEval eval;
  double merit;
  bool usable;
};

StartResult run_start(Problem& problem, std::vector<double> y, const SolverSettings& s) {
  const std::size_t d = y.size();
  std::vector<double> x(d);
  problem.map().to_x(y, x);
  PointEval e0 = problem.at_x(x);
  if (!std::isfinite(e0.objective)) return {x, e0, kInf, false};

  const double scale = std::abs(e0.objective) > 0.0 ? std::abs(e0.objective) : 1.0;
  double weight = s.penalty_initial;
  double merit_value = kInf;
  double previous_violation = kInf;
  for (int stage = 0; stage <= s.penalty_escalations; ++stage) {
    Merit merit{problem, scale, weight};
    double value = kInf;
    y = nelder_mead(merit, y, stage == 0 ? 0.2 : 0.05, s, value);
    // A fresh, smaller simplex frees runs that collapsed against a bound.
    double again = kInf;
    auto y2 = nelder_mead(merit, y, 0.01, s, again);
    if (again <= value) {
      y = std::move(y2);
      value = again;
    }
    merit_value = value;
    problem.map().to_x(y, x);
    const PointEval e = problem.at_x(x);
    if (e.violation <= s.feasibility_tol * 1e-3) break;
    // A violation that no longer shrinks with the weight marks an
    // infeasible basin.
    if (stage >= 2 && e.violation > s.feasibility_tol && e.violation > 0.5 * previous_violation) {
      break;
    }
    previous_violation = e.violation;
    weight *= s.penalty_growth;
  }
  problem.map().to_x(y, x);
  const PointEval final_eval = problem.at_x(x);
  return {x, final_eval, merit_value, std::isfinite(final_eval.objective)};
}

}  // namespace

CrispNlp CrispNlp::from_functions(
    std::function<double(std::span<const double>)> objective,
    std::vector<std::function<double(std::span<const double>)>> constraints,
    std::vector<double> upper, std::vector<Variable> box,
    std::vector<Ordering> ordering) {
  CrispNlp nlp;
  nlp.evaluate = [objective = std::move(objective), constraints = std::move(constraints)](
                     std::span<const double> x, std::span<double> c) {
    for (std::size_t k = 0; k < constraints.size(); ++k) c[k] = constraints[k](x);
    return objective(x);
  };
  nlp.upper = std::move(upper);
  nlp.box = std::move(box);
  nlp.ordering = std::move(ordering);
  return nlp;
}

void CrispNlp::validate() const {
  if (!evaluate) throw DomainError("CrispNlp: missing evaluator");
  if (box.empty()) throw DomainError("CrispNlp: no decision variables");
  for (const Variable& v : box) {
    if (!std::isfinite(v.lo) || !std::isfinite(v.hi) || !(v.lo <= v.hi)) {
      throw DomainError("CrispNlp: box bounds must be finite with lo <= hi");
    }
    if (v.scale == VarScale::log && !(v.lo > 0.0)) {
      throw DomainError("CrispNlp: log-scaled variables need a positive lower bound");
    }
  }
  for (const Ordering& o : ordering) {
    if (o.lower >= box.size() || o.upper >= box.size() || o.lower == o.upper) {
      throw DomainError("CrispNlp: ordering refers to an invalid variable");
    }
  }
  if (!names.empty() && names.size() != upper.size()) {
    throw DomainError("CrispNlp: names and upper bounds differ in length");
  }
  for (const auto& w : warm_starts) {
    if (w.size() != box.size()) throw DomainError("CrispNlp: warm start has wrong dimension");
  }
}

void SolverSettings::validate() const {
  if (restarts < 1) throw DomainError("SolverSettings: restarts must be at least 1");
  if (!(penalty_initial > 0.0) || !(penalty_growth > 1.0) || penalty_escalations < 0) {
    throw DomainError("SolverSettings: penalty schedule must be positive and increasing");
  }
  if (!(x_tol > 0.0) || !(f_tol > 0.0) || !(feasibility_tol > 0.0)) {
    throw DomainError("SolverSettings: tolerances must be positive");
  }
  if (max_iterations < 1) throw DomainError("SolverSettings: max_iterations must be positive");
}

CrispSolution solve_crisp(const CrispNlp& nlp, const SolverSettings& s) {
  nlp.validate();
  s.validate();
  Problem problem(nlp);
  const std::size_t d = nlp.box.size();

  std::vector<std::vector<double>> starts;
  for (const auto& w : nlp.warm_starts) {
    std::vector<double> y(d);
    problem.map().to_y(w, y);
    starts.push_back(std::move(y));
  }
  for (int r = 0; r < s.restarts; ++r) {
    Xoshiro256 rng(Xoshiro256::derive(s.seed, static_cast<std::uint64_t>(r)));
    std::vector<double> y(d), x(d);
    // Resample a start that lands on an unusable point; bounded so a
    // pathological problem still terminates.
    for (int attempt = 0; attempt < 64; ++attempt) {
      for (double& u : y) u = rng.uniform();
      problem.map().to_x(y, x);
      if (std::isfinite(problem.at_x(x).objective)) break;
    }
    starts.push_back(std::move(y));
  }

  CrispSolution best;
  bool found = false;
  double best_violation = kInf;
  best.trace.reserve(starts.size());
  for (auto& y : starts) {
    StartResult r = run_start(problem, std::move(y), s);
    best.trace.push_back(r.usable ? r.merit : kInf);
    if (!r.usable) continue;
    best_violation = std::min(best_violation, r.eval.violation);
    if (r.eval.violation > s.feasibility_tol) continue;
    if (!found || r.eval.objective < best.objective) {
      found = true;
      best.x = r.x;
      best.objective = r.eval.objective;
      best.max_violation = r.eval.violation;
    }
  }
  if (!found) {
    std::ostringstream msg;
    msg << "solve_crisp: no feasible point across " << starts.size()
        << " starts (best violation " << best_violation << ")";
    throw InfeasibleError(msg.str(), best_violation);
  }
  problem.at_x(best.x);
  const auto c = problem.last_constraints();
  best.constraints.assign(c.begin(), c.end());
  return best;
}

}  // namespace fasp
