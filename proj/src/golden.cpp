// Copyright 2026 The fasp Authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <sstream>

#include <json.hpp>

#include "fasp/embedded.hpp"
#include "fasp/errors.hpp"
#include "fasp/oracle.hpp"
#include "fasp/report.hpp"

namespace fasp {
namespace {

using nlohmann::ordered_json;

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) out.push_back(field);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

double to_double(const std::string& s, const std::string& column, int line) {
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw InputError("golden csv line " + std::to_string(line) + ": bad " + column + " '" + s + "'");
  }
}

std::optional<double> opt_double(const std::string& s, const std::string& column, int line) {
  if (s.empty()) return std::nullopt;
  return to_double(s, column, line);
}

ordered_json num(double x) {
  if (!std::isfinite(x)) return nullptr;
  return round_sig(x);
}

template <typename T>
ordered_json opt(const std::optional<T>& v) {
  if (!v) return nullptr;
  if constexpr (std::is_floating_point_v<T>) {
    return num(*v);
  } else {
    return *v;
  }
}

SolverComparison run_one(const PlanProblem& p, bool crisp, MembershipForm form,
                         const VerifySettings& s) {
  SolverComparison c{form, false, std::nan(""), std::nan(""), std::nan(""), std::nan(""), {}, {}};
  DesignOptions o{form, s.quadrature};
  try {
    const PlanDesign d = crisp ? crisp_baseline(p, s.solver, o) : solve_plan(p, s.solver, o);
    c.feasible = true;
    c.phi = d.phi;
    c.etc = d.objective_value;
    c.t1 = d.t1;
    c.t2 = d.t2;
    c.n = d.n;
  } catch (const InfeasibleError& e) {
    c.message = e.what();
  } catch (const DomainError& e) {
    c.message = e.what();
  }
  return c;
}

}  // namespace

std::vector<GoldenRow> parse_golden_csv(const std::string& text) {
  static const std::vector<std::string> kHeader = {
      "table", "row", "family", "variant", "lambda0", "lambda1", "alpha", "beta",
      "a",     "b1",  "b2",     "tau",     "t1",      "t2",      "n",     "etc"};
  std::vector<GoldenRow> rows;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    const auto f = split_csv_line(line);
    if (!header_seen) {
      if (f != kHeader) throw InputError("golden csv: unexpected header");
      header_seen = true;
      continue;
    }
    if (f.size() != kHeader.size()) {
      throw InputError("golden csv line " + std::to_string(line_no) + ": expected 16 fields");
    }
    GoldenRow r;
    r.table = static_cast<int>(to_double(f[0], "table", line_no));
    r.row = static_cast<int>(to_double(f[1], "row", line_no));
    r.family = plan_family_from_string(f[2]);
    r.variant = f[3];
    r.lambda0 = to_double(f[4], "lambda0", line_no);
    r.lambda1 = to_double(f[5], "lambda1", line_no);
    r.alpha = to_double(f[6], "alpha", line_no);
    r.beta = to_double(f[7], "beta", line_no);
    r.a = opt_double(f[8], "a", line_no);
    r.b1 = to_double(f[9], "b1", line_no);
    r.b2 = to_double(f[10], "b2", line_no);
    r.tau = opt_double(f[11], "tau", line_no);
    r.t1 = opt_double(f[12], "t1", line_no);
    r.t2 = opt_double(f[13], "t2", line_no);
    if (auto n = opt_double(f[14], "n", line_no)) r.n = static_cast<int>(*n);
    r.etc = to_double(f[15], "etc", line_no);
    rows.push_back(r);
  }
  return rows;
}

const std::string& golden_csv_text() { return embedded::golden_tables_csv(); }

const std::vector<GoldenRow>& golden_rows() {
  static const std::vector<GoldenRow> rows = parse_golden_csv(golden_csv_text());
  return rows;
}

PlanProblem golden_problem(const GoldenRow& r) {
  PlanProblem p;
  p.family = r.family;
  const double a = r.a.value_or(50.0 * r.lambda0);
  p.lambda0 = FuzzyLife(r.lambda0, a);
  p.lambda1 = FuzzyLife(r.lambda1, a);
  const bool crisp = r.variant == "crisp";
  p.alpha = FuzzyLevel(r.alpha, crisp ? 0.0 : r.b1);
  p.beta = FuzzyLevel(r.beta, crisp ? 0.0 : r.b2);
  p.tau = r.tau;
  p.crisp_model = crisp;
  p.objective_variant = r.variant == "etc_upper_bound" ? ObjectiveVariant::etc_upper_bound
                                                        : ObjectiveVariant::etc_star;
  return p;
}

double cost_tolerance_for_table(int table) {
  switch (table) {
    case 1:
    case 5:
    case 7: return 0.02;
    case 3: return 0.05;
    default: return 0.10;
  }
}

TableReport verify_tables(const std::vector<GoldenRow>& rows, const VerifySettings& s) {
  TableReport out;
  for (const GoldenRow& row : rows) {
    RowReport rep;
    rep.row = row;
    const PlanProblem p = golden_problem(row);
    const bool crisp = row.variant == "crisp";
    if (row.has_design()) {
      try {
        const PlanFunction f = objective_and_constraints(p, s.quadrature);
        const PlanPoint pt = f(*row.t1, *row.t2, row.n.value_or(1));
        rep.evaluated = true;
        rep.g = pt.g;
        rep.h = pt.h;
        rep.g_bound = p.alpha.relaxed();
        rep.h_bound = p.beta.relaxed();
        rep.g_margin = rep.g_bound + s.feasibility_tol - rep.g;
        rep.h_margin = rep.h_bound + s.feasibility_tol - rep.h;
        rep.feasible = rep.g_margin >= 0.0 && rep.h_margin >= 0.0;
        rep.etc = pt.objective;
        rep.etc_ratio = pt.objective / row.etc;
        rep.cost_tolerance = cost_tolerance_for_table(row.table);
        rep.cost_pass = std::abs(rep.etc_ratio - 1.0) <= rep.cost_tolerance;
      } catch (const DomainError& e) {
        rep.note = e.what();
      }
      if (row.fuzzy_design()) {
        ++out.fuzzy_design_rows;
        if (rep.feasible) ++out.fuzzy_feasible_rows;
        ++out.cost_rows;
        if (rep.cost_pass) ++out.cost_pass_rows;
      }
    }
    if (s.run_solver) {
      if (crisp) {
        rep.solver.push_back(run_one(p, true, MembershipForm::paper_verbatim, s));
      } else {
        for (MembershipForm form : {MembershipForm::paper_verbatim, MembershipForm::standard}) {
          rep.solver.push_back(run_one(p, false, form, s));
        }
        if (rep.solver[0].feasible && rep.solver[1].feasible) {
          const double dv = std::abs(rep.solver[0].etc - row.etc);
          const double ds = std::abs(rep.solver[1].etc - row.etc);
          if (dv < ds) ++out.verbatim_closer;
          if (ds < dv) ++out.standard_closer;
        }
      }
    }
    out.rows.push_back(std::move(rep));
  }
  if (out.fuzzy_design_rows > 0) {
    out.feasible_fraction =
        static_cast<double>(out.fuzzy_feasible_rows) / static_cast<double>(out.fuzzy_design_rows);
  }
  return out;
}

std::string to_csv(const TableReport& r) {
  std::ostringstream o;
  o << "table,row,family,variant,evaluated,g,h,g_bound,h_bound,g_margin,h_margin,feasible,"
       "etc_recomputed,etc_printed,etc_ratio,cost_tolerance,cost_pass,"
       "verbatim_phi,verbatim_etc,standard_phi,standard_etc,note\n";
  for (const RowReport& x : r.rows) {
    const auto& g = x.row;
    auto v = [&](double d) { return x.evaluated ? format_sig(d) : std::string(); };
    o << g.table << ',' << g.row << ',' << to_string(g.family) << ',' << g.variant << ','
      << (x.evaluated ? "true" : "false") << ',' << v(x.g) << ',' << v(x.h) << ','
      << v(x.g_bound) << ',' << v(x.h_bound) << ',' << v(x.g_margin) << ',' << v(x.h_margin)
      << ',' << (x.feasible ? "true" : "false") << ',' << v(x.etc) << ',' << format_sig(g.etc)
      << ',' << v(x.etc_ratio) << ',' << v(x.cost_tolerance) << ','
      << (x.cost_pass ? "true" : "false");
    for (MembershipForm form : {MembershipForm::paper_verbatim, MembershipForm::standard}) {
      const SolverComparison* c = nullptr;
      for (const auto& sc : x.solver) {
        if (sc.form == form) c = &sc;
      }
      if (c && c->feasible) {
        o << ',' << format_sig(c->phi) << ',' << format_sig(c->etc);
      } else {
        o << ",,";
      }
    }
    std::string note = x.note;
    for (char& ch : note) {
      if (ch == ',' || ch == '\n') ch = ';';
    }
    o << ',' << note << '\n';
  }
  return o.str();
}

std::string to_json(const TableReport& r, int indent) {
  ordered_json rows = ordered_json::array();
  for (const RowReport& x : r.rows) {
    const auto& g = x.row;
    ordered_json j;
    j["table"] = g.table;
    j["row"] = g.row;
    j["family"] = to_string(g.family);
    j["variant"] = g.variant;
    j["inputs"] = {{"lambda0", num(g.lambda0)}, {"lambda1", num(g.lambda1)},
                   {"alpha", num(g.alpha)},     {"beta", num(g.beta)},
                   {"a", opt(g.a)},             {"b1", num(g.b1)},
                   {"b2", num(g.b2)},           {"tau", opt(g.tau)}};
    j["printed"] = {{"t1", opt(g.t1)}, {"t2", opt(g.t2)}, {"n", opt(g.n)}, {"etc", num(g.etc)}};
    if (x.evaluated) {
      j["recomputed"] = {{"g", num(x.g)},
                         {"h", num(x.h)},
                         {"g_bound", num(x.g_bound)},
                         {"h_bound", num(x.h_bound)},
                         {"g_margin", num(x.g_margin)},
                         {"h_margin", num(x.h_margin)},
                         {"feasible", x.feasible},
                         {"etc", num(x.etc)},
                         {"etc_ratio", num(x.etc_ratio)},
                         {"cost_tolerance", num(x.cost_tolerance)},
                         {"cost_pass", x.cost_pass}};
    } else {
      j["recomputed"] = nullptr;
    }
    ordered_json solver = ordered_json::array();
    for (const auto& c : x.solver) {
      ordered_json s;
      s["form"] = to_string(c.form);
      s["feasible"] = c.feasible;
      if (c.feasible) {
        s["phi"] = num(c.phi);
        s["etc"] = num(c.etc);
        s["t1"] = num(c.t1);
        s["t2"] = num(c.t2);
        s["n"] = opt(c.n);
      } else {
        s["message"] = c.message;
      }
      solver.push_back(std::move(s));
    }
    j["solver"] = std::move(solver);
    if (!x.note.empty()) j["note"] = x.note;
    rows.push_back(std::move(j));
  }
  ordered_json top;
  top["summary"] = {{"fuzzy_design_rows", r.fuzzy_design_rows},
                    {"fuzzy_feasible_rows", r.fuzzy_feasible_rows},
                    {"feasible_fraction", num(r.feasible_fraction)},
                    {"cost_rows", r.cost_rows},
                    {"cost_pass_rows", r.cost_pass_rows},
                    {"verbatim_closer", r.verbatim_closer},
                    {"standard_closer", r.standard_closer}};
  top["rows"] = std::move(rows);
  return top.dump(indent);
}

std::string to_json(const std::vector<OracleReport>& reports, int indent) {
  ordered_json arr = ordered_json::array();
  for (const auto& r : reports) {
    ordered_json j;
    j["quantity"] = r.quantity;
    j["method"] = r.method;
    j["closed_form"] = num(r.closed_form);
    j["oracle"] = num(r.oracle);
    j["standard_error"] = num(r.standard_error);
    j["tolerance"] = num(r.tolerance);
    j["pass"] = r.pass;
    j["informational"] = r.informational;
    j["draws"] = r.draws;
    j["panels"] = r.panels;
    arr.push_back(std::move(j));
  }
  ordered_json top;
  top["all_pass"] = all_pass(reports);
  top["reports"] = std::move(arr);
  return top.dump(indent);
}

}  // namespace fasp
