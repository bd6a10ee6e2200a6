// Copyright 2026 The fasp Authors
// SPDX-License-Identifier: Apache-2.0

#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "fasp/disposition.hpp"
#include "fasp/errors.hpp"
#include "fasp/oracle.hpp"
#include "fasp/plan_solver.hpp"
#include "fasp/report.hpp"

namespace fasp::cli {
namespace {

using nlohmann::ordered_json;

ordered_json num(double x) {
  if (!std::isfinite(x)) return nullptr;
  return round_sig(x);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_or_print(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text << '\n';
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot write '" + path + "'");
  f << text << '\n';
}

struct SolverFlags {
  std::uint64_t seed = 42;
  int restarts = 32;

  void add(CLI::App* app) {
    app->add_option("--seed", seed, "RNG seed")->envname("ASP_SEED");
    app->add_option("--restarts", restarts, "Random restarts per solve")->check(CLI::PositiveNumber);
  }
  SolverSettings settings() const {
    SolverSettings s;
    s.seed = seed;
    s.restarts = restarts;
    return s;
  }
};

struct ProblemFlags {
  std::string family = "ssp";
  double lambda0 = 0.0;
  double lambda1 = 0.0;
  double alpha = 0.05;
  double beta = 0.05;
  double a = 0.0;
  double b1 = 0.05;
  double b2 = 0.05;
  double cost = 1.0;
  std::optional<double> tau;
  std::string objective = "etc_star";
  int n_max = 0;
  bool restrict_t2 = false;
  std::string form = "paper_verbatim";
  std::string output;

  void add(CLI::App* app) {
    app->add_option("--family", family, "ssp, rgsp_min, rgsp_max or type1");
    app->add_option("--lambda0", lambda0, "Acceptable mean life")->required();
    app->add_option("--lambda1", lambda1, "Rejectable mean life")->required();
    app->add_option("--alpha", alpha, "Producer's risk level");
    app->add_option("--beta", beta, "Consumer's risk level");
    app->add_option("--a", a, "Shared fuzzy-life scale (default 50 x lambda0)");
    app->add_option("--b1", b1, "Slack on alpha");
    app->add_option("--b2", b2, "Slack on beta");
    app->add_option("--cost", cost, "Cost per unit test time");
    app->add_option("--tau", tau, "Censoring time (type1)");
    app->add_option("--objective", objective, "etc_star or etc_upper_bound");
    app->add_option("--n-max", n_max, "Largest group size searched (0: family default)");
    app->add_flag("--restrict-t2-to-aql", restrict_t2, "Cap t2 at lambda0");
    app->add_option("--form", form, "Objective membership: paper_verbatim or standard");
    app->add_option("-o,--output", output, "Write the JSON report here instead of stdout");
  }

  PlanProblem problem() const {
    PlanProblem p;
    p.family = plan_family_from_string(family);
    const double scale = a > 0.0 ? a : 50.0 * lambda0;
    p.lambda0 = FuzzyLife(lambda0, scale);
    p.lambda1 = FuzzyLife(lambda1, scale);
    p.alpha = FuzzyLevel(alpha, b1);
    p.beta = FuzzyLevel(beta, b2);
    p.unit_cost = cost;
    p.tau = tau;
    p.objective_variant = objective_variant_from_string(objective);
    p.n_max = n_max;
    p.restrict_t2_to_aql = restrict_t2;
    p.validate();
    return p;
  }
};

ordered_json problem_json(const PlanProblem& p) {
  ordered_json j;
  j["lambda0"] = num(p.lambda0.mean_life());
  j["lambda1"] = num(p.lambda1.mean_life());
  j["a"] = p.crisp_model ? ordered_json(nullptr) : num(p.lambda0.scale());
  j["alpha"] = num(p.alpha.level());
  j["beta"] = num(p.beta.level());
  j["b1"] = num(p.alpha.slack());
  j["b2"] = num(p.beta.slack());
  j["cost"] = num(p.unit_cost);
  j["tau"] = p.tau ? num(*p.tau) : ordered_json(nullptr);
  j["objective_variant"] = to_string(p.objective_variant);
  j["n_max"] = p.effective_n_max();
  j["restrict_t2_to_aql"] = p.restrict_t2_to_aql;
  j["crisp_model"] = p.crisp_model;
  return j;
}

int run_design(const ProblemFlags& pf, const SolverFlags& sf, bool crisp, std::ostream& out,
               std::ostream& err) {
  const PlanProblem p = pf.problem();
  DesignOptions o;
  o.form = membership_form_from_string(pf.form);
  ordered_json j;
  j["command"] = crisp ? "crisp-baseline" : "design";
  j["family"] = to_string(p.family);
  PlanProblem shown = p;
  if (crisp) {
    shown.crisp_model = true;
    shown.alpha = FuzzyLevel(p.alpha.level(), 0.0);
    shown.beta = FuzzyLevel(p.beta.level(), 0.0);
  }
  j["inputs"] = problem_json(shown);
  j["form"] = to_string(o.form);
  j["seed"] = sf.seed;
  j["restarts"] = sf.restarts;
  int code = kOk;
  try {
    const PlanDesign d = crisp ? crisp_baseline(p, sf.settings(), o) : solve_plan(p, sf.settings(), o);
    j["feasible"] = true;
    j["t1"] = num(d.t1);
    j["t2"] = num(d.t2);
    j["n"] = d.n ? ordered_json(*d.n) : ordered_json(nullptr);
    j["phi"] = num(d.phi);
    j["objective"] = num(d.objective_value);
    j["g"] = num(d.g);
    j["h"] = num(d.h);
    j["margins"] = {{"g", num(d.g_margin)}, {"h", num(d.h_margin)}};
    j["z_lower"] = num(d.z_lower);
    j["z_upper"] = num(d.z_upper);
    j["objective_constraint_dropped"] = d.objective_constraint_dropped;
    err << to_string(p.family) << (crisp ? " crisp baseline" : " design") << ": t1=" << format_sig(d.t1)
        << " t2=" << format_sig(d.t2);
    if (d.n) err << " n=" << *d.n;
    err << " phi=" << format_sig(d.phi) << " objective=" << format_sig(d.objective_value) << '\n';
  } catch (const InfeasibleError& e) {
    j["feasible"] = false;
    j["message"] = e.what();
    err << "infeasible: " << e.what() << '\n';
    code = kInfeasible;
  }
  write_or_print(pf.output, j.dump(2), out);
  return code;
}

struct VerifyFlags {
  std::vector<int> tables;
  std::optional<int> rows;
  std::string golden;
  bool no_solve = false;
  std::string csv;
  std::string json;
};

int run_verify(const VerifyFlags& vf, const SolverFlags& sf, std::ostream& out, std::ostream& err) {
  std::vector<GoldenRow> rows =
      vf.golden.empty() ? golden_rows() : parse_golden_csv(read_file(vf.golden));
  if (!vf.tables.empty()) {
    std::erase_if(rows, [&](const GoldenRow& r) {
      return std::find(vf.tables.begin(), vf.tables.end(), r.table) == vf.tables.end();
    });
  }
  if (vf.rows && static_cast<std::size_t>(*vf.rows) < rows.size()) {
    rows.resize(static_cast<std::size_t>(*vf.rows));
  }
  VerifySettings vs;
  vs.run_solver = !vf.no_solve;
  vs.solver = sf.settings();
  const TableReport r = verify_tables(rows, vs);
  if (!vf.csv.empty()) {
    std::ofstream f(vf.csv, std::ios::binary);
    if (!f) throw InputError("cannot write '" + vf.csv + "'");
    f << to_csv(r);
  }
  write_or_print(vf.json, to_json(r), out);
  err << "feasible fuzzy design rows: " << r.fuzzy_feasible_rows << '/' << r.fuzzy_design_rows
      << "; printed costs reproduced: " << r.cost_pass_rows << '/' << r.cost_rows << '\n';
  for (const RowReport& x : r.rows) {
    if (x.row.fuzzy_design() && !x.feasible) {
      err << "  table " << x.row.table << " row " << x.row.row << ": g=" << format_sig(x.g)
          << " (margin " << format_sig(x.g_margin) << ") h=" << format_sig(x.h) << " (margin "
          << format_sig(x.h_margin) << ")\n";
    }
  }
  return r.feasible_fraction >= 0.9 ? kOk : kBelowThreshold;
}

struct DisposeFlags {
  std::string family;
  std::string data;
  bool case_study = false;
  std::string design;
  std::optional<double> t1;
  std::optional<double> t2;
  std::optional<int> n;
  std::optional<double> tau;
  std::string interpretation = "inter_failure_times";
  std::string output;
};

int run_dispose(const DisposeFlags& df, std::ostream& out, std::ostream& err) {
  FailureData data;
  if (df.case_study) {
    data = case_study_data();
  } else if (!df.data.empty()) {
    data = load_failure_data(df.data);
  } else {
    throw InputError("dispose needs --data or --case-study");
  }
  if (df.interpretation == "item_lifetimes") {
    data.interpretation = Interpretation::item_lifetimes;
  } else if (df.interpretation != "inter_failure_times") {
    throw InputError("unknown interpretation '" + df.interpretation + "'");
  }

  std::string family = df.family;
  std::optional<double> t1 = df.t1;
  std::optional<double> t2 = df.t2;
  std::optional<int> n = df.n;
  std::optional<double> tau = df.tau;
  if (!df.design.empty()) {
    ordered_json j;
    try {
      j = ordered_json::parse(read_file(df.design));
    } catch (const ordered_json::exception& e) {
      throw InputError(std::string("design JSON: ") + e.what());
    }
    if (!j.value("feasible", false)) throw InputError("design JSON holds no feasible design");
    if (family.empty()) family = j.at("family").get<std::string>();
    if (!t1) t1 = j.at("t1").get<double>();
    if (!t2) t2 = j.at("t2").get<double>();
    if (!n && j.contains("n") && !j["n"].is_null()) n = j["n"].get<int>();
    const auto& in = j.at("inputs");
    if (!tau && in.contains("tau") && !in["tau"].is_null()) tau = in["tau"].get<double>();
  }
  if (family.empty()) family = "ssp";
  if (!t1 || !t2) throw InputError("dispose needs --t1 and --t2 (or --design)");
  const PlanFamily fam = plan_family_from_string(family);
  const PlanRule rule{*t1, *t2, n.value_or(1)};
  const Disposition d = dispose(fam, data, rule, tau);

  ordered_json j;
  j["family"] = to_string(fam);
  j["t1"] = num(rule.t1);
  j["t2"] = num(rule.t2);
  j["n"] = rule.n;
  j["tau"] = tau ? num(*tau) : ordered_json(nullptr);
  j["decision"] = to_string(d.decision);
  j["decided_at"] = d.decided_at;
  ordered_json ev = ordered_json::array();
  for (double v : d.evidence) ev.push_back(num(v));
  j["evidence"] = std::move(ev);
  write_or_print(df.output, j.dump(2), out);
  err << to_string(d.decision);
  if (d.decided_at > 0) err << " at " << (fam == PlanFamily::ssp ? "value " : "group ") << d.decided_at;
  err << '\n';
  switch (d.decision) {
    case Decision::accept: return kOk;
    case Decision::reject: return kRejected;
    case Decision::continue_exhausted: return kUndecided;
  }
  return kUndecided;
}

struct OracleFlags {
  std::int64_t draws = 1000000;
  std::string family;
  std::optional<double> lambda;
  std::optional<double> a;
  std::optional<double> t1;
  std::optional<double> t2;
  int n = 1;
  std::optional<double> tau;
  bool include_type1 = false;
  std::string output;
};

int run_oracle(const OracleFlags& of, const SolverFlags& sf, std::ostream& out, std::ostream& err) {
  std::vector<McCase> cases;
  if (!of.family.empty()) {
    if (!of.lambda || !of.t1 || !of.t2) {
      throw InputError("a single oracle case needs --lambda, --t1 and --t2");
    }
    const PlanFamily fam = plan_family_from_string(of.family);
    LifeLaw law = CrispLife{*of.lambda};
    double tau = 0.0;
    if (fam == PlanFamily::type_i) {
      if (!of.tau) throw InputError("type1 oracle cases need --tau");
      tau = *of.tau;
    } else {
      law = FuzzyLife(*of.lambda, of.a.value_or(50.0 * *of.lambda));
    }
    cases.push_back({std::string(to_string(fam)) + "-custom", fam, law, {*of.t1, *of.t2}, of.n, tau});
  } else {
    cases = regression_grid();
    if (of.include_type1) {
      for (auto& c : typeI_gap_cases()) cases.push_back(std::move(c));
    }
  }
  const std::vector<OracleReport> reports = run_oracle_cases(cases, of.draws, sf.seed);
  write_or_print(of.output, to_json(reports), out);
  int failed = 0;
  for (const auto& r : reports) {
    if (!r.pass && !r.informational) ++failed;
  }
  err << reports.size() << " checks, " << failed << " failed\n";
  return all_pass(reports) ? kOk : kOracleFailed;
}

std::vector<std::string> flag_keys_of(const CLI::App* sub) {
  std::vector<std::string> keys;
  for (const CLI::Option* o : sub->get_options()) {
    if (o->get_expected_min() == 0) {
      for (const auto& name : o->get_lnames()) keys.push_back(name);
    }
  }
  return keys;
}

}  // namespace

std::vector<std::string> config_to_args(const std::string& text,
                                        const std::vector<std::string>& flag_keys) {
  std::vector<std::string> args;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos || line[b] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw InputError("config line " + std::to_string(line_no) + ": expected key = value");
    }
    auto strip = [](std::string s) {
      const auto l = s.find_first_not_of(" \t\r");
      if (l == std::string::npos) return std::string();
      const auto r = s.find_last_not_of(" \t\r");
      return s.substr(l, r - l + 1);
    };
    std::string key = strip(line.substr(0, eq));
    std::string value = strip(line.substr(eq + 1));
    std::replace(key.begin(), key.end(), '_', '-');
    if (key.empty()) throw InputError("config line " + std::to_string(line_no) + ": empty key");
    const bool is_flag = std::find(flag_keys.begin(), flag_keys.end(), key) != flag_keys.end();
    if (is_flag) {
      if (value == "true" || value == "1" || value == "yes") {
        args.push_back("--" + key);
      } else if (value != "false" && value != "0" && value != "no") {
        throw InputError("config key '" + key + "' expects true or false");
      }
      continue;
    }
    args.push_back("--" + key);
    args.push_back(value);
  }
  return args;
}

int run(const std::vector<std::string>& args_in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Design and verify fuzzy life-test acceptance sampling plans", "fasp"};
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  app.require_subcommand(1);

  ProblemFlags design_pf;
  SolverFlags design_sf;
  std::string design_cfg;
  CLI::App* design = app.add_subcommand("design", "Solve for a minimum-cost plan");
  design_pf.add(design);
  design_sf.add(design);
  design->add_option("--config", design_cfg, "Flat key = value file of option defaults");

  ProblemFlags crisp_pf;
  SolverFlags crisp_sf;
  std::string crisp_cfg;
  CLI::App* crisp = app.add_subcommand("crisp-baseline", "Solve with crisp lives and risks");
  crisp_pf.add(crisp);
  crisp_sf.add(crisp);
  crisp->add_option("--config", crisp_cfg, "Flat key = value file of option defaults");

  VerifyFlags vf;
  SolverFlags verify_sf;
  std::string verify_cfg;
  CLI::App* verify = app.add_subcommand("verify-tables", "Check the published tables");
  verify->add_option("--table", vf.tables, "Only rows of these tables")->multi_option_policy(
      CLI::MultiOptionPolicy::TakeAll);
  verify->add_option("--rows", vf.rows, "Keep at most this many rows")->check(CLI::NonNegativeNumber);
  verify->add_option("--golden", vf.golden, "Golden CSV to use instead of the embedded one");
  verify->add_flag("--no-solve", vf.no_solve, "Skip the solver runs");
  verify->add_option("--csv", vf.csv, "Write the CSV report here");
  verify->add_option("--json", vf.json, "Write the JSON report here instead of stdout");
  verify_sf.add(verify);
  verify->add_option("--config", verify_cfg, "Flat key = value file of option defaults");

  DisposeFlags df;
  std::string dispose_cfg;
  CLI::App* disp = app.add_subcommand("dispose", "Apply a plan to failure data");
  disp->add_option("--family", df.family, "ssp, rgsp_min, rgsp_max or type1");
  disp->add_option("--data", df.data, "CSV (one value per line) or JSON array");
  disp->add_flag("--case-study", df.case_study, "Use the embedded 36-value appliance data");
  disp->add_option("--design", df.design, "Design JSON written by 'design'");
  disp->add_option("--t1", df.t1, "Lower threshold");
  disp->add_option("--t2", df.t2, "Upper threshold");
  disp->add_option("--n", df.n, "Group size")->check(CLI::PositiveNumber);
  disp->add_option("--tau", df.tau, "Censoring time (type1)");
  disp->add_option("--interpretation", df.interpretation, "inter_failure_times or item_lifetimes");
  disp->add_option("-o,--output", df.output, "Write the JSON decision here instead of stdout");
  disp->add_option("--config", dispose_cfg, "Flat key = value file of option defaults");

  OracleFlags of;
  SolverFlags oracle_sf;
  std::string oracle_cfg;
  CLI::App* orc = app.add_subcommand("oracle", "Check closed forms against quadrature and simulation");
  orc->add_option("--draws", of.draws, "Monte-Carlo draws per case")->check(CLI::PositiveNumber);
  orc->add_option("--family", of.family, "Check one case of this family instead of the grid");
  orc->add_option("--lambda", of.lambda, "Mean life of the single case");
  orc->add_option("--a", of.a, "Fuzzy scale of the single case");
  orc->add_option("--t1", of.t1, "Lower threshold of the single case");
  orc->add_option("--t2", of.t2, "Upper threshold of the single case");
  orc->add_option("--n", of.n, "Group size of the single case")->check(CLI::PositiveNumber);
  orc->add_option("--tau", of.tau, "Censoring time of a type1 case");
  orc->add_flag("--include-type1", of.include_type1, "Add the type1 approximation-gap cases");
  orc->add_option("-o,--output", of.output, "Write the JSON report here instead of stdout");
  oracle_sf.add(orc);
  orc->add_option("--config", oracle_cfg, "Flat key = value file of option defaults");

  // Config-file values are spliced in ahead of the explicit arguments, so
  // explicit flags win (options keep their last value).
  std::vector<std::string> args = args_in;
  if (!args.empty()) {
    CLI::App* sub = nullptr;
    for (CLI::App* s : app.get_subcommands({})) {
      if (s->get_name() == args[0]) sub = s;
    }
    for (std::size_t i = 1; sub && i < args.size(); ++i) {
      std::string path;
      std::size_t erase = 0;
      if (args[i] == "--config" && i + 1 < args.size()) {
        path = args[i + 1];
        erase = 2;
      } else if (args[i].rfind("--config=", 0) == 0) {
        path = args[i].substr(9);
        erase = 1;
      }
      if (erase == 0) continue;
      try {
        std::vector<std::string> extra = config_to_args(read_file(path), flag_keys_of(sub));
        for (std::size_t k = 0; k < extra.size(); ++k) {
          if (extra[k].rfind("--", 0) != 0) continue;
          const std::string key = extra[k].substr(2);
          if (key == "config" || sub->get_option_no_throw("--" + key) == nullptr) {
            throw InputError("unknown config key '" + key + "' for " + sub->get_name());
          }
        }
        args.erase(args.begin() + static_cast<std::ptrdiff_t>(i),
                   args.begin() + static_cast<std::ptrdiff_t>(i + erase));
        args.insert(args.begin() + 1, extra.begin(), extra.end());
      } catch (const InputError& e) {
        err << "config error: " << e.what() << '\n';
        return kConfigError;
      }
      break;
    }
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kConfigError;
  }

  try {
    if (*design) return run_design(design_pf, design_sf, false, out, err);
    if (*crisp) return run_design(crisp_pf, crisp_sf, true, out, err);
    if (*verify) return run_verify(vf, verify_sf, out, err);
    if (*disp) return run_dispose(df, out, err);
    if (*orc) return run_oracle(of, oracle_sf, out, err);
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kConfigError;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kConfigError;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << '\n';
    return kConfigError;
  }
  return kConfigError;
}

}  // namespace fasp::cli
