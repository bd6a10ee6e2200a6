// Copyright 2026 The fasp Authors
// SPDX-License-Identifier: Apache-2.0

#include "fasp/disposition.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <span>
#include <sstream>

#include <json.hpp>

#include "fasp/embedded.hpp"
#include "fasp/errors.hpp"

namespace fasp {
namespace {

void check_rule(const PlanRule& r) {
  if (!(r.t1 >= 0.0) || !(r.t2 >= r.t1)) {
    throw DomainError("plan rule requires 0 <= t1 <= t2");
  }
  if (r.n < 1) throw DomainError("plan rule requires n >= 1");
}

Decision classify(double stat, const PlanRule& r) {
  if (stat < r.t1) return Decision::reject;
  if (stat >= r.t2) return Decision::accept;
  return Decision::continue_exhausted;
}

template <typename Statistic>
Disposition by_blocks(const FailureData& d, const PlanRule& rule, Statistic stat) {
  d.validate();
  check_rule(rule);
  const auto n = static_cast<std::size_t>(rule.n);
  if (d.values.size() < n) {
    throw InputError("need at least " + std::to_string(n) + " values for the first group, have " +
                     std::to_string(d.values.size()));
  }
  Disposition out{Decision::continue_exhausted, 0, {}};
  for (std::size_t start = 0, group = 1; start + n <= d.values.size(); start += n, ++group) {
    const double s = stat(std::span<const double>(d.values).subspan(start, n));
    out.evidence.push_back(s);
    const Decision dec = classify(s, rule);
    if (dec != Decision::continue_exhausted) {
      out.decision = dec;
      out.decided_at = static_cast<int>(group);
      return out;
    }
  }
  return out;
}

double mle_of(std::span<const double> block, double tau) {
  double total = 0.0;
  int failures = 0;
  for (double v : block) {
    if (v < tau) {
      total += v;
      ++failures;
    } else {
      total += tau;
    }
  }
  if (failures == 0) throw DomainError("censored MLE undefined: no failure before the censor time");
  return total / failures;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

void FailureData::validate() const {
  if (values.empty()) throw InputError("failure data is empty");
  for (double v : values) {
    if (!(v > 0.0) || !std::isfinite(v)) throw InputError("failure data values must be positive");
  }
  if (censor_time && !(*censor_time > 0.0)) throw InputError("censor time must be positive");
}

const char* to_string(Decision d) {
  switch (d) {
    case Decision::accept: return "accept";
    case Decision::reject: return "reject";
    case Decision::continue_exhausted: return "continue_exhausted";
  }
  return "?";
}

PlanRule PlanRule::from_design(const PlanDesign& d) { return {d.t1, d.t2, d.n.value_or(1)}; }

Disposition dispose_ssp(const FailureData& d, const PlanRule& rule) {
  d.validate();
  check_rule(rule);
  if (d.interpretation != Interpretation::inter_failure_times) {
    throw InputError("sequential disposition reads inter-failure times");
  }
  Disposition out{Decision::continue_exhausted, 0, {}};
  for (std::size_t i = 0; i < d.values.size(); ++i) {
    out.evidence.push_back(d.values[i]);
    const Decision dec = classify(d.values[i], rule);
    if (dec != Decision::continue_exhausted) {
      out.decision = dec;
      out.decided_at = static_cast<int>(i + 1);
      return out;
    }
  }
  return out;
}

Disposition dispose_rgsp_min(const FailureData& d, const PlanRule& rule) {
  return by_blocks(d, rule, [](std::span<const double> b) { return *std::min_element(b.begin(), b.end()); });
}

Disposition dispose_rgsp_max(const FailureData& d, const PlanRule& rule) {
  return by_blocks(d, rule, [](std::span<const double> b) { return *std::max_element(b.begin(), b.end()); });
}

Disposition dispose_type1(const FailureData& d, const PlanRule& rule, std::optional<double> tau) {
  const std::optional<double> t = tau ? tau : d.censor_time;
  if (!t || !(*t > 0.0)) throw InputError("type1 disposition needs a positive censor time");
  const double tv = *t;
  return by_blocks(d, rule, [tv](std::span<const double> b) { return mle_of(b, tv); });
}

Disposition dispose(PlanFamily family, const FailureData& d, const PlanRule& rule,
                    std::optional<double> tau) {
  switch (family) {
    case PlanFamily::ssp: return dispose_ssp(d, rule);
    case PlanFamily::rgsp_min: return dispose_rgsp_min(d, rule);
    case PlanFamily::rgsp_max: return dispose_rgsp_max(d, rule);
    case PlanFamily::type_i: return dispose_type1(d, rule, tau);
  }
  throw DomainError("dispose: unknown family");
}

double censored_mle(const FailureData& d, int n, double tau) {
  d.validate();
  if (!(tau > 0.0)) throw DomainError("censored_mle: tau must be positive");
  if (n < 1 || static_cast<std::size_t>(n) > d.values.size()) {
    throw DomainError("censored_mle: n must be between 1 and the number of values");
  }
  return mle_of(std::span<const double>(d.values).first(static_cast<std::size_t>(n)), tau);
}

FailureData parse_failure_csv(const std::string& text) {
  FailureData d;
  std::istringstream in(text);
  std::string line;
  bool first = true;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    line = trim(line);
    if (line.empty()) continue;
    // The first field of the row is the value; extra columns are ignored.
    const std::string field = trim(line.substr(0, line.find(',')));
    std::size_t used = 0;
    double v = 0.0;
    bool ok = true;
    try {
      v = std::stod(field, &used);
      ok = used == field.size();
    } catch (const std::exception&) {
      ok = false;
    }
    if (!ok) {
      if (first) {
        first = false;
        continue;
      }
      throw InputError("line " + std::to_string(line_no) + ": not a number: '" + field + "'");
    }
    first = false;
    d.values.push_back(v);
  }
  d.validate();
  return d;
}

FailureData parse_failure_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
  FailureData d;
  const nlohmann::json* arr = &j;
  if (j.is_object()) {
    if (!j.contains("values")) throw InputError("JSON object needs a \"values\" array");
    arr = &j["values"];
    if (j.contains("censor_time") && !j["censor_time"].is_null()) {
      if (!j["censor_time"].is_number()) throw InputError("censor_time must be a number");
      d.censor_time = j["censor_time"].get<double>();
    }
    if (j.contains("interpretation")) {
      const std::string s = j["interpretation"].get<std::string>();
      if (s == "item_lifetimes") {
        d.interpretation = Interpretation::item_lifetimes;
      } else if (s != "inter_failure_times") {
        throw InputError("unknown interpretation '" + s + "'");
      }
    }
  }
  if (!arr->is_array()) throw InputError("expected a JSON array of numbers");
  for (const auto& v : *arr) {
    if (!v.is_number()) throw InputError("JSON values must be numbers");
    d.values.push_back(v.get<double>());
  }
  d.validate();
  return d;
}

FailureData load_failure_data(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  const bool json = path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0;
  return json ? parse_failure_json(ss.str()) : parse_failure_csv(ss.str());
}

FailureData case_study_data() { return parse_failure_csv(embedded::case_study_csv()); }

}  // namespace fasp
