// Copyright 2026 The fasp Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"

namespace fasp::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("fasp_cli_test_" + name);
  std::ofstream(path, std::ios::binary) << content;
  return path.string();
}

const std::vector<std::string> kDesign = {"design", "--lambda0", "300", "--lambda1", "50",
                                          "--a", "1500", "--restarts", "4"};

TEST(Cli, DesignFeasible) {
  const Result r = call(kDesign);
  ASSERT_EQ(r.code, kOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_TRUE(j["feasible"].get<bool>());
  EXPECT_EQ(j["family"], "ssp");
  EXPECT_EQ(j["seed"], 42);
  EXPECT_TRUE(j.contains("margins"));
}

TEST(Cli, DesignDeterministic) {
  EXPECT_EQ(call(kDesign).out, call(kDesign).out);
}

TEST(Cli, ConfigErrors) {
  EXPECT_EQ(call({"design", "--family", "type1", "--lambda0", "300", "--lambda1", "200"}).code,
            kConfigError);
  EXPECT_EQ(call({"design", "--lambda0", "300"}).code, kConfigError);
  EXPECT_EQ(call({"design", "--lambda0", "300", "--lambda1", "50", "--bogus", "1"}).code,
            kConfigError);
  EXPECT_EQ(call({"nonsense"}).code, kConfigError);
  EXPECT_EQ(call({"design", "--lambda0", "50", "--lambda1", "300"}).code, kConfigError);
}

TEST(Cli, InfeasibleDesign) {
  const Result r = call({"crisp-baseline", "--lambda0", "300", "--lambda1", "290", "--alpha", "0.001",
                         "--beta", "0.001", "--restarts", "2"});
  EXPECT_EQ(r.code, kInfeasible) << r.err;
  EXPECT_FALSE(nlohmann::json::parse(r.out)["feasible"].get<bool>());
}

TEST(Cli, ConfigPrecedence) {
  const std::string cfg = temp_file("prec.cfg", "# defaults\nlambda0 = 300\nlambda1 = 50\nseed = 7\nrestarts = 2\n");
  auto seed_of = [](const Result& r) { return nlohmann::json::parse(r.out)["seed"].get<int>(); };
  EXPECT_EQ(seed_of(call({"design", "--config", cfg})), 7);
  EXPECT_EQ(seed_of(call({"design", "--config", cfg, "--seed", "9"})), 9);
  ::setenv("ASP_SEED", "5", 1);
  EXPECT_EQ(seed_of(call({"design", "--config", cfg})), 7);
  EXPECT_EQ(seed_of(call({"design", "--lambda0", "300", "--lambda1", "50", "--restarts", "2"})), 5);
  ::unsetenv("ASP_SEED");
  const std::string bad = temp_file("bad.cfg", "lambda0 = 300\ncolour = blue\n");
  EXPECT_EQ(call({"design", "--config", bad}).code, kConfigError);
  const std::string flag = temp_file("flag.cfg", "lambda0 = 300\nlambda1 = 50\nrestarts = 2\nrestrict_t2_to_aql = true\n");
  const Result r = call({"design", "--config", flag});
  ASSERT_NE(r.code, kConfigError) << r.err;
  EXPECT_TRUE(nlohmann::json::parse(r.out)["inputs"]["restrict_t2_to_aql"].get<bool>());
}

TEST(ConfigToArgs, Parsing) {
  EXPECT_EQ(config_to_args("a_b = 1\n\n# c\nflag = false\non = yes\n", {"flag", "on"}),
            (std::vector<std::string>{"--a-b", "1", "--on"}));
}

TEST(Cli, VerifyTablesFilters) {
  const Result empty = call({"verify-tables", "--rows", "0", "--no-solve"});
  EXPECT_EQ(empty.code, kOk);
  EXPECT_TRUE(nlohmann::json::parse(empty.out)["rows"].empty());
  const Result t1 = call({"verify-tables", "--table", "1", "--no-solve"});
  EXPECT_EQ(t1.code, kOk);
  const auto j = nlohmann::json::parse(t1.out);
  EXPECT_EQ(j["rows"].size(), 16u);
  for (const auto& row : j["rows"]) EXPECT_EQ(row["table"], 1);
}

TEST(Cli, DisposeCaseStudy) {
  const Result mn = call({"dispose", "--case-study", "--family", "rgsp_min", "--t1", "4", "--t2", "141",
                          "--n", "20"});
  EXPECT_EQ(mn.code, kOk);
  const auto j = nlohmann::json::parse(mn.out);
  EXPECT_EQ(j["decision"], "accept");
  EXPECT_EQ(j["decided_at"], 1);
  EXPECT_EQ(call({"dispose", "--case-study", "--family", "ssp", "--t1", "41", "--t2", "3159"}).code, kOk);
  const std::string low = temp_file("low.csv", "40\n");
  EXPECT_EQ(call({"dispose", "--data", low, "--family", "ssp", "--t1", "41", "--t2", "3159"}).code,
            kRejected);
  const std::string band = temp_file("band.csv", "100\n200\n");
  EXPECT_EQ(call({"dispose", "--data", band, "--family", "ssp", "--t1", "41", "--t2", "3159"}).code,
            kUndecided);
  const std::string empty = temp_file("empty.csv", "");
  EXPECT_EQ(call({"dispose", "--data", empty, "--family", "ssp", "--t1", "41", "--t2", "3159"}).code,
            kConfigError);
}

TEST(Cli, DisposeFromDesignFile) {
  const std::string path = (std::filesystem::temp_directory_path() / "fasp_cli_test_design.json").string();
  std::vector<std::string> args = kDesign;
  args.push_back("-o");
  args.push_back(path);
  ASSERT_EQ(call(args).code, kOk);
  const Result r = call({"dispose", "--case-study", "--design", path});
  EXPECT_NE(r.code, kConfigError) << r.err;
}

TEST(Cli, OracleSmallDraws) {
  const std::vector<std::string> args = {"oracle", "--draws", "100"};
  const Result a = call(args);
  EXPECT_TRUE(a.code == kOk || a.code == kOracleFailed);
  EXPECT_FALSE(nlohmann::json::parse(a.out).empty());
  EXPECT_EQ(a.out, call(args).out);
}

TEST(Cli, OracleSingleCaseReduction) {
  const Result r = call({"oracle", "--family", "rgsp_max", "--n", "1", "--lambda", "300", "--a", "15000",
                         "--t1", "130", "--t2", "339", "--draws", "100000"});
  EXPECT_EQ(r.code, kOk) << r.err;
}

}  // namespace
}  // namespace fasp::cli
