// Copyright 2026 The Hardy-Heisenberg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hardy_cli/cli.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

namespace hardy::cli {
namespace {

using nlohmann::json;

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = execute(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::path(::testing::TempDir()) / name;
}

const std::vector<std::string> kEstimate = {
    "estimate", "--n", "1", "--p", "4", "--s", "0.3", "--alpha", "1.8",
    "--bump", "0.5,0,0:0.2,0.2,0.1", "--samples", "20000", "--seed", "3",
    "--no-timestamp"};

TEST(CliTest, VerifyGroupSucceeds) {
  const CliRun r = run({"verify", "group", "--n", "1", "--samples", "5000",
                     "--seed", "7", "--no-timestamp"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const json doc = json::parse(r.out);
  EXPECT_EQ(doc["command"], "verify group");
  EXPECT_TRUE(doc["passed"].get<bool>());
  EXPECT_EQ(doc["config"]["seed"], 7);
  EXPECT_FALSE(doc.contains("timestamp"));
}

TEST(CliTest, TimestampIsPresentByDefault) {
  const CliRun r = run({"verify", "group", "--n", "1", "--samples", "2000",
                     "--seed", "7"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_TRUE(json::parse(r.out).contains("timestamp"));
}

TEST(CliTest, ExitCodeFollowsPassedField) {
  const std::vector<std::vector<std::string>> commands = {
      {"verify", "lemma21", "--n", "1", "--m", "3", "--j", "1", "--samples",
       "2000", "--seed", "1"},
      {"verify", "lemma31", "--n", "1", "--m", "2", "--samples", "2000",
       "--seed", "1"},
      kEstimate,
  };
  for (const auto& args : commands) {
    const CliRun r = run(args);
    ASSERT_TRUE(r.code == kExitOk || r.code == kExitCheckFailed) << r.err;
    EXPECT_EQ(r.code == kExitOk, json::parse(r.out)["passed"].get<bool>());
  }
}

TEST(CliTest, UsageErrorsExitTwo) {
  EXPECT_EQ(run({}).code, kExitUsage);
  EXPECT_EQ(run({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(run({"verify", "group", "--n", "1", "--bogus", "1"}).code,
            kExitUsage);
  const CliRun missing_seed = run({"verify", "group", "--n", "1"});
  EXPECT_EQ(missing_seed.code, kExitUsage);
  EXPECT_NE(missing_seed.err.find("--seed"), std::string::npos);
  EXPECT_EQ(run({"verify", "group", "--n", "x", "--seed", "1"}).code,
            kExitUsage);
  EXPECT_EQ(run({"constants", "--n", "1", "--p", "2", "--s", "0.5",
                 "--alpha", "0.5", "--m", "0"})
                .code,
            kExitUsage);
  EXPECT_EQ(run({"constants", "--n", "1", "--p", "2", "--s", "0.5",
                 "--alpha", "0.5", "--format", "csv"})
                .code,
            kExitUsage);
}

TEST(CliTest, RegimeErrorsExitThree) {
  // sp + alpha = Q - 2: neither whole-space regime.
  const CliRun r = run({"constants", "--n", "1", "--p", "2", "--s", "0.5",
                        "--alpha", "1", "--domain", "whole"});
  EXPECT_EQ(r.code, kExitRegime) << r.out << r.err;
  EXPECT_EQ(run({"constants", "--n", "1", "--p", "2", "--s", "0.5",
                 "--alpha", "0.5", "--regime", "supercritical"})
                .code,
            kExitRegime);
}

TEST(CliTest, ConstantsMatchLibrary) {
  const CliRun r = run({"constants", "--n", "1", "--p", "2", "--s", "0.75",
                     "--alpha", "1.75", "--regime", "halfspace",
                     "--no-timestamp"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const json res = json::parse(r.out)["result"];
  EXPECT_EQ(res["m_min"], 18);
  EXPECT_NEAR(res["C_final"].get<double>(), 5232854548916.8785, 1e-6 * 5.2e12);
}

TEST(CliTest, HelpExitsZero) {
  const CliRun r = run({"--help"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("estimate"), std::string::npos);
}

TEST(CliTest, ConfigFileWithFlagOverride) {
  const auto path = temp_path("hardy_cli_config.json");
  {
    std::ofstream f(path);
    f << R"({"n": 2, "samples": 3000, "seed": 11, "no-timestamp": true})";
  }
  const CliRun from_file = run({"verify", "group", "--config", path.string()});
  ASSERT_EQ(from_file.code, kExitOk) << from_file.err;
  json doc = json::parse(from_file.out);
  EXPECT_EQ(doc["config"]["n"], 2);
  EXPECT_EQ(doc["config"]["seed"], 11);
  const CliRun overridden =
      run({"verify", "group", "--config", path.string(), "--n", "1"});
  ASSERT_EQ(overridden.code, kExitOk) << overridden.err;
  doc = json::parse(overridden.out);
  EXPECT_EQ(doc["config"]["n"], 1);

  {
    std::ofstream f(path);
    f << R"({"n": 1, "seed": 1, "unknown": 5})";
  }
  EXPECT_EQ(run({"verify", "group", "--config", path.string()}).code,
            kExitUsage);
  {
    std::ofstream f(path);
    f << "{ not json";
  }
  EXPECT_EQ(run({"verify", "group", "--config", path.string()}).code,
            kExitUsage);
  std::filesystem::remove(path);
}

TEST(CliTest, ConfigDumpReproducesRun) {
  const CliRun first = run(kEstimate);
  ASSERT_EQ(first.code, kExitOk) << first.err;
  const json doc = json::parse(first.out);
  const auto path = temp_path("hardy_cli_replay.json");
  {
    std::ofstream f(path);
    json cfg = doc["config"];
    cfg["no-timestamp"] = true;
    f << cfg.dump();
  }
  const CliRun replay = run({"estimate", "--config", path.string()});
  ASSERT_EQ(replay.code, kExitOk) << replay.err;
  EXPECT_EQ(json::parse(replay.out)["result"], doc["result"]);
  std::filesystem::remove(path);
}

TEST(CliTest, CsvHeaderWrittenOnceThenAppended) {
  const auto path = temp_path("hardy_cli_rows.csv");
  std::filesystem::remove(path);
  std::vector<std::string> args = kEstimate;
  args.insert(args.end(), {"--format", "csv", "--out", path.string()});
  ASSERT_EQ(run(args).code, kExitOk);
  ASSERT_EQ(run(args).code, kExitOk);
  std::ifstream in(path);
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  ASSERT_EQ(lines.size(), 3u);
  EXPECT_EQ(lines[0].rfind("label,n,p,s,alpha,domain,lhs", 0), 0u);
  EXPECT_EQ(lines[1], lines[2]);
  std::filesystem::remove(path);
}

TEST(CliTest, OutputIndependentOfThreadCount) {
  std::vector<std::string> one = kEstimate;
  one.insert(one.end(), {"--threads", "1"});
  std::vector<std::string> many = kEstimate;
  many.insert(many.end(), {"--threads", "6"});
  const CliRun a = run(one);
  const CliRun b = run(many);
  ASSERT_EQ(a.code, kExitOk) << a.err;
  EXPECT_EQ(a.out, b.out);
}

TEST(CliTest, UnresolvedQuotientIsInconclusiveNotFailed) {
  // At 5000 pairs this p = 4 seminorm is not resolved to 5 standard errors.
  for (const std::string cmd : {"estimate", "optimize"}) {
    std::vector<std::string> args = {
        cmd, "--n", "1", "--p", "4", "--s", "0.3", "--alpha", "1.8", "--bump",
        "0.3,0,0:0.2,0.2,0.2", "--samples", "5000", "--seed", "15",
        "--no-timestamp"};
    if (cmd == "optimize") args.insert(args.end(), {"--budget", "2"});
    const CliRun r = run(args);
    ASSERT_EQ(r.code, kExitOk) << r.err;
    const json doc = json::parse(r.out);
    EXPECT_TRUE(doc["inconclusive"].get<bool>()) << cmd;
    EXPECT_TRUE(doc.contains("inconclusive_reason")) << cmd;
  }
}

TEST(CliTest, EstimateOfNonzeroBumpIsConclusive) {
  const CliRun r = run(kEstimate);
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const json doc = json::parse(r.out);
  EXPECT_FALSE(doc["inconclusive"].get<bool>());
  EXPECT_FALSE(doc.contains("inconclusive_reason"));
}

}  // namespace
}  // namespace hardy::cli
