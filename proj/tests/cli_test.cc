// Copyright 2026 The ibsplan Authors
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
//


#include "cli.h"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "json.hpp"

namespace ibs::cli {
namespace {

using nlohmann::json;

struct Invocation {
  int code;
  std::string out;
  std::string err;
};

Invocation Invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = RunCli(args, out, err);
  return {code, out.str(), err.str()};
}

json InvokeJson(std::vector<std::string> args) {
  args.push_back("--format");
  args.push_back("json");
  const Invocation run = Invoke(args);
  EXPECT_EQ(run.code, 0) << run.err;
  return json::parse(run.out);
}

TEST(ParseRListTest, RangesAndLists) {
  EXPECT_EQ(ParseRList("3,5,10-12"), (std::vector<int>{3, 5, 10, 11, 12}));
  EXPECT_EQ(ParseRList("4"), (std::vector<int>{4}));
  EXPECT_THROW(ParseRList("2-5"), UsageError);
  EXPECT_THROW(ParseRList("7-5"), UsageError);
  EXPECT_THROW(ParseRList("x"), UsageError);
  EXPECT_THROW(ParseRList(""), UsageError);
}

TEST(ResolveIntervalTest, Modes) {
  IntervalFlags f;
  f.m = 0.5;
  ResolvedInterval r = ResolveInterval(f);
  EXPECT_EQ(r.mode, "symmetric");
  EXPECT_DOUBLE_EQ(r.iv.mu1(), 1.5);
  f = {};
  f.m_abs = 0.4;
  r = ResolveInterval(f);
  EXPECT_EQ(r.mode, "absolute");
  EXPECT_NEAR(r.iv.ratio(), 1.4 / 0.6, 1e-14);
  f = {};
  f.ratio = 4.0;
  EXPECT_DOUBLE_EQ(ResolveInterval(f).iv.mu1(), 2.0);
  f = {};
  EXPECT_THROW(ResolveInterval(f), UsageError);
  f.m = 0.5;
  f.ratio = 2.0;
  EXPECT_THROW(ResolveInterval(f), UsageError);
  f = {};
  f.mu1 = 1.5;
  EXPECT_THROW(ResolveInterval(f), UsageError);
}

TEST(PlanCommandTest, ReferenceDesigns) {
  json j = InvokeJson({"plan", "--m", "0.5", "--confidence", "0.90"});
  EXPECT_EQ(j["outputs"]["r"], 17);
  EXPECT_EQ(j["outputs"]["status"], "ok");
  EXPECT_EQ(j["outputs"]["global_condition"], true);
  EXPECT_GE(j["outputs"]["c_star"].get<double>(), 0.90);
  j = InvokeJson({"plan", "--m-abs", "0.40", "--confidence", "0.90"});
  EXPECT_EQ(j["outputs"]["r"], 16);
  j = InvokeJson({"plan", "--ratio", "2.25", "--confidence", "0.90"});
  EXPECT_EQ(j["outputs"]["r"], 17);
  EXPECT_EQ(j["command"], "plan");
  EXPECT_EQ(j["inputs"]["interval_mode"], "ratio");
}

TEST(PlanCommandTest, UnreachableWithinCap) {
  const Invocation run = Invoke({"plan", "--m", "0.1", "--confidence", "0.999",
                          "--cap", "20", "--format", "json"});
  EXPECT_EQ(run.code, 3);
  const json j = json::parse(run.out);
  EXPECT_EQ(j["outputs"]["status"], "unreachable");
  EXPECT_EQ(j["outputs"]["best_r"], 20);
  EXPECT_FALSE(run.err.empty());
}

TEST(EvalCommandTest, Values) {
  json j = InvokeJson(
      {"eval", "--r", "10", "--m", "0.9074", "--omega", "9", "--d", "0"});
  EXPECT_NEAR(j["outputs"]["c_bar"].get<double>(), 0.9533146833, 1e-9);
  j = InvokeJson({"eval", "--r", "17", "--m", "0.5"});
  EXPECT_EQ(j["outputs"]["global_condition"], true);
  EXPECT_EQ(j["outputs"]["binding_condition"], "large_r");
  EXPECT_NEAR(j["outputs"]["c_star"].get<double>(),
              j["outputs"]["c_bar"].get<double>(), 1e-12);
  j = InvokeJson({"eval", "--r", "3", "--m", "1.0", "--p", "0.5", "--omega",
                  "3", "--d", "0"});
  EXPECT_EQ(j["outputs"]["n1"], 3);
  EXPECT_EQ(j["outputs"]["n2"], 12);
  EXPECT_DOUBLE_EQ(j["outputs"]["c_p"].get<double>(), 4017.0 / 4096.0);
  EXPECT_DOUBLE_EQ(j["outputs"]["expected_stopping_time"].get<double>(), 6.0);
}

TEST(CurveCommandTest, RowCountAndMinimum) {
  const json j = InvokeJson({"curve", "--r", "5", "--m", "0.5", "--p-min",
                             "0.01", "--p-max", "0.5", "--grid", "50"});
  const auto rows = j["rows"].size();
  EXPECT_EQ(rows, 50u + 2 * j["outputs"]["breakpoints"].get<std::size_t>());
  EXPECT_EQ(j["outputs"]["rows"].get<std::size_t>(), rows);
  double lo = 1.0;
  for (const auto& row : j["rows"]) lo = std::min(lo, row["c"].get<double>());
  EXPECT_EQ(lo, j["outputs"]["c_min"].get<double>());
}

TEST(CurveCommandTest, FigureOneEnvelope) {
  const json j = InvokeJson({"curve", "--figure1", "--r-list", "3-30",
                             "--sqrtm-min", "1.1078", "--sqrtm-max", "1.2",
                             "--grid", "2"});
  ASSERT_EQ(j["rows"].size(), 2u * 28u);
  const json* env = nullptr;
  int flags = 0;
  for (const auto& row : j["rows"]) {
    if (row["sqrtM_minus_1"].get<double>() != 1.1078) continue;
    if (row["envelope_flag"] == 1) {
      env = &row;
      ++flags;
    }
  }
  ASSERT_EQ(flags, 1);
  EXPECT_EQ((*env)["r"], 4);
  EXPECT_NEAR((*env)["c_star"].get<double>(), 0.85, 1e-3);
}

TEST(SimulateCommandTest, AgreesAndReproduces) {
  const std::vector<std::string> args = {"simulate", "--r", "17", "--m", "0.5",
                                         "--p", "0.1", "--reps", "20000",
                                         "--seed", "99", "--format", "json"};
  const Invocation a = Invoke(args);
  const Invocation b = Invoke(args);
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  const json j = json::parse(a.out);
  EXPECT_EQ(j["outputs"]["agree"], true);
  EXPECT_EQ(j["outputs"]["seed"], "99");
  const json one = InvokeJson({"simulate", "--r", "3", "--m", "0.5", "--p",
                               "0.2", "--reps", "1"});
  const double cov = one["outputs"]["coverage"].get<double>();
  EXPECT_TRUE(cov == 0.0 || cov == 1.0);
}

TEST(OutputTest, CsvLayout) {
  const Invocation run = Invoke({"eval", "--r", "10", "--m", "0.5"});
  ASSERT_EQ(run.code, 0);
  std::istringstream in(run.out);
  std::string header, values, extra;
  std::getline(in, header);
  std::getline(in, values);
  EXPECT_FALSE(std::getline(in, extra));
  EXPECT_EQ(header.rfind("command,", 0), 0u);
  EXPECT_EQ(values.rfind("eval,", 0), 0u);
  EXPECT_NE(header.find("c_star"), std::string::npos);
  EXPECT_EQ(std::count(header.begin(), header.end(), ','),
            std::count(values.begin(), values.end(), ','));
  EXPECT_EQ(run.out.find('\r'), std::string::npos);
}

TEST(OutputTest, WritesFile) {
  const std::string path = ::testing::TempDir() + "ibsplan_cli_test.json";
  const Invocation run = Invoke({"eval", "--r", "10", "--m", "0.5", "--format",
                          "json", "--output", path});
  ASSERT_EQ(run.code, 0);
  EXPECT_TRUE(run.out.empty());
  std::ifstream file(path);
  const json j = json::parse(file);
  EXPECT_EQ(j["command"], "eval");
  std::remove(path.c_str());
}

TEST(OutputTest, FormatNumber) {
  EXPECT_EQ(FormatNumber(0.5), "0.5");
  EXPECT_EQ(FormatNumber(4017.0 / 4096.0), "0.980712890625");
  EXPECT_EQ(FormatNumber(17.0), "17");
}

TEST(ExitCodeTest, UsageAndDomain) {
  EXPECT_EQ(Invoke({}).code, 2);
  EXPECT_EQ(Invoke({"bogus"}).code, 2);
  EXPECT_EQ(Invoke({"eval", "--r", "2", "--m", "0.5"}).code, 2);
  EXPECT_EQ(Invoke({"eval", "--r", "5"}).code, 2);
  EXPECT_EQ(Invoke({"plan", "--m", "0.5", "--confidence", "0.9", "--format",
                    "xml"}).code,
            2);
  EXPECT_EQ(Invoke({"eval", "--r", "5", "--mu1", "1", "--mu2", "2"}).code, 4);
  EXPECT_EQ(Invoke({"plan", "--m", "0.5", "--confidence", "1.5"}).code, 4);
  EXPECT_EQ(Invoke({"--help"}).code, 0);
  EXPECT_EQ(Invoke({"eval", "--d", "1", "--r", "3", "--m", "0.5", "--omega",
                    "1"}).code,
            0);
}

}  // namespace
}  // namespace ibs::cli
