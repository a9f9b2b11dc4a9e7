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


#ifndef IBS_TOOLS_CLI_H_
#define IBS_TOOLS_CLI_H_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ibs/model.h"
#include "output_record.h"

namespace ibs::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 2,
  kUnreachable = 3,
  kNumericDomain = 4,
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Exactly one of: mu1 and mu2 | m | m_abs | ratio.
struct IntervalFlags {
  std::optional<double> mu1;
  std::optional<double> mu2;
  std::optional<double> m;
  std::optional<double> m_abs;
  std::optional<double> ratio;
};

struct ResolvedInterval {
  RelativeInterval iv;
  std::string mode;  // "mu", "symmetric", "absolute", "ratio"
};

ResolvedInterval ResolveInterval(const IntervalFlags& flags);

// "3,5,10-20" style list of r values.
std::vector<int> ParseRList(const std::string& text);

struct PlanOptions {
  IntervalFlags interval;
  double confidence = 0.0;
  bool require_global = true;
  int cap = 100000;
};

struct EvalOptions {
  int r = 0;
  IntervalFlags interval;
  std::optional<double> omega;
  std::optional<double> d;
  std::optional<double> p;
};

struct CurveOptions {
  std::optional<int> r;
  std::string r_list = "3-100";
  IntervalFlags interval;
  std::optional<double> omega;
  std::optional<double> d;
  double p_min = 1e-4;
  double p_max = 0.5;
  int grid = 200;
  bool figure1 = false;
  double sqrtm_min = 0.05;
  double sqrtm_max = 2.0;
};

struct SimulateOptions {
  int r = 0;
  IntervalFlags interval;
  std::optional<double> omega;
  std::optional<double> d;
  double p = 0.0;
  std::int64_t reps = 100000;
  std::uint64_t seed = 0;
};

struct CommandResult {
  OutputRecord record;
  int exit_code = kOk;
};

CommandResult cmd_plan(const PlanOptions& opts);
CommandResult cmd_eval(const EvalOptions& opts);
CommandResult cmd_curve(const CurveOptions& opts);
CommandResult cmd_simulate(const SimulateOptions& opts);

// Full command line without the program name. Writes the record to `out`
// (or to --output) and diagnostics to `err`; returns the process exit code.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

}  // namespace ibs::cli

#endif  // IBS_TOOLS_CLI_H_
