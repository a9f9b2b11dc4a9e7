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

#include <unistd.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "ibs/confidence.h"
#include "ibs/design.h"
#include "ibs/errors.h"
#include "ibs/montecarlo.h"

namespace ibs::cli {
namespace {

constexpr double kAgreementZ = 3.0;

void AddIntervalInputs(const ResolvedInterval& r, Fields& inputs) {
  inputs.Set("interval_mode", r.mode);
  inputs.Set("mu1", r.iv.mu1());
  inputs.Set("mu2", r.iv.mu2());
}

Shape MakeShape(int r) {
  if (r < Shape::kMin) throw UsageError("--r must be an integer >= 3");
  return Shape(r);
}

// Default estimator is omega* / (N + 1).
EstimatorSpec ResolveSpec(Shape r, const RelativeInterval& iv,
                          const std::optional<double>& omega,
                          const std::optional<double>& d) {
  return EstimatorSpec(r, omega.value_or(optimal_omega(r, iv)), d.value_or(1.0));
}

void AddSpecInputs(const EstimatorSpec& spec, Fields& inputs) {
  inputs.Set("r", std::int64_t{spec.r.value()});
  inputs.Set("omega", spec.omega);
  inputs.Set("d", spec.d);
}

void AddIntervalIntoOptions(CLI::App& cmd, IntervalFlags& f) {
  cmd.add_option("--mu1", f.mu1, "Lower scale factor mu1 > 1 (with --mu2)");
  cmd.add_option("--mu2", f.mu2, "Upper scale factor mu2 > 1 (with --mu1)");
  cmd.add_option("--m", f.m, "Symmetric relative error: mu1 = mu2 = 1 + m");
  cmd.add_option("--m-abs", f.m_abs,
                 "Absolute-error mode: mu1 = 1 + m, mu2 = 1 / (1 - m), 0<m<1");
  cmd.add_option("--ratio", f.ratio,
                 "Interval ratio M = mu1 mu2 (split as mu1 = mu2 = sqrt M)");
}

std::string Diagnostic(const std::string& msg) {
  const bool color = ::isatty(STDERR_FILENO) && std::getenv("NO_COLOR") == nullptr;
  return (color ? std::string("ibsplan: \033[31merror:\033[0m ")
                : std::string("ibsplan: error: ")) +
         msg + "\n";
}

}  // namespace

ResolvedInterval ResolveInterval(const IntervalFlags& f) {
  const int modes = (f.mu1 || f.mu2 ? 1 : 0) + (f.m ? 1 : 0) +
                    (f.m_abs ? 1 : 0) + (f.ratio ? 1 : 0);
  if (modes != 1) {
    throw UsageError(
        "give exactly one of --mu1/--mu2, --m, --m-abs, --ratio");
  }
  if (f.mu1 || f.mu2) {
    if (!f.mu1 || !f.mu2) throw UsageError("--mu1 and --mu2 go together");
    return {RelativeInterval(*f.mu1, *f.mu2), "mu"};
  }
  if (f.m) return {RelativeInterval::Symmetric(*f.m), "symmetric"};
  if (f.m_abs) return {RelativeInterval::AbsoluteError(*f.m_abs), "absolute"};
  return {RelativeInterval::FromRatio(*f.ratio), "ratio"};
}

std::vector<int> ParseRList(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  auto to_int = [&](const std::string& s) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(s, &used);
    } catch (const std::exception&) {
      throw UsageError("bad r list entry '" + s + "'");
    }
    if (used != s.size() || v < Shape::kMin) {
      throw UsageError("bad r list entry '" + s + "' (need integers >= 3)");
    }
    return v;
  };
  while (std::getline(ss, item, ',')) {
    const auto dash = item.find('-');
    if (dash == std::string::npos) {
      out.push_back(to_int(item));
      continue;
    }
    const int lo = to_int(item.substr(0, dash));
    const int hi = to_int(item.substr(dash + 1));
    if (hi < lo) throw UsageError("bad r range '" + item + "'");
    for (int r = lo; r <= hi; ++r) out.push_back(r);
  }
  if (out.empty()) throw UsageError("empty r list");
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

CommandResult cmd_plan(const PlanOptions& opts) {
  CommandResult result;
  OutputRecord& rec = result.record;
  rec.command = "plan";
  const ResolvedInterval ri = ResolveInterval(opts.interval);
  AddIntervalInputs(ri, rec.inputs);
  rec.inputs.Set("confidence", opts.confidence);
  rec.inputs.Set("require_global", opts.require_global);
  if (opts.cap < Shape::kMin) throw UsageError("--cap must be >= 3");

  // The ratio flag is taken verbatim so M carries no split rounding.
  const double ratio = opts.interval.ratio ? *opts.interval.ratio : ri.iv.ratio();
  try {
    const DesignResult d =
        opts.interval.ratio
            ? min_r_for_confidence(ratio, opts.confidence, opts.require_global,
                                   opts.cap)
            : min_r_for_confidence(ri.iv, opts.confidence, opts.require_global,
                                   opts.cap);
    Fields& o = rec.outputs;
    o.Set("status", std::string("ok"));
    o.Set("r", std::int64_t{d.r.value()});
    o.Set("M", d.ratio);
    o.Set("c_star", d.c_star);
    o.Set("omega_star", d.omega_star);
    o.Set("estimator_d", 1.0);
    o.Set("interval_lower_coeff", d.coefficients.lower);
    o.Set("interval_upper_coeff", d.coefficients.upper);
    o.Set("global_condition", d.global_condition_met);
    o.Set("binding_condition", std::string(ToString(d.binding_condition)));
    o.Set("threshold_h", threshold_h(d.r));
    o.Set("asymptotic_condition",
          asymptotic_guarantee_condition(d.r, d.ratio, 1.0));
    if (!d.global_condition_met) {
      o.Set("warning",
            std::string("c* is only guaranteed asymptotically (M below h(r))"));
    }
  } catch (const UnreachableTarget& e) {
    Fields& o = rec.outputs;
    o.Set("status", std::string("unreachable"));
    o.Set("best_r", std::int64_t{e.best_r()});
    o.Set("best_c_star", e.best_c_star());
    o.Set("M", ratio);
    result.exit_code = kUnreachable;
  }
  return result;
}

CommandResult cmd_eval(const EvalOptions& opts) {
  CommandResult result;
  OutputRecord& rec = result.record;
  rec.command = "eval";
  const Shape r = MakeShape(opts.r);
  const ResolvedInterval ri = ResolveInterval(opts.interval);
  const EstimatorSpec spec = ResolveSpec(r, ri.iv, opts.omega, opts.d);
  AddSpecInputs(spec, rec.inputs);
  AddIntervalInputs(ri, rec.inputs);
  if (opts.p) rec.inputs.Set("p", *opts.p);

  const double ratio = ri.iv.ratio();
  Fields& o = rec.outputs;
  o.Set("M", ratio);
  o.Set("omega_star", optimal_omega(r, ri.iv));
  o.Set("c_star", optimal_confidence(r, ratio));
  o.Set("c_bar", asymptotic_confidence(spec, ri.iv));
  o.Set("asymptotic_shift_threshold", asymptotic_shift_threshold(r, ratio));
  o.Set("asymptotic_condition",
        asymptotic_guarantee_condition(r, ratio, spec.d));
  o.Set("first_order_margin", first_order_margin(r, ratio, spec.d));
  const bool shift_one = spec.d == 1.0;
  o.Set("sufficient_condition_applicable", shift_one);
  o.Set("sufficient_condition",
        shift_one && general_sufficient_condition(spec, ri.iv));
  o.Set("global_condition", global_guarantee_condition(r, ratio));
  o.Set("binding_condition", std::string(ToString(binding_condition_for(r))));
  o.Set("threshold_h", threshold_h(r));
  if (opts.p) {
    const CoverageWindow w = coverage_window(spec, ri.iv, *opts.p);
    o.Set("n1", w.n1);
    o.Set("n2", w.n2);
    o.Set("c_p", exact_confidence(spec, ri.iv, *opts.p));
    o.Set("expected_stopping_time", r.value() / *opts.p);
  }
  return result;
}

namespace {

CommandResult FigureOne(const CurveOptions& opts) {
  CommandResult result;
  OutputRecord& rec = result.record;
  rec.command = "curve";
  const std::vector<int> rs = ParseRList(opts.r_list);
  if (!(opts.sqrtm_min > 0.0 && opts.sqrtm_min < opts.sqrtm_max)) {
    throw UsageError("need 0 < --sqrtm-min < --sqrtm-max");
  }
  if (opts.grid < 2) throw UsageError("--grid must be >= 2");
  rec.inputs.Set("mode", std::string("figure1"));
  rec.inputs.Set("r_list", opts.r_list);
  rec.inputs.Set("sqrtm_min", opts.sqrtm_min);
  rec.inputs.Set("sqrtm_max", opts.sqrtm_max);
  rec.inputs.Set("grid", std::int64_t{opts.grid});

  const double step = (opts.sqrtm_max - opts.sqrtm_min) / (opts.grid - 1);
  for (int i = 0; i < opts.grid; ++i) {
    const double x = i + 1 == opts.grid ? opts.sqrtm_max : opts.sqrtm_min + i * step;
    const double ratio = (1.0 + x) * (1.0 + x);
    std::vector<double> cs;
    std::size_t envelope = rs.size();
    for (std::size_t k = 0; k < rs.size(); ++k) {
      const Shape r(rs[k]);
      cs.push_back(optimal_confidence(r, ratio));
      if (global_guarantee_condition(r, ratio) &&
          (envelope == rs.size() || cs[k] < cs[envelope])) {
        envelope = k;
      }
    }
    for (std::size_t k = 0; k < rs.size(); ++k) {
      Fields row;
      row.Set("sqrtM_minus_1", x);
      row.Set("r", std::int64_t{rs[k]});
      row.Set("c_star", cs[k]);
      row.Set("envelope_flag", std::int64_t{k == envelope ? 1 : 0});
      rec.rows.push_back(std::move(row));
    }
  }
  rec.outputs.Set("rows", static_cast<std::int64_t>(rec.rows.size()));
  return result;
}

}  // namespace

CommandResult cmd_curve(const CurveOptions& opts) {
  if (opts.figure1) return FigureOne(opts);
  CommandResult result;
  OutputRecord& rec = result.record;
  rec.command = "curve";
  if (!opts.r) throw UsageError("curve mode needs --r (or use --figure1)");
  const Shape r = MakeShape(*opts.r);
  const ResolvedInterval ri = ResolveInterval(opts.interval);
  const EstimatorSpec spec = ResolveSpec(r, ri.iv, opts.omega, opts.d);
  if (!(opts.p_min > 0.0 && opts.p_min < opts.p_max && opts.p_max < 1.0)) {
    throw UsageError("need 0 < --p-min < --p-max < 1");
  }
  if (opts.grid < 2) throw UsageError("--grid must be >= 2");
  rec.inputs.Set("mode", std::string("curve"));
  AddSpecInputs(spec, rec.inputs);
  AddIntervalInputs(ri, rec.inputs);
  rec.inputs.Set("p_min", opts.p_min);
  rec.inputs.Set("p_max", opts.p_max);
  rec.inputs.Set("grid", std::int64_t{opts.grid});

  const ConfidenceCurve curve =
      confidence_curve(spec, ri.iv, opts.p_min, opts.p_max, opts.grid);
  for (const CurvePoint& pt : curve.points) {
    Fields row;
    row.Set("p", pt.p);
    row.Set("c", pt.c);
    rec.rows.push_back(std::move(row));
  }
  const CurvePoint low = scan_infimum(curve);
  rec.outputs.Set("rows", static_cast<std::int64_t>(rec.rows.size()));
  rec.outputs.Set("breakpoints", static_cast<std::int64_t>(curve.breakpoints.size()));
  rec.outputs.Set("p_at_min", low.p);
  rec.outputs.Set("c_min", low.c);
  rec.outputs.Set("c_star", optimal_confidence(r, ri.iv.ratio()));
  return result;
}

CommandResult cmd_simulate(const SimulateOptions& opts) {
  CommandResult result;
  OutputRecord& rec = result.record;
  rec.command = "simulate";
  const Shape r = MakeShape(opts.r);
  const ResolvedInterval ri = ResolveInterval(opts.interval);
  const EstimatorSpec spec = ResolveSpec(r, ri.iv, opts.omega, opts.d);
  if (!(opts.p > 0.0 && opts.p < 1.0)) throw UsageError("--p must lie in (0,1)");
  if (opts.reps < 1) throw UsageError("--reps must be >= 1");
  AddSpecInputs(spec, rec.inputs);
  AddIntervalInputs(ri, rec.inputs);
  rec.inputs.Set("p", opts.p);

  const SimulationReport rep =
      coverage_experiment(spec, ri.iv, opts.p, opts.reps, opts.seed);
  const double c = exact_confidence(spec, ri.iv, opts.p);
  const WilsonInterval band = wilson_interval(rep.hits, rep.reps, kAgreementZ);
  Fields& o = rec.outputs;
  o.Set("reps", rep.reps);
  o.Set("hits", rep.hits);
  o.Set("coverage", rep.coverage);
  o.Set("wilson_low", rep.wilson_low);
  o.Set("wilson_high", rep.wilson_high);
  o.Set("mean_stopping_time", rep.mean_stopping_time);
  o.Set("expected_stopping_time", r.value() / opts.p);
  o.Set("seed", std::to_string(rep.seed));
  o.Set("c_exact", c);
  o.Set("agree", c >= band.low && c <= band.high);
  return result;
}

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{
      "Planner for estimating a probability by inverse binomial sampling "
      "with a guaranteed relative-interval confidence.",
      "ibsplan"};
  app.require_subcommand(1);
  std::string format = "csv";
  std::string output;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--output", output, "Write to this file instead of stdout");
  };

  PlanOptions plan;
  CLI::App* plan_cmd =
      app.add_subcommand("plan", "Minimum r for a target guaranteed confidence");
  AddIntervalIntoOptions(*plan_cmd, plan.interval);
  plan_cmd->add_option("--confidence", plan.confidence, "Target confidence c0")
      ->required();
  bool no_global = false;
  plan_cmd->add_flag("--no-global", no_global,
                     "Accept designs guaranteed only for small p");
  plan_cmd->add_option("--cap", plan.cap, "Largest r searched");
  add_common(plan_cmd);

  EvalOptions eval;
  CLI::App* eval_cmd = app.add_subcommand(
      "eval", "Confidence figures and conditions for one estimator");
  eval_cmd->add_option("--r", eval.r, "Number of successes")->required();
  AddIntervalIntoOptions(*eval_cmd, eval.interval);
  eval_cmd->add_option("--omega", eval.omega, "Estimator numerator (default omega*)");
  eval_cmd->add_option("--d", eval.d, "Estimator shift (default 1)");
  eval_cmd->add_option("--p", eval.p, "Also evaluate the exact confidence at p");
  add_common(eval_cmd);

  CurveOptions curve;
  CLI::App* curve_cmd =
      app.add_subcommand("curve", "Confidence curve c(p) or c*(M) table");
  curve_cmd->add_option("--r", curve.r, "Number of successes (curve mode)");
  curve_cmd->add_option("--r-list", curve.r_list,
                        "r values for --figure1, e.g. 3-100 or 3,5,10");
  AddIntervalIntoOptions(*curve_cmd, curve.interval);
  curve_cmd->add_option("--omega", curve.omega, "Estimator numerator");
  curve_cmd->add_option("--d", curve.d, "Estimator shift");
  curve_cmd->add_option("--p-min", curve.p_min, "Smallest p");
  curve_cmd->add_option("--p-max", curve.p_max, "Largest p");
  curve_cmd->add_option("--grid", curve.grid, "Number of log-spaced grid points");
  curve_cmd->add_flag("--figure1", curve.figure1,
                      "Emit (sqrt(M)-1, r, c*, envelope) rows instead of c(p)");
  curve_cmd->add_option("--sqrtm-min", curve.sqrtm_min, "Smallest sqrt(M)-1");
  curve_cmd->add_option("--sqrtm-max", curve.sqrtm_max, "Largest sqrt(M)-1");
  add_common(curve_cmd);

  SimulateOptions sim;
  CLI::App* sim_cmd =
      app.add_subcommand("simulate", "Monte Carlo coverage check");
  sim_cmd->add_option("--r", sim.r, "Number of successes")->required();
  AddIntervalIntoOptions(*sim_cmd, sim.interval);
  sim_cmd->add_option("--p", sim.p, "True probability")->required();
  sim_cmd->add_option("--reps", sim.reps, "Replicates");
  sim_cmd->add_option("--seed", sim.seed, "Seed");
  sim_cmd->add_option("--omega", sim.omega, "Estimator numerator");
  sim_cmd->add_option("--d", sim.d, "Estimator shift");
  add_common(sim_cmd);

  std::vector<std::string> argv_storage{"ibsplan"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : argv_storage) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kOk;
    }
    err << Diagnostic(e.what());
    return kUsage;
  }
  plan.require_global = !no_global;

  CommandResult result;
  try {
    if (plan_cmd->parsed()) {
      result = cmd_plan(plan);
    } else if (eval_cmd->parsed()) {
      result = cmd_eval(eval);
    } else if (curve_cmd->parsed()) {
      result = cmd_curve(curve);
    } else {
      result = cmd_simulate(sim);
    }
  } catch (const UsageError& e) {
    err << Diagnostic(e.what());
    return kUsage;
  } catch (const PreconditionError& e) {
    err << Diagnostic(e.what());
    return kUsage;
  } catch (const DomainError& e) {
    err << Diagnostic(e.what());
    return kNumericDomain;
  }

  const std::string text =
      format == "json" ? ToJson(result.record) : ToCsv(result.record);
  if (output.empty()) {
    out << text;
  } else {
    std::ofstream file(output, std::ios::binary);
    if (!file || !(file << text)) {
      err << Diagnostic("cannot write " + output);
      return kUsage;
    }
  }
  if (result.exit_code == kUnreachable) {
    err << Diagnostic("target confidence unreachable within --cap");
  }
  return result.exit_code;
}

}  // namespace ibs::cli
