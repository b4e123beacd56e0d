// Copyright 2026 The sirthreshold Authors
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

#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "sirthreshold/errors.hpp"
#include "sirthreshold/report.hpp"
#include "sirthreshold/sir.hpp"
#include "sirthreshold/sweep.hpp"
#include "sirthreshold/threshold.hpp"

namespace sirthreshold::cli {

namespace {

// Every flag, shared by all subcommands; unset optionals take module defaults.
struct ScenarioConfig {
  std::optional<double> n;
  std::optional<double> gamma;
  std::optional<double> infectious_period;
  std::optional<double> r0;
  std::optional<double> s0;
  std::optional<double> i0;
  double rr0 = 0.0;
  std::optional<double> m;

  std::optional<double> dt;
  std::optional<double> t_max;
  std::size_t panels = 2048;
  std::string out;

  std::optional<double> r0_min;
  std::optional<double> r0_max;
  std::size_t r0_count = 25;
  std::optional<double> m_min;
  std::optional<double> m_max;
  std::size_t m_count = 45;
  unsigned workers = 0;
};

template <class T>
T require(const std::optional<T>& value, const char* flag) {
  if (!value) throw InvalidArgument(std::string("missing required flag ") + flag);
  return *value;
}

double effective_gamma(const ScenarioConfig& config) {
  if (config.gamma) return *config.gamma;
  if (config.infectious_period) return 1.0 / *config.infectious_period;
  throw InvalidArgument("missing required flag --gamma (or --infectious-period)");
}

SirParams make_params(const ScenarioConfig& config) {
  return {require(config.n, "--n"), effective_gamma(config), require(config.r0, "--r0")};
}

SirState make_init(const ScenarioConfig& config) {
  return {0.0, require(config.s0, "--s0"), require(config.i0, "--i0"), config.rr0};
}

BaseScenario make_base(const ScenarioConfig& config) {
  return {require(config.n, "--n"), effective_gamma(config), require(config.s0, "--s0"),
          require(config.i0, "--i0"), config.rr0};
}

QuantifierOptions make_options(const ScenarioConfig& config) {
  return {config.dt.value_or(0.0), config.t_max.value_or(0.0), config.panels};
}

// Writes to --out when given, otherwise to `out`.
template <class Write>
void emit(const ScenarioConfig& config, std::ostream& out, Write&& write) {
  if (config.out.empty()) {
    write(out);
    return;
  }
  std::ofstream file(config.out);
  if (!file) throw std::runtime_error("cannot open output file " + config.out);
  write(file);
  if (!file) throw std::runtime_error("failed writing " + config.out);
}

void cmd_analyze(const ScenarioConfig& config, std::ostream& out) {
  const SirParams params = make_params(config);
  const ThresholdProblem problem(params, make_init(config), require(config.m, "--m"));
  const QuantifierOptions options = make_options(config);
  nlohmann::ordered_json report = to_json(analyze(problem, options));

  nlohmann::ordered_json echo;
  echo["n"] = params.population();
  echo["gamma"] = params.gamma();
  echo["r0"] = params.r0();
  echo["s0"] = problem.init().s;
  echo["i0"] = problem.init().i;
  echo["rr0"] = problem.init().r;
  echo["m"] = problem.threshold();
  echo["dt"] = options.dt > 0.0 ? options.dt : default_step(params);
  echo["t_max"] = options.t_max > 0.0 ? options.t_max : default_horizon(params);
  echo["panels"] = options.panels;
  report["config"] = std::move(echo);
  emit(config, out, [&](std::ostream& os) { os << report.dump(2) << '\n'; });
}

void cmd_curve(const ScenarioConfig& config, std::ostream& out) {
  const SirParams params = make_params(config);
  const SirState init = make_init(config);
  const double dt = config.dt.value_or(default_step(params));
  const double t_max = config.t_max.value_or(default_horizon(params));
  const Trajectory trajectory = integrate(params, init, init.t + t_max, dt);
  emit(config, out, [&](std::ostream& os) { trajectory.write_csv(os); });
}

void cmd_sweep(const ScenarioConfig& config, std::ostream& out) {
  SweepGrid grid;
  grid.base = make_base(config);
  grid.r0 = {require(config.r0_min, "--r0-min"), require(config.r0_max, "--r0-max"),
             config.r0_count};
  grid.m = {require(config.m_min, "--m-min"), require(config.m_max, "--m-max"), config.m_count};
  grid.options = make_options(config);
  const unsigned workers =
      config.workers > 0 ? config.workers : std::max(1u, std::thread::hardware_concurrency());
  const auto cells = sweep(grid, workers);
  emit(config, out, [&](std::ostream& os) { write_sweep_csv(os, cells); });
}

void cmd_profile(const ScenarioConfig& config, std::ostream& out) {
  const BaseScenario base = make_base(config);
  const double m = require(config.m, "--m");
  const double r0_max = require(config.r0_max, "--r0-max");
  const double r0_min = config.r0_min ? *config.r0_min : critical_r0(base.problem(r0_max, m));
  const auto rows = r0_profile(base, m, {r0_min, r0_max, config.r0_count}, make_options(config));
  emit(config, out, [&](std::ostream& os) { write_profile_csv(os, rows); });
}

void add_flags(CLI::App& app, ScenarioConfig& config) {
  app.add_option("--n", config.n, "Population size N")->check(CLI::PositiveNumber);
  auto* gamma = app.add_option("--gamma", config.gamma, "Recovery rate")->check(CLI::PositiveNumber);
  app.add_option("--infectious-period", config.infectious_period, "Sets gamma = 1 / period")
      ->check(CLI::PositiveNumber)
      ->excludes(gamma);
  app.add_option("--r0", config.r0, "Basic reproduction number")->check(CLI::PositiveNumber);
  app.add_option("--s0", config.s0, "Initial susceptible")->check(CLI::NonNegativeNumber);
  app.add_option("--i0", config.i0, "Initial infected")->check(CLI::NonNegativeNumber);
  app.add_option("--rr0", config.rr0, "Initial removed")->check(CLI::NonNegativeNumber);
  app.add_option("--m", config.m, "Threshold M")->check(CLI::PositiveNumber);
  app.add_option("--dt", config.dt, "RK4 step (default 1e-3 / gamma)")->check(CLI::PositiveNumber);
  app.add_option("--t-max", config.t_max, "Integration horizon (default 60 / gamma)")
      ->check(CLI::PositiveNumber);
  app.add_option("--panels", config.panels, "Initial Simpson panels for Q5")
      ->check(CLI::Range(std::size_t{2}, std::size_t{1} << 20));
  app.add_option("--out", config.out, "Output file (default stdout)");
  app.add_option("--r0-min", config.r0_min, "Sweep/profile R0 lower bound");
  app.add_option("--r0-max", config.r0_max, "Sweep/profile R0 upper bound");
  app.add_option("--r0-count", config.r0_count, "Sweep/profile R0 samples")
      ->check(CLI::PositiveNumber);
  app.add_option("--m-min", config.m_min, "Sweep M lower bound");
  app.add_option("--m-max", config.m_max, "Sweep M upper bound");
  app.add_option("--m-count", config.m_count, "Sweep M samples")->check(CLI::PositiveNumber);
  app.add_option("--workers", config.workers, "Sweep threads (default: hardware concurrency)");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  ScenarioConfig config;
  CLI::App app{"Threshold exceedance analysis for the SIR epidemic model", "sirthreshold"};
  app.set_config("--config", "", "Flat key=value file; keys are flag names");
  add_flags(app, config);
  app.require_subcommand(1);
  auto* analyze_cmd = app.add_subcommand("analyze", "Critical R0, peak and quantifiers as JSON");
  auto* sweep_cmd = app.add_subcommand("sweep", "Quantifiers over an (R0, M) grid as CSV");
  auto* curve_cmd = app.add_subcommand("curve", "RK4 trajectory as t,S,I,R CSV");
  auto* profile_cmd = app.add_subcommand("profile", "Quantifiers and derivatives along R0");
  for (auto* sub : {analyze_cmd, sweep_cmd, curve_cmd, profile_cmd}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  }

  try {
    if (*analyze_cmd) cmd_analyze(config, out);
    if (*sweep_cmd) cmd_sweep(config, out);
    if (*curve_cmd) cmd_curve(config, out);
    if (*profile_cmd) cmd_profile(config, out);
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitOk;
}

}  // namespace sirthreshold::cli
