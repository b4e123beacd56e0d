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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "sirthreshold/lambert_w.hpp"
#include "sirthreshold/sweep.hpp"
#include "sirthreshold/threshold.hpp"

using namespace sirthreshold;

namespace {

constexpr double kN = 100.0;
constexpr double kGamma = 1.0 / 3.0;

struct Outcome {
  bool pass = false;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

ThresholdProblem reference(double r0, double m = 10.0) {
  return {SirParams(kN, kGamma, r0), SirState{0.0, 99.0, 1.0, 0.0}, m};
}

// Random scenarios over N = 100, varying gamma, initial state and M.
class ScenarioGenerator {
 public:
  explicit ScenarioGenerator(unsigned seed) : rng_(seed) {}

  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng_);
  }

  ThresholdProblem any() {
    const double rr0 = uniform(0.0, 10.0);
    const double i0 = uniform(0.1, 3.0);
    const double s0 = kN - rr0 - i0;
    const double r0 = uniform(kN / s0 + 0.05, 8.0);
    const double m = uniform(i0 + 0.5, s0 + i0 - 5.0);
    return {SirParams(kN, uniform(0.1, 1.0), r0), SirState{0.0, s0, i0, rr0}, m};
  }

  // A scenario whose peak clearly exceeds M: R0 at least 5% above R0*.
  ThresholdProblem exceeding() {
    for (;;) {
      const ThresholdProblem p = any();
      const double floor = 1.05 * critical_r0(p);
      if (floor >= 8.0) continue;
      return p.with_r0(uniform(floor, 8.0));
    }
  }

 private:
  std::mt19937_64 rng_;
};

Outcome example_one() {
  const auto start = std::chrono::steady_clock::now();
  const double r0c = critical_r0(reference(2.5));
  const double elapsed = seconds_since(start);
  const double oracle = oracle::bisect(
      [](double r0) { return oracle::peak_formula(kN, 99.0, 0.0, r0) - 10.0; }, kN / 99.0, 10.0);
  const double residual = std::abs(i_max(reference(r0c)) - 10.0);
  const bool pass = r0c >= 1.6 && r0c <= 1.75 && std::abs(r0c - oracle) <= 1e-10 &&
                    residual <= 1e-7 && elapsed < 0.010;
  char buf[256];
  std::snprintf(buf, sizeof buf, "R0* = %.12f (bisection %.12f), |Imax(R0*) - M| = %.2e, %.3f ms",
                r0c, oracle, residual, elapsed * 1e3);
  return {pass, buf};
}

Outcome criticality_bracketing() {
  const auto start = std::chrono::steady_clock::now();
  const double r0c = critical_r0(reference(2.5));
  const double above = quantifier_trajectory(reference(1.1 * r0c)).max_infected();
  const double below = quantifier_trajectory(reference(0.9 * r0c)).max_infected();
  const double elapsed = seconds_since(start);
  char buf[256];
  std::snprintf(buf, sizeof buf, "ODE peak %.6f at 1.1 R0*, %.6f at 0.9 R0*, %.3f s", above, below,
                elapsed);
  return {above > 10.0 && below < 10.0 && elapsed < 1.0, buf};
}

Outcome peak_against_ode() {
  const auto start = std::chrono::steady_clock::now();
  ScenarioGenerator gen(1001);
  double worst = 0.0;
  for (int k = 0; k < 50; ++k) {
    const ThresholdProblem p = gen.any();
    const SirParams& params = p.params();
    // Long horizon so slow epidemics near R0 = N/S(0) still reach their peak.
    const Trajectory traj =
        integrate(params, p.init(), 200.0 / params.gamma(), default_step(params));
    worst = std::max(worst, std::abs(i_max(p) - traj.max_infected()));
  }
  const double elapsed = seconds_since(start);
  char buf[256];
  std::snprintf(buf, sizeof buf, "max |Imax - ODE max| = %.3e (bound %.1e), %.2f s", worst,
                1e-4 * kN, elapsed);
  return {worst <= 1e-4 * kN && elapsed < 30.0, buf};
}

Outcome crossing_residuals() {
  ScenarioGenerator gen(2002);
  double worst = 0.0;
  bool ordered = true;
  int exceeding = 0;
  for (int k = 0; k < 100; ++k) {
    const ThresholdProblem p = k % 2 ? gen.any() : gen.exceeding();
    const CrossingPoints c = crossings(p, quantifier_trajectory(p));
    if (!c.exceeds) continue;
    ++exceeding;
    for (double u : {c.u_i, c.u_f}) {
      const double i = parametric_state(p.curve(), p.params(), u).i;
      worst = std::max(worst, std::abs(i - p.threshold()));
    }
    ordered = ordered && c.u_f <= p.curve().u_star && p.curve().u_star <= c.u_i;
  }
  char buf[256];
  std::snprintf(buf, sizeof buf, "%d exceeding scenarios, max |I(u) - M| = %.3e, ordering %s",
                exceeding, worst, ordered ? "ok" : "violated");
  return {exceeding > 0 && worst <= 1e-9 * kN && ordered, buf};
}

Outcome q4_against_quadrature() {
  ScenarioGenerator gen(3003);
  double worst = 0.0;
  for (int k = 0; k < 25; ++k) {
    const ThresholdProblem p = gen.exceeding();
    const QuantifierSet q = quantifiers(p);
    const double n = p.params().population();
    const double r0 = p.params().r0();
    const double x0 = p.curve().x0;
    const double m = p.threshold();
    const double numeric = oracle::simpson(
        [&](double u) { return oracle::infected_on_curve(n, r0, x0, u) - m; }, q.crossing.u_f,
        q.crossing.u_i, 10000);
    worst = std::max(worst, std::abs(q.q4 - numeric) / std::abs(numeric));
  }
  char buf[128];
  std::snprintf(buf, sizeof buf, "max relative difference %.3e (bound 1e-8)", worst);
  return {worst <= 1e-8, buf};
}

Outcome q5_invariance() {
  ScenarioGenerator gen(4004);
  double worst = 0.0;
  for (int k = 0; k < 25; ++k) {
    const ThresholdProblem p = gen.exceeding();
    const Trajectory traj = quantifier_trajectory(p);
    const double in_u = quantifiers(p, traj).q5;
    const double in_t = q5_time_parametrization(p, traj);
    worst = std::max(worst, std::abs(in_u - in_t) / std::abs(in_u));
  }
  char buf[128];
  std::snprintf(buf, sizeof buf, "max relative difference %.3e (bound 1e-3)", worst);
  return {worst <= 1e-3, buf};
}

Outcome lambert_identities() {
  constexpr int kPoints = 10000;
  constexpr double kInvE = 1.0 / std::numbers::e;
  double worst = 0.0;
  int near_branch_point = 0;
  auto check = [&](Branch branch, double x) {
    const double w = lambert_w(branch, x);
    const double scaled = std::abs(w * std::exp(w) - x) / std::max(1.0, std::abs(x));
    worst = std::max(worst, scaled);
    if (std::abs(x + kInvE) <= 1e-9) ++near_branch_point;
    if (branch == Branch::Principal ? w < -1.0 : w > -1.0) worst = INFINITY;
  };
  for (int k = 0; k < kPoints; ++k) {
    const double t = static_cast<double>(k) / (kPoints - 1);
    // Principal: half the points approach -1/e from above, half span (1e-12, 1e12).
    if (k % 2 == 0) {
      check(Branch::Principal, -kInvE + std::pow(10.0, -15.0 + 14.5 * t));
    } else {
      check(Branch::Principal, std::pow(10.0, -12.0 + 24.0 * t));
    }
    // Lower: distance from -1/e and distance from 0, both log-spaced.
    if (k % 2 == 0) {
      check(Branch::Lower, -kInvE + std::pow(10.0, -15.0 + 14.6 * t) * kInvE);
    } else {
      check(Branch::Lower, -kInvE * std::pow(10.0, -300.0 + 299.99 * t));
    }
  }
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "max |W e^W - x| / max(1,|x|) = %.3e over %d points, %d within 1e-9 of -1/e",
                worst, 2 * kPoints, near_branch_point);
  return {worst <= 1e-12 && near_branch_point > 0, buf};
}

SweepGrid figure_five_grid() {
  SweepGrid grid;
  grid.r0 = {1.8, 3.0, 25};   // step 0.05
  grid.m = {1.25, 12.0, 44};  // step 0.25
  return grid;
}

Outcome heat_map_monotonicity() {
  const SweepGrid grid = figure_five_grid();
  const auto cells = sweep(grid, 4);
  const std::size_t cols = grid.m.count;
  int violations = 0;
  for (std::size_t row = 0; row < grid.r0.count; ++row) {
    for (std::size_t col = 0; col < cols; ++col) {
      const SweepCell& cell = cells[row * cols + col];
      for (std::size_t j = 0; j < 5; ++j) {
        if (std::isnan(cell.q[j])) ++violations;
        if (row + 1 < grid.r0.count && cells[(row + 1) * cols + col].q[j] < cell.q[j]) ++violations;
        if (col + 1 < cols && cells[row * cols + col + 1].q[j] > cell.q[j]) ++violations;
      }
    }
  }
  char buf[128];
  std::snprintf(buf, sizeof buf, "%zu cells, %d monotonicity violations", cells.size(),
                violations);
  return {violations == 0, buf};
}

Outcome unit_slope_q1() {
  const BaseScenario base;
  const double r0c = critical_r0(base.problem(2.5, 10.0));
  const auto rows = r0_profile(base, 10.0, {r0c, 10.0, 81});
  double worst = 0.0;
  for (const auto& row : rows) worst = std::max(worst, std::abs(row.dq[0] - 1.0));
  char buf[128];
  std::snprintf(buf, sizeof buf, "max |dQ1/dR0 - 1| = %.3e (bound 1e-12)", worst);
  return {worst <= 1e-12, buf};
}

Outcome q2_sensitivity_loss() {
  const BaseScenario base;
  // Step 0.1; R0 = 2 is sample 1 (central difference), R0 = 10 the last sample.
  const auto rows = r0_profile(base, 10.0, {1.9, 10.0, 82});
  const double at_two = rows[1].dq[1];
  const double at_ten = rows.back().dq[1];
  const double ratio = at_ten / at_two;
  char buf[160];
  std::snprintf(buf, sizeof buf, "dQ2/dR0 = %.4f at R0=%.2f, %.4f at R0=%.2f, ratio %.2f%% (bound 5%%)",
                at_two, rows[1].r0, at_ten, rows.back().r0, 100.0 * ratio);
  return {ratio < 0.05, buf};
}

Outcome conservation_and_determinism() {
  ScenarioGenerator gen(5005);
  double drift = 0.0;
  for (int k = 0; k < 10; ++k) {
    const ThresholdProblem p = gen.any();
    const Trajectory traj = quantifier_trajectory(p);
    for (const auto& x : traj.states()) drift = std::max(drift, std::abs(x.total() - kN));
  }
  SweepGrid grid;
  grid.r0 = {1.8, 3.0, 7};
  grid.m = {2.0, 12.0, 6};
  const auto one = sweep(grid, 1);
  bool identical = true;
  for (unsigned workers : {2u, 5u, 16u}) {
    const auto many = sweep(grid, workers);
    identical = identical && many.size() == one.size() &&
                std::memcmp(many.data(), one.data(), one.size() * sizeof(SweepCell)) == 0;
  }
  char buf[128];
  std::snprintf(buf, sizeof buf, "max drift %.3e (bound %.1e), sweeps %s", drift, 1e-9 * kN,
                identical ? "bitwise identical" : "differ");
  return {drift <= 1e-9 * kN && identical, buf};
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {"1  Example 1 critical R0", example_one},
      {"2  criticality bracketing", criticality_bracketing},
      {"3  closed-form peak vs RK4", peak_against_ode},
      {"4  crossing residuals", crossing_residuals},
      {"5  Q4 closed form vs Simpson", q4_against_quadrature},
      {"6  Q5 parametrization invariance", q5_invariance},
      {"7  Lambert W identities", lambert_identities},
      {"8  heat-map monotonicity", heat_map_monotonicity},
      {"9a dQ1/dR0 = 1", unit_slope_q1},
      {"9b dQ2/dR0 sensitivity loss", q2_sensitivity_loss},
      {"10 conservation and determinism", conservation_and_determinism},
  };
  int failures = 0;
  for (const auto& criterion : criteria) {
    Outcome outcome;
    try {
      outcome = criterion.run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    if (!outcome.pass) ++failures;
    std::printf("[%s] %-34s %s\n", outcome.pass ? "PASS" : "FAIL", criterion.name,
                outcome.detail.c_str());
  }
  std::printf("%zu criteria, %d failed\n", criteria.size(), failures);
  return failures == 0 ? 0 : 1;
}
