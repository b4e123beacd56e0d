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

#include "sirthreshold/threshold.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include <Eigen/Core>

#include "sirthreshold/errors.hpp"
#include "sirthreshold/lambert_w.hpp"
#include "sirthreshold/quadrature.hpp"

namespace sirthreshold {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// Peaks closer than this (relative to N) to M are treated as touching it.
constexpr double kTangencyTolerance = 1e-12;

void require_threshold_window(const ThresholdProblem& problem) {
  const double m = problem.threshold();
  const SirState& init = problem.init();
  if (m <= init.i) {
    throw InvalidThreshold("threshold M = " + std::to_string(m) + " must exceed I(0) = " +
                           std::to_string(init.i) + " (M <= I(0))");
  }
  if (m >= init.s + init.i) {
    throw InvalidThreshold("threshold M = " + std::to_string(m) + " must be below S(0) + I(0) = " +
                           std::to_string(init.s + init.i));
  }
}

// Grid location of the excursion above M and the refined crossing times.
struct TimeExcursion {
  bool found = false;
  std::size_t first_above = 0;  // first sample with I >= M
  std::size_t last_above = 0;   // last sample with I >= M
  double t_i = 0.0;
  double t_f = 0.0;
};

// Bisection on the length of one RK4 step from `left` for the point where I
// crosses M. `rising` selects the sign convention of the bracket.
double refine_crossing(const SirParams& params, const SirState& left, double t_right, double m,
                       bool rising) {
  double lo = 0.0;
  double hi = t_right - left.t;
  for (int iteration = 0; iteration < 100; ++iteration) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const bool above = rk4_step(params, left, mid).i >= m;
    if (above == rising) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return left.t + 0.5 * (lo + hi);
}

TimeExcursion locate_excursion(const ThresholdProblem& problem, const Trajectory& trajectory) {
  const double m = problem.threshold();
  const auto states = trajectory.states();
  TimeExcursion out;
  std::size_t k = 0;
  while (k < states.size() && states[k].i < m) ++k;
  if (k == states.size() || k == 0) return out;
  out.first_above = k;
  while (k < states.size() && states[k].i >= m) ++k;
  if (k == states.size()) {
    throw std::runtime_error("trajectory ends above the threshold; increase t_max");
  }
  out.last_above = k - 1;
  out.found = true;
  const SirParams& params = problem.params();
  out.t_i = refine_crossing(params, states[out.first_above - 1], states[out.first_above].t, m, true);
  out.t_f = refine_crossing(params, states[out.last_above], states[k].t, m, false);
  return out;
}

// Trapezoid rule over [t_i, t_f] for an integrand that vanishes at both
// crossing times; `g(k)` is its value at sample k.
template <class G>
double integrate_excursion(const Trajectory& trajectory, const TimeExcursion& excursion, G&& g) {
  const std::size_t first = excursion.first_above;
  const std::size_t last = excursion.last_above;
  double sum = 0.5 * (trajectory[first].t - excursion.t_i) * g(first);
  for (std::size_t k = first; k < last; ++k) {
    sum += 0.5 * (trajectory[k + 1].t - trajectory[k].t) * (g(k) + g(k + 1));
  }
  sum += 0.5 * (excursion.t_f - trajectory[last].t) * g(last);
  return sum;
}

}  // namespace

ThresholdProblem::ThresholdProblem(SirParams params, SirState init, double threshold)
    : params_(params), init_(init), threshold_(threshold) {
  const double n = params_.population();
  if (!std::isfinite(threshold) || !(threshold > 0.0) || !(threshold < n)) {
    throw InvalidThreshold("threshold M must satisfy 0 < M < N");
  }
  if (!(init.s > 0.0)) throw InvalidInitialCondition("S(0) must be positive");
  if (!(init.i > 0.0)) throw InvalidInitialCondition("I(0) must be positive");
  if (!(init.r >= 0.0)) throw InvalidInitialCondition("R(0) must be non-negative");
  if (std::abs(init.total() - n) > 1e-9 * n) {
    throw InvalidInitialCondition("S(0) + I(0) + R(0) must equal N");
  }
  curve_ = build_curve(params_, init_);
}

bool ThresholdProblem::peak_regime() const {
  return params_.r0() * init_.s >= params_.population() * (1.0 - 1e-12);
}

bool sufficient_condition(const ThresholdProblem& problem) {
  const double n = problem.params().population();
  const double r0 = problem.params().r0();
  const double s0 = problem.init().s;
  const double m = problem.threshold();
  if (r0 <= n / s0) return problem.init().i <= m;
  return r0 <= n / (n - m);
}

double peak_bound(const ThresholdProblem& problem) {
  const double n = problem.params().population();
  const double r0 = problem.params().r0();
  return n / r0 * (std::log(n / (r0 * problem.init().s)) - 1.0) - problem.init().r + n;
}

double i_max(const ThresholdProblem& problem) {
  if (!problem.peak_regime()) {
    throw RegimeError("closed-form peak requires R0 >= N / S(0) = " +
                      std::to_string(problem.params().population() / problem.init().s));
  }
  return peak_bound(problem);
}

double physical_peak(const ThresholdProblem& problem) {
  return problem.peak_regime() ? peak_bound(problem) : problem.init().i;
}

double critical_r0(const ThresholdProblem& problem) {
  require_threshold_window(problem);
  const double n = problem.params().population();
  const double shifted = problem.threshold() - n + problem.init().r;
  const double w = lambert_w(Branch::Lower, shifted / (problem.init().s * std::numbers::e));
  return n * w / shifted;
}

CrossingPoints crossings(const ThresholdProblem& problem, const Trajectory& trajectory) {
  require_threshold_window(problem);
  CrossingPoints out{kNaN, kNaN, kNaN, kNaN, false};
  if (!problem.peak_regime()) return out;

  const double n = problem.params().population();
  const double m = problem.threshold();
  const ParametricCurve& curve = problem.curve();
  const double excess = peak_bound(problem) - m;
  if (excess < -kTangencyTolerance * n) return out;

  const double peak_time = trajectory[trajectory.peak_index()].t;
  auto touch = [&] {
    out.u_i = out.u_f = curve.u_star;
    out.t_i = out.t_f = peak_time;
    return out;
  };
  if (excess <= kTangencyTolerance * n) return touch();

  const double r0 = problem.params().r0();
  const auto roots = solve_log_linear(r0 * curve.x0 / n, r0 / n * (m - n));
  if (roots.count < 2) return touch();
  out.u_f = roots.roots[0];
  out.u_i = roots.roots[1];
  out.exceeds = true;

  const TimeExcursion excursion = locate_excursion(problem, trajectory);
  if (excursion.found) {
    out.t_i = excursion.t_i;
    out.t_f = excursion.t_f;
  } else {
    // Peak above M by less than the grid resolves.
    out.t_i = out.t_f = peak_time;
  }
  return out;
}

double q4_closed_form(const ThresholdProblem& problem, double u_f, double u_i) {
  const double n = problem.params().population();
  const double scale = n / problem.params().r0();
  const double x0 = problem.curve().x0;
  const double m = problem.threshold();
  auto antiderivative = [&](double u) {
    return scale * (u * std::log(u) - u) - 0.5 * x0 * u * u + (n - m) * u;
  };
  return antiderivative(u_i) - antiderivative(u_f);
}

double q5_integrand(const ThresholdProblem& problem, double u) {
  const double c = problem.params().population() / (problem.params().r0() * u);
  const double x0 = problem.curve().x0;
  const double infected = parametric_state(problem.curve(), problem.params(), u).i;
  return (infected - problem.threshold()) * std::sqrt(2.0 * (x0 * x0 + c * (c - x0)));
}

Trajectory quantifier_trajectory(const ThresholdProblem& problem,
                                 const QuantifierOptions& options) {
  const SirParams& params = problem.params();
  const double dt = options.dt > 0.0 ? options.dt : default_step(params);
  const double t_max = options.t_max > 0.0 ? options.t_max : default_horizon(params);
  return integrate(params, problem.init(), problem.init().t + t_max, dt);
}

QuantifierSet quantifiers(const ThresholdProblem& problem, const QuantifierOptions& options) {
  require_threshold_window(problem);
  if (!problem.peak_regime()) (void)i_max(problem);
  return quantifiers(problem, quantifier_trajectory(problem, options), options);
}

QuantifierSet quantifiers(const ThresholdProblem& problem, const Trajectory& trajectory,
                          const QuantifierOptions& options) {
  QuantifierSet out;
  out.r0_critical = critical_r0(problem);
  out.i_max = i_max(problem);
  out.q1 = problem.params().r0() - out.r0_critical;
  out.q2 = out.i_max - problem.threshold();
  out.crossing = crossings(problem, trajectory);
  if (!out.crossing.exceeds) return out;

  const double m = problem.threshold();
  const TimeExcursion excursion = locate_excursion(problem, trajectory);
  if (excursion.found) {
    out.q3 = integrate_excursion(trajectory, excursion,
                                 [&](std::size_t k) { return trajectory[k].i - m; });
  }
  out.q4 = q4_closed_form(problem, out.crossing.u_f, out.crossing.u_i);
  out.q5 = quadrature::simpson_doubling([&](double u) { return q5_integrand(problem, u); },
                                        out.crossing.u_f, out.crossing.u_i, options.panels)
               .value;
  return out;
}

double q5_time_parametrization(const ThresholdProblem& problem, const Trajectory& trajectory) {
  const CrossingPoints crossing = crossings(problem, trajectory);
  if (!crossing.exceeds) return 0.0;
  const TimeExcursion excursion = locate_excursion(problem, trajectory);
  if (!excursion.found) return 0.0;
  const double m = problem.threshold();
  return integrate_excursion(trajectory, excursion, [&](std::size_t k) {
    const Compartments d = derivatives(problem.params(), trajectory[k]);
    return (trajectory[k].i - m) * Eigen::Vector3d(d.s, d.i, d.r).norm();
  });
}

}  // namespace sirthreshold
