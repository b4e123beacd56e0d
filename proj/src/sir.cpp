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

#include "sirthreshold/sir.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <ostream>
#include <string>

#include "sirthreshold/errors.hpp"
#include "sirthreshold/lambert_w.hpp"

namespace sirthreshold {

namespace {

bool positive_finite(double x) { return std::isfinite(x) && x > 0.0; }

Eigen::Vector3d rate(const SirParams& params, const Eigen::Vector3d& y) {
  const double infection = params.gamma() * params.r0() * y[0] * y[1] / params.population();
  const double recovery = params.gamma() * y[1];
  return {-infection, infection - recovery, recovery};
}

}  // namespace

SirParams::SirParams(double population, double gamma, double r0)
    : population_(population), gamma_(gamma), r0_(r0) {
  if (!positive_finite(population)) throw InvalidArgument("population must be positive");
  if (!positive_finite(gamma)) throw InvalidArgument("gamma must be positive");
  if (!positive_finite(r0) || r0 <= population * std::numeric_limits<double>::epsilon()) {
    throw InvalidArgument("r0 must be positive");
  }
}

SirParams SirParams::from_beta(double population, double gamma, double beta) {
  if (!positive_finite(population) || !positive_finite(gamma)) {
    throw InvalidArgument("population and gamma must be positive");
  }
  return {population, gamma, beta * population / gamma};
}

Compartments derivatives(const SirParams& params, const SirState& state) {
  const double infection = params.gamma() * params.r0() * state.s * state.i / params.population();
  const double recovery = params.gamma() * state.i;
  return {-infection, infection - recovery, recovery};
}

SirState rk4_step(const SirParams& params, const SirState& state, double h) {
  const Eigen::Vector3d y = state.compartments();
  const Eigen::Vector3d k1 = rate(params, y);
  const Eigen::Vector3d k2 = rate(params, y + 0.5 * h * k1);
  const Eigen::Vector3d k3 = rate(params, y + 0.5 * h * k2);
  const Eigen::Vector3d k4 = rate(params, y + h * k3);
  const Eigen::Vector3d next = y + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  return {state.t + h, next[0], next[1], next[2]};
}

double default_step(const SirParams& params) { return 1e-3 / params.gamma(); }
double default_horizon(const SirParams& params) { return 60.0 / params.gamma(); }

Trajectory::Trajectory(std::vector<SirState> states, double step)
    : states_(std::move(states)), step_(step) {
  if (states_.empty()) throw InvalidArgument("trajectory needs at least one state");
}

std::size_t Trajectory::peak_index() const {
  const auto it = std::max_element(states_.begin(), states_.end(),
                                   [](const SirState& a, const SirState& b) { return a.i < b.i; });
  return static_cast<std::size_t>(it - states_.begin());
}

void Trajectory::write_csv(std::ostream& out) const {
  const auto flags = out.flags();
  const auto precision = out.precision();
  out << "t,S,I,R\n" << std::setprecision(17);
  for (const auto& x : states_) out << x.t << ',' << x.s << ',' << x.i << ',' << x.r << '\n';
  out.flags(flags);
  out.precision(precision);
}

Trajectory integrate(const SirParams& params, const SirState& init, double t_max, double dt) {
  if (!(dt > 0.0) || !std::isfinite(dt)) throw InvalidArgument("dt must be positive");
  if (!(t_max > init.t) || !std::isfinite(t_max)) {
    throw InvalidArgument("t_max must exceed the initial time");
  }
  if (!(init.s >= 0.0) || !(init.i >= 0.0) || !(init.r >= 0.0)) {
    throw InvalidArgument("initial compartments must be non-negative");
  }
  const double n = params.population();
  if (std::abs(init.total() - n) > 1e-9 * n) {
    throw InvalidArgument("initial compartments must sum to the population");
  }

  const double span = t_max - init.t;
  const auto steps = static_cast<std::size_t>(std::ceil(span / dt - 1e-9));
  std::vector<SirState> states;
  states.reserve(steps + 1);
  states.push_back(init);
  for (std::size_t k = 1; k <= steps; ++k) {
    const double t_next = k == steps ? t_max : init.t + dt * static_cast<double>(k);
    SirState next = rk4_step(params, states.back(), t_next - states.back().t);
    next.t = t_next;
    states.push_back(next);
  }
  return Trajectory(std::move(states), dt);
}

ParametricCurve build_curve(const SirParams& params, const SirState& init) {
  if (!(init.s > 0.0)) throw InvalidInitialCondition("S(0) must be positive");
  if (!(init.i > 0.0)) throw InvalidInitialCondition("I(0) must be positive");
  if (!(init.r >= 0.0)) throw InvalidInitialCondition("R(0) must be non-negative");
  const double n = params.population();
  const double r0 = params.r0();

  ParametricCurve curve;
  curve.x0 = init.s * std::exp(r0 / n * init.r);
  curve.u0 = std::exp(-r0 / n * init.r);
  curve.u_star = n / (r0 * curve.x0);

  // I(u) = 0  <=>  ln u = (R0 x0 / N) u - R0; the root below u* is the burnout point.
  const auto roots = solve_log_linear(r0 * curve.x0 / n, -r0);
  if (roots.count == 0) throw InvalidInitialCondition("infected curve never reaches zero");
  curve.u_inf = roots.roots[0];
  curve.removed_final = -n / r0 * roots.log_roots[0];
  return curve;
}

Compartments parametric_state(const ParametricCurve& curve, const SirParams& params, double u) {
  if (!(u > 0.0)) throw DomainError("curve parameter u must be positive");
  const double scale = params.population() / params.r0();
  const double log_u = std::log(u);
  const double s = curve.x0 * u;
  const double r = -scale * log_u;
  return {s, scale * log_u - s + params.population(), r};
}

double curve_parameter(const SirParams& params, double removed) {
  return std::exp(-params.r0() / params.population() * removed);
}

}  // namespace sirthreshold
