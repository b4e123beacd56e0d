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

#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

#include <Eigen/Core>

namespace sirthreshold {

/// Model constants. beta is always derived as gamma * r0 / N.
class SirParams {
 public:
  SirParams(double population, double gamma, double r0);

  static SirParams from_beta(double population, double gamma, double beta);

  double population() const { return population_; }
  double gamma() const { return gamma_; }
  double r0() const { return r0_; }
  double beta() const { return gamma_ * r0_ / population_; }

  SirParams with_r0(double r0) const { return {population_, gamma_, r0}; }

 private:
  double population_;
  double gamma_;
  double r0_;
};

struct SirState {
  double t = 0.0;
  double s = 0.0;
  double i = 0.0;
  double r = 0.0;

  Eigen::Vector3d compartments() const { return {s, i, r}; }
  double total() const { return s + i + r; }
};

struct Compartments {
  double s = 0.0;
  double i = 0.0;
  double r = 0.0;
};

/// Right-hand side of the SIR system; ds + di + dr = 0.
Compartments derivatives(const SirParams& params, const SirState& state);

/// One classical Runge-Kutta step of length h.
SirState rk4_step(const SirParams& params, const SirState& state, double h);

double default_step(const SirParams& params);
double default_horizon(const SirParams& params);

/// Fixed-step RK4 samples, strictly increasing in t. The last step is
/// shortened so the final sample lands on t_max.
class Trajectory {
 public:
  Trajectory(std::vector<SirState> states, double step);

  std::span<const SirState> states() const { return states_; }
  std::size_t size() const { return states_.size(); }
  const SirState& operator[](std::size_t k) const { return states_[k]; }
  const SirState& front() const { return states_.front(); }
  const SirState& back() const { return states_.back(); }
  double step() const { return step_; }

  /// Index of the largest sampled I.
  std::size_t peak_index() const;
  double max_infected() const { return states_[peak_index()].i; }

  /// `t,S,I,R` with 17 significant digits.
  void write_csv(std::ostream& out) const;

 private:
  std::vector<SirState> states_;
  double step_;
};

Trajectory integrate(const SirParams& params, const SirState& init, double t_max, double dt);

/// The extended solution curve
///   S(u) = x0 u,  I(u) = (N/R0) ln u - x0 u + N,  R(u) = -(N/R0) ln u,
/// with the epidemic traversed from u0 down to u_inf.
struct ParametricCurve {
  double x0 = 0.0;
  double u0 = 0.0;
  double u_inf = 0.0;
  double u_star = 0.0;
  double removed_final = 0.0;
};

ParametricCurve build_curve(const SirParams& params, const SirState& init);

Compartments parametric_state(const ParametricCurve& curve, const SirParams& params, double u);

/// Parameter value of a physical state: u = exp(-(R0/N) R).
double curve_parameter(const SirParams& params, double removed);

}  // namespace sirthreshold
