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

#include "sirthreshold/sir.hpp"

namespace sirthreshold {

/// An SIR scenario together with a capacity threshold M, 0 < M < N.
class ThresholdProblem {
 public:
  ThresholdProblem(SirParams params, SirState init, double threshold);

  const SirParams& params() const { return params_; }
  const SirState& init() const { return init_; }
  double threshold() const { return threshold_; }
  const ParametricCurve& curve() const { return curve_; }

  ThresholdProblem with_r0(double r0) const { return {params_.with_r0(r0), init_, threshold_}; }
  ThresholdProblem with_threshold(double m) const { return {params_, init_, m}; }

  /// R0 >= N / S(0): the peak lies on the physical part of the curve.
  bool peak_regime() const;

 private:
  SirParams params_;
  SirState init_;
  double threshold_;
  ParametricCurve curve_;
};

/// Simple one-sided test: true guarantees the peak stays at or below M.
bool sufficient_condition(const ThresholdProblem& problem);

/// Maximum of I over the extended curve, I(u*). An upper bound on the epidemic
/// peak in every regime and equal to it when R0 >= N / S(0).
double peak_bound(const ThresholdProblem& problem);

/// Epidemic peak (N/R0)(ln(N/(R0 S(0))) - 1) - R(0) + N. Throws RegimeError
/// when R0 < N / S(0).
double i_max(const ThresholdProblem& problem);

/// Peak of the physical epidemic in either regime: i_max, or I(0) when
/// R0 < N / S(0).
double physical_peak(const ThresholdProblem& problem);

/// R0* = N W-1((M - N + R(0)) / (S(0) e)) / (M - N + R(0)), the reproduction
/// number whose peak equals M. Requires I(0) < M < S(0) + I(0).
double critical_r0(const ThresholdProblem& problem);

/// Entry and exit of the infected curve above M, in u and in t.
///
/// When the peak only touches M (within 1e-12 N) or stays below it,
/// `exceeds` is false; at a touch the u fields hold u* and the t fields the
/// sampled peak time, otherwise all four are NaN.
struct CrossingPoints {
  double u_i = 0.0;
  double u_f = 0.0;
  double t_i = 0.0;
  double t_f = 0.0;
  bool exceeds = false;
};

CrossingPoints crossings(const ThresholdProblem& problem, const Trajectory& trajectory);

struct QuantifierOptions {
  double dt = 0.0;     ///< 0 selects default_step
  double t_max = 0.0;  ///< 0 selects default_horizon
  std::size_t panels = 2048;
};

struct QuantifierSet {
  double q1 = 0.0;  ///< R0 - R0*, dimensionless
  double q2 = 0.0;  ///< I_max - M, persons
  double q3 = 0.0;  ///< integral of I - M over time, person * time
  double q4 = 0.0;  ///< integral of I - M over u, persons * u
  double q5 = 0.0;  ///< line integral of I - M along (S, I, R), persons * arc length
  double r0_critical = 0.0;
  double i_max = 0.0;
  CrossingPoints crossing;
};

/// Trajectory used for time-domain quantities under `options`.
Trajectory quantifier_trajectory(const ThresholdProblem& problem,
                                 const QuantifierOptions& options = {});

QuantifierSet quantifiers(const ThresholdProblem& problem, const QuantifierOptions& options = {});

/// Same as above on a trajectory the caller already integrated from
/// problem.init(); `options.dt` and `options.t_max` are ignored.
QuantifierSet quantifiers(const ThresholdProblem& problem, const Trajectory& trajectory,
                          const QuantifierOptions& options = {});

/// Closed-form integral of I(u) - M over [u_f, u_i].
double q4_closed_form(const ThresholdProblem& problem, double u_f, double u_i);

/// (I(u) - M) |r'(u)|, the integrand of the u-parametrized line integral.
double q5_integrand(const ThresholdProblem& problem, double u);

/// The line integral evaluated in time along the trajectory, trapezoid rule
/// with |r'(t)| from the model derivatives. Used to check that the
/// u-parametrized value does not depend on the parametrization.
double q5_time_parametrization(const ThresholdProblem& problem, const Trajectory& trajectory);

}  // namespace sirthreshold
