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

#include <array>
#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

#include "sirthreshold/threshold.hpp"

namespace sirthreshold {

/// Evenly spaced samples min, ..., max. A single sample requires min == max.
struct AxisRange {
  double min = 0.0;
  double max = 0.0;
  std::size_t count = 2;

  double at(std::size_t k) const;
  void validate(const char* name) const;
};

/// Scenario fields shared by every cell of a sweep or profile.
struct BaseScenario {
  double n = 100.0;
  double gamma = 1.0 / 3.0;
  double s0 = 99.0;
  double i0 = 1.0;
  double rr0 = 0.0;

  ThresholdProblem problem(double r0, double m) const;
};

struct SweepGrid {
  AxisRange r0;
  AxisRange m;
  BaseScenario base;
  QuantifierOptions options;

  /// Throws InvalidRange unless every M lies in (I(0), S(0) + I(0)).
  void validate() const;
};

/// One heat-map cell. Quantifiers are NaN where R0 < N / S(0).
struct SweepCell {
  double r0 = 0.0;
  double m = 0.0;
  std::array<double, 5> q{};
};

/// Row-major over (r0, m). Rows are computed independently on up to
/// `workers` threads; the result does not depend on the worker count.
std::vector<SweepCell> sweep(const SweepGrid& grid, unsigned workers = 1);

void write_sweep_csv(std::ostream& out, std::span<const SweepCell> cells);

struct ProfileRow {
  double r0 = 0.0;
  std::array<double, 5> q{};
  std::array<double, 5> dq{};  ///< dQ/dR0 by finite differences on the grid
  std::array<double, 5> nq{};  ///< Q / Q(last sample)
  std::array<double, 5> lq{};  ///< dQ / Q, NaN where Q <= 1e-12
};

/// Quantifier profile along R0 at fixed M. The range must start at or above
/// R0* and hold at least three samples.
std::vector<ProfileRow> r0_profile(const BaseScenario& base, double m, const AxisRange& r0_range,
                                   const QuantifierOptions& options = {});

void write_profile_csv(std::ostream& out, std::span<const ProfileRow> rows);

}  // namespace sirthreshold
