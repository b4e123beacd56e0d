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

#include <nlohmann/json.hpp>

#include "sirthreshold/threshold.hpp"

namespace sirthreshold {

struct AnalysisReport {
  double r0 = 0.0;
  double gamma = 0.0;
  double n = 0.0;
  double s0 = 0.0;
  double i0 = 0.0;
  double rr0 = 0.0;
  double m = 0.0;
  QuantifierSet quantifiers;
};

AnalysisReport analyze(const ThresholdProblem& problem, const QuantifierOptions& options = {});

/// Flat object {r0, gamma, n, s0, i0, rr0, m, r0_critical, i_max, exceeds,
/// u_i, u_f, t_i, t_f, q1..q5}; crossing fields are null without exceedance.
nlohmann::ordered_json to_json(const AnalysisReport& report);

}  // namespace sirthreshold
