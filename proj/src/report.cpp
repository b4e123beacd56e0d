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

#include "sirthreshold/report.hpp"

namespace sirthreshold {

AnalysisReport analyze(const ThresholdProblem& problem, const QuantifierOptions& options) {
  AnalysisReport report;
  report.r0 = problem.params().r0();
  report.gamma = problem.params().gamma();
  report.n = problem.params().population();
  report.s0 = problem.init().s;
  report.i0 = problem.init().i;
  report.rr0 = problem.init().r;
  report.m = problem.threshold();
  report.quantifiers = quantifiers(problem, options);
  return report;
}

nlohmann::ordered_json to_json(const AnalysisReport& report) {
  const QuantifierSet& q = report.quantifiers;
  const CrossingPoints& c = q.crossing;
  auto crossing_field = [&](double value) -> nlohmann::ordered_json {
    if (!c.exceeds) return nullptr;
    return value;
  };
  nlohmann::ordered_json j;
  j["r0"] = report.r0;
  j["gamma"] = report.gamma;
  j["n"] = report.n;
  j["s0"] = report.s0;
  j["i0"] = report.i0;
  j["rr0"] = report.rr0;
  j["m"] = report.m;
  j["r0_critical"] = q.r0_critical;
  j["i_max"] = q.i_max;
  j["exceeds"] = c.exceeds;
  j["u_i"] = crossing_field(c.u_i);
  j["u_f"] = crossing_field(c.u_f);
  j["t_i"] = crossing_field(c.t_i);
  j["t_f"] = crossing_field(c.t_f);
  j["q1"] = q.q1;
  j["q2"] = q.q2;
  j["q3"] = q.q3;
  j["q4"] = q.q4;
  j["q5"] = q.q5;
  return j;
}

}  // namespace sirthreshold
