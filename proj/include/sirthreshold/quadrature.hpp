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

#include <cmath>
#include <cstddef>

#include "sirthreshold/errors.hpp"

namespace sirthreshold::quadrature {

/// Composite Simpson rule on [a, b] with `panels` subintervals (rounded up to
/// an even count).
template <class F>
double simpson(F&& f, double a, double b, std::size_t panels) {
  if (panels < 2) panels = 2;
  if (panels % 2 != 0) ++panels;
  const double h = (b - a) / static_cast<double>(panels);
  double odd = 0.0;
  double even = 0.0;
  for (std::size_t k = 1; k < panels; ++k) {
    const double x = a + h * static_cast<double>(k);
    (k % 2 == 1 ? odd : even) += f(x);
  }
  return h / 3.0 * (f(a) + 4.0 * odd + 2.0 * even + f(b));
}

struct SimpsonResult {
  double value = 0.0;
  std::size_t panels = 0;
  bool converged = false;
};

/// Simpson with panel doubling until two successive estimates agree to
/// `relative_tolerance`, or `max_panels` is reached.
template <class F>
SimpsonResult simpson_doubling(F&& f, double a, double b, std::size_t initial_panels = 2048,
                               double relative_tolerance = 1e-9,
                               std::size_t max_panels = std::size_t{1} << 20) {
  if (initial_panels < 2) throw InvalidArgument("simpson_doubling: need at least 2 panels");
  SimpsonResult result;
  result.panels = initial_panels;
  result.value = simpson(f, a, b, result.panels);
  while (result.panels < max_panels) {
    const std::size_t panels = result.panels * 2;
    const double refined = simpson(f, a, b, panels);
    const double change = std::abs(refined - result.value);
    result.value = refined;
    result.panels = panels;
    if (change <= relative_tolerance * std::abs(refined)) {
      result.converged = true;
      break;
    }
  }
  return result;
}

}  // namespace sirthreshold::quadrature
