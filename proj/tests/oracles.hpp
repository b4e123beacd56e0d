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

// Test-only reference computations. Nothing here calls into the library's
// Lambert W, integrator or quadrature paths.

#include <cmath>
#include <cstddef>

namespace sirthreshold::oracle {

/// Bisection for a sign change of f on [lo, hi].
template <class F>
double bisect(F&& f, double lo, double hi, int iterations = 200) {
  double f_lo = f(lo);
  for (int k = 0; k < iterations; ++k) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double f_mid = f(mid);
    if ((f_mid < 0) == (f_lo < 0)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

/// Plain composite Simpson, written independently of the library version.
template <class F>
double simpson(F&& f, double a, double b, std::size_t panels) {
  const double h = (b - a) / static_cast<double>(panels);
  double sum = f(a) + f(b);
  for (std::size_t k = 1; k < panels; ++k) {
    sum += (k % 2 ? 4.0 : 2.0) * f(a + h * static_cast<double>(k));
  }
  return sum * h / 3.0;
}

/// Epidemic peak by the closed form, used as a root-finding target.
inline double peak_formula(double n, double s0, double rr0, double r0) {
  return n / r0 * (std::log(n / (r0 * s0)) - 1.0) - rr0 + n;
}

/// I(u) on the extended curve.
inline double infected_on_curve(double n, double r0, double x0, double u) {
  return n / r0 * std::log(u) - x0 * u + n;
}

}  // namespace sirthreshold::oracle
