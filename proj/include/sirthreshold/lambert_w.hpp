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

/// \file lambert_w.hpp
/// Real branches of the Lambert W function and the two logarithmic equations
/// that reduce to it:
///
///   ln u = a u + b      solved as  u = W(-a e^b) / (-a)
///   v ln v = a v + b    solved as  v = b / W(b e^-a)
///
/// W0 (Principal) is defined on [-1/e, inf) with W0 >= -1, W-1 (Lower) on
/// [-1/e, 0) with W-1 <= -1.

#include <algorithm>
#include <array>
#include <cmath>
#include <concepts>
#include <cstddef>
#include <limits>
#include <numbers>
#include <span>
#include <string>

#include "sirthreshold/errors.hpp"

namespace sirthreshold {

enum class Branch { Principal, Lower };

namespace detail {

// 1/e split into a head and tail so x + 1/e keeps its low bits near the
// branch point.
template <std::floating_point T>
struct InverseE {
  static constexpr long double exact = 0.367879441171442321595523770161460867L;
  static constexpr T hi = static_cast<T>(exact);
  static constexpr T lo = static_cast<T>(exact - static_cast<long double>(hi));
};

template <std::floating_point T>
T distance_from_branch_point(T x) {
  return (x + InverseE<T>::hi) + InverseE<T>::lo;
}

template <std::floating_point T>
constexpr T branch_slack() {
  return std::max(T(1e-15), 4 * std::numeric_limits<T>::epsilon());
}

// Expansion about x = -1/e in p = sqrt(2 (e x + 1)); p > 0 gives W0, p < 0
// gives W-1.
template <std::floating_point T>
T branch_point_series(T p) {
  constexpr T c[] = {T(-1),
                     T(1),
                     T(-1) / T(3),
                     T(11) / T(72),
                     T(-43) / T(540),
                     T(769) / T(17280),
                     T(-221) / T(8505)};
  T w = c[6];
  for (int k = 5; k >= 0; --k) w = w * p + c[k];
  return w;
}

template <std::floating_point T>
T branch_point_p(T distance) {
  return std::sqrt(2 * std::numbers::e_v<T> * distance);
}

template <std::floating_point T>
T initial_guess(Branch branch, T x, T distance) {
  if (x < T(-0.25)) {
    const T p = branch_point_p(distance);
    return branch_point_series(branch == Branch::Principal ? p : -p);
  }
  if (branch == Branch::Lower) {
    const T l1 = std::log(-x);
    const T l2 = std::log(-l1);
    return l1 - l2 + l2 / l1;
  }
  if (x <= T(0.5)) return x * (1 + x * (-1 + x * (T(1.5) - T(8) / 3 * x)));
  if (x <= T(3)) return std::log1p(x);
  const T l1 = std::log(x);
  const T l2 = std::log(l1);
  return l1 - l2 + l2 / l1;
}

// W-1(-e^L) for L < -1 without forming e^L: Newton on w + ln(-w) = L.
template <std::floating_point T>
T lower_branch_of_neg_exp(T log_magnitude) {
  T w = log_magnitude - std::log(-log_magnitude);
  for (int iteration = 0; iteration < 50; ++iteration) {
    const T step = (w + std::log(-w) - log_magnitude) / (1 + 1 / w);
    w -= step;
    if (std::abs(step) <= 4 * std::numeric_limits<T>::epsilon() * std::abs(w)) break;
  }
  return w;
}

// W0(e^L) for large L without forming e^L: Newton on w + ln(w) = L.
template <std::floating_point T>
T principal_branch_of_exp(T log_magnitude) {
  T w = log_magnitude - std::log(log_magnitude);
  for (int iteration = 0; iteration < 50; ++iteration) {
    const T step = (w + std::log(w) - log_magnitude) / (1 + 1 / w);
    w -= step;
    if (std::abs(step) <= 4 * std::numeric_limits<T>::epsilon() * std::abs(w)) break;
  }
  return w;
}

}  // namespace detail

/// Lambert W on the requested real branch.
///
/// Halley iteration on w e^w = x (at most 50 steps, stopping once
/// |dw| <= 1e-14 (1 + |w|)); within 1e-6 of the branch point the series in
/// sqrt(2 (e x + 1)) is used directly. Arguments down to 1e-15 below -1/e are
/// accepted as the branch point itself.
template <std::floating_point T>
T lambert_w(Branch branch, T x) {
  if (std::isnan(x)) throw DomainError("lambert_w: argument is NaN");
  const T distance = detail::distance_from_branch_point(x);
  if (distance < -detail::branch_slack<T>()) {
    throw DomainError("lambert_w: argument " + std::to_string(static_cast<double>(x)) +
                      " is below -1/e");
  }
  if (branch == Branch::Lower && x >= 0) {
    throw DomainError("lambert_w: lower branch requires a negative argument, got " +
                      std::to_string(static_cast<double>(x)));
  }
  if (distance <= 0) return T(-1);
  if (x == 0) return T(0);
  if (std::isinf(x)) return x;
  if (distance < T(1e-6)) {
    const T p = detail::branch_point_p(distance);
    return detail::branch_point_series(branch == Branch::Principal ? p : -p);
  }

  const T tolerance = std::max(T(1e-14), 4 * std::numeric_limits<T>::epsilon());
  T w = detail::initial_guess(branch, x, distance);
  for (int iteration = 0; iteration < 50; ++iteration) {
    // Halley on w e^w - x, divided through by e^w so large |w| cannot overflow.
    const T g = w - x * std::exp(-w);
    const T w1 = w + 1;
    const T step = g / (w1 - (w + 2) * g / (2 * w1));
    w -= step;
    if (std::abs(step) <= tolerance * (1 + std::abs(w))) break;
  }
  return branch == Branch::Principal ? std::max(w, T(-1)) : std::min(w, T(-1));
}

/// Positive roots of ln u = a u + b or v ln v = a v + b, ascending.
/// `log_roots` holds their logarithms, which stay finite when a root
/// underflows.
template <std::floating_point T>
struct LogLinearSolutions {
  std::size_t count = 0;
  std::array<T, 2> roots{};
  std::array<T, 2> log_roots{};

  std::span<const T> values() const { return {roots.data(), count}; }
};

namespace detail {

// Classifies z = W-argument: none below -1/e, a double root at -1/e, two
// roots on (-1/e, 0), one root for z > 0.
enum class RootCase { None, Double, Two, One };

template <std::floating_point T>
RootCase classify(T z) {
  if (std::isnan(z)) throw DomainError("log-linear solver: coefficient product is NaN");
  if (z > 0) return RootCase::One;
  const T distance = distance_from_branch_point(z);
  if (distance < -branch_slack<T>()) return RootCase::None;
  if (distance <= branch_slack<T>()) return RootCase::Double;
  return RootCase::Two;
}

}  // namespace detail

/// Solves ln u = a u + b for u > 0 (a != 0).
template <std::floating_point T>
LogLinearSolutions<T> solve_log_linear(T a, T b) {
  if (a == 0 || std::isnan(a) || std::isnan(b)) {
    throw InvalidArgument("solve_log_linear: a must be nonzero");
  }
  LogLinearSolutions<T> out;
  // Each root is u = W / (-a) with ln u = b - W.
  auto push = [&](T w) {
    out.roots[out.count] = w / -a;
    out.log_roots[out.count] = b - w;
    ++out.count;
  };
  const T z = -a * std::exp(b);
  const T log_magnitude = std::log(std::abs(a)) + b;
  if (std::isinf(z)) {
    if (z > 0) push(detail::principal_branch_of_exp(log_magnitude));
    return out;
  }
  if (!std::isnormal(z)) {
    // e^b underflowed; W0(z) is z to working precision.
    push(z);
    if (a > 0) push(detail::lower_branch_of_neg_exp(log_magnitude));
    return out;
  }
  switch (detail::classify(z)) {
    case detail::RootCase::None:
      break;
    case detail::RootCase::Double:
      push(T(-1));
      break;
    case detail::RootCase::One:
      push(lambert_w(Branch::Principal, z));
      break;
    case detail::RootCase::Two:
      // a > 0 here; W0 in (-1, 0) gives the smaller root.
      push(lambert_w(Branch::Principal, z));
      push(lambert_w(Branch::Lower, z));
      break;
  }
  return out;
}

/// Solves v ln v = a v + b for v > 0 (b != 0).
template <std::floating_point T>
LogLinearSolutions<T> solve_xlogx(T a, T b) {
  if (b == 0 || std::isnan(b)) throw InvalidArgument("solve_xlogx: b must be nonzero");
  const T z = b * std::exp(-a);
  if (std::isinf(z)) {
    if (z < 0) return {};
    throw DomainError("solve_xlogx: b e^-a overflows");
  }
  LogLinearSolutions<T> out;
  // Each root is v = b / W with ln v = a + W.
  auto push = [&](T w) {
    out.roots[out.count] = b / w;
    out.log_roots[out.count] = a + w;
    ++out.count;
  };
  switch (detail::classify(z)) {
    case detail::RootCase::None:
      break;
    case detail::RootCase::Double:
      push(T(-1));
      break;
    case detail::RootCase::One:
      push(lambert_w(Branch::Principal, z));
      break;
    case detail::RootCase::Two:
      // b < 0; the lower branch has the larger |W| and so the smaller root.
      push(lambert_w(Branch::Lower, z));
      push(lambert_w(Branch::Principal, z));
      break;
  }
  return out;
}

}  // namespace sirthreshold
