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

#include "sirthreshold/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <iomanip>
#include <limits>
#include <ostream>
#include <string>
#include <thread>

#include "sirthreshold/errors.hpp"

namespace sirthreshold {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::array<double, 5> as_array(const QuantifierSet& q) { return {q.q1, q.q2, q.q3, q.q4, q.q5}; }

void write_number(std::ostream& out, double x) {
  if (std::isnan(x)) {
    out << "nan";
  } else {
    out << x;
  }
}

// Every cell in row k shares R0, so one trajectory serves the whole row.
void compute_row(const SweepGrid& grid, std::size_t row, std::span<SweepCell> cells) {
  const double r0 = grid.r0.at(row);
  for (std::size_t col = 0; col < grid.m.count; ++col) cells[col] = {r0, grid.m.at(col), {}};

  const ThresholdProblem first = grid.base.problem(r0, grid.m.at(0));
  if (!first.peak_regime()) {
    for (auto& cell : cells) cell.q.fill(kNaN);
    return;
  }
  const Trajectory trajectory = quantifier_trajectory(first, grid.options);
  for (std::size_t col = 0; col < grid.m.count; ++col) {
    cells[col].q = as_array(
        quantifiers(first.with_threshold(cells[col].m), trajectory, grid.options));
  }
}

}  // namespace

double AxisRange::at(std::size_t k) const {
  if (count <= 1) return min;
  return min + (max - min) * static_cast<double>(k) / static_cast<double>(count - 1);
}

void AxisRange::validate(const char* name) const {
  if (!std::isfinite(min) || !std::isfinite(max)) {
    throw InvalidRange(std::string(name) + " range must be finite");
  }
  if (count == 0) throw InvalidRange(std::string(name) + " range needs at least one sample");
  if (count == 1 && min != max) {
    throw InvalidRange(std::string(name) + " range with one sample needs min == max");
  }
  if (count >= 2 && !(max > min)) throw InvalidRange(std::string(name) + " range needs max > min");
}

ThresholdProblem BaseScenario::problem(double r0, double m) const {
  return {SirParams(n, gamma, r0), SirState{0.0, s0, i0, rr0}, m};
}

void SweepGrid::validate() const {
  r0.validate("r0");
  m.validate("m");
  if (!(r0.min > 0.0)) throw InvalidRange("r0 range must be positive");
  if (!(m.min > base.i0)) {
    throw InvalidRange("m range must stay above I(0) = " + std::to_string(base.i0) +
                       " (M <= I(0))");
  }
  if (!(m.max < base.s0 + base.i0)) {
    throw InvalidRange("m range must stay below S(0) + I(0) = " +
                       std::to_string(base.s0 + base.i0));
  }
}

std::vector<SweepCell> sweep(const SweepGrid& grid, unsigned workers) {
  grid.validate();
  (void)grid.base.problem(grid.r0.min, grid.m.min);

  const std::size_t rows = grid.r0.count;
  const std::size_t cols = grid.m.count;
  std::vector<SweepCell> cells(rows * cols);
  auto row_span = [&](std::size_t row) {
    return std::span<SweepCell>(cells).subspan(row * cols, cols);
  };

  if (workers <= 1 || rows <= 1) {
    for (std::size_t row = 0; row < rows; ++row) compute_row(grid, row, row_span(row));
    return cells;
  }

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  auto work = [&] {
    for (std::size_t row = next++; row < rows; row = next++) {
      try {
        compute_row(grid, row, row_span(row));
      } catch (...) {
        if (!failed.exchange(true)) failure = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::jthread> pool;
  const unsigned count = static_cast<unsigned>(std::min<std::size_t>(workers, rows));
  pool.reserve(count);
  for (unsigned w = 0; w < count; ++w) pool.emplace_back(work);
  pool.clear();
  if (failure) std::rethrow_exception(failure);
  return cells;
}

void write_sweep_csv(std::ostream& out, std::span<const SweepCell> cells) {
  const auto flags = out.flags();
  const auto precision = out.precision();
  out << "r0,m,q1,q2,q3,q4,q5\n" << std::setprecision(17);
  for (const auto& cell : cells) {
    out << cell.r0 << ',' << cell.m;
    for (double q : cell.q) {
      out << ',';
      write_number(out, q);
    }
    out << '\n';
  }
  out.flags(flags);
  out.precision(precision);
}

std::vector<ProfileRow> r0_profile(const BaseScenario& base, double m, const AxisRange& r0_range,
                                   const QuantifierOptions& options) {
  r0_range.validate("r0");
  if (r0_range.count < 3) throw InvalidRange("profile needs at least three R0 samples");
  const double critical = critical_r0(base.problem(r0_range.max, m));
  if (r0_range.min < critical * (1.0 - 1e-12)) {
    throw InvalidRange("profile range starts at " + std::to_string(r0_range.min) +
                       ", below R0* = " + std::to_string(critical));
  }

  const std::size_t count = r0_range.count;
  std::vector<ProfileRow> rows(count);
  for (std::size_t k = 0; k < count; ++k) {
    rows[k].r0 = r0_range.at(k);
    rows[k].q = as_array(quantifiers(base.problem(rows[k].r0, m), options));
  }
  for (std::size_t k = 0; k < count; ++k) {
    const std::size_t lo = k == 0 ? 0 : k - 1;
    const std::size_t hi = k + 1 == count ? k : k + 1;
    for (std::size_t j = 0; j < 5; ++j) {
      rows[k].dq[j] = (rows[hi].q[j] - rows[lo].q[j]) / (rows[hi].r0 - rows[lo].r0);
      rows[k].nq[j] = rows[k].q[j] / rows.back().q[j];
      rows[k].lq[j] = rows[k].q[j] > 1e-12 ? rows[k].dq[j] / rows[k].q[j] : kNaN;
    }
  }
  return rows;
}

void write_profile_csv(std::ostream& out, std::span<const ProfileRow> rows) {
  const auto flags = out.flags();
  const auto precision = out.precision();
  out << "r0";
  for (const char* prefix : {"q", "dq", "nq", "lq"}) {
    for (int j = 1; j <= 5; ++j) out << ',' << prefix << j;
  }
  out << '\n' << std::setprecision(17);
  for (const auto& row : rows) {
    out << row.r0;
    for (const auto* column : {&row.q, &row.dq, &row.nq, &row.lq}) {
      for (double x : *column) {
        out << ',';
        write_number(out, x);
      }
    }
    out << '\n';
  }
  out.flags(flags);
  out.precision(precision);
}

}  // namespace sirthreshold
