// Copyright 2026 The REORIENT Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef REORIENT_TESTS_SUPPORT_RANDOM_LP_H_
#define REORIENT_TESTS_SUPPORT_RANDOM_LP_H_

#include <cstdint>
#include <random>

#include "reorient/lp/linear_program.h"
#include "reorient/lp/solver.h"

namespace reorient::testing {

// Feasible and bounded by construction: rows are built around a random
// interior point and columns without an upper bound carry positive cost.
inline lp::LinearProgram RandomLp(int rows, int cols, uint64_t seed,
                                  double density = 0.6) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  lp::LinearProgram problem;
  std::vector<double> point(cols);
  for (int j = 0; j < cols; ++j) {
    if (unit(rng) < 0.7) {
      const double lo = -5.0 * unit(rng);
      const double hi = lo + 1.0 + 9.0 * unit(rng);
      problem.AddColumn(-5.0 + 10.0 * unit(rng), lo, hi);
      point[j] = lo + (hi - lo) * unit(rng);
    } else {
      problem.AddColumn(0.1 + 4.0 * unit(rng), 0.0, lp::kInfinity);
      point[j] = 3.0 * unit(rng);
    }
  }
  for (int r = 0; r < rows; ++r) {
    std::vector<lp::Entry> entries;
    double activity = 0.0;
    for (int j = 0; j < cols; ++j) {
      if (unit(rng) < density) {
        const double v = -5.0 + 10.0 * unit(rng);
        entries.push_back({j, v});
        activity += v * point[j];
      }
    }
    const double pick = unit(rng);
    if (pick < 0.45) {
      problem.AddRow(std::move(entries), lp::RowSense::kLessEqual,
                     activity + 2.0 * unit(rng));
    } else if (pick < 0.9) {
      problem.AddRow(std::move(entries), lp::RowSense::kGreaterEqual,
                     activity - 2.0 * unit(rng));
    } else {
      problem.AddRow(std::move(entries), lp::RowSense::kEqual, activity);
    }
  }
  return problem;
}

// Random MILP whose first `binaries` columns are binary. Feasible because the
// rows are generated around a point with integral binary part.
inline lp::MixedIntegerProgram RandomMilp(int rows, int continuous,
                                          int binaries, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  lp::MixedIntegerProgram mip;
  auto& problem = mip.base;
  const int cols = binaries + continuous;
  std::vector<double> point(cols);
  for (int j = 0; j < binaries; ++j) {
    problem.AddColumn(-6.0 + 10.0 * unit(rng), 0.0, 1.0);
    point[j] = unit(rng) < 0.5 ? 0.0 : 1.0;
    mip.binary_columns.insert(j);
  }
  for (int j = binaries; j < cols; ++j) {
    const double hi = 1.0 + 4.0 * unit(rng);
    problem.AddColumn(-3.0 + 6.0 * unit(rng), 0.0, hi);
    point[j] = hi * unit(rng);
  }
  for (int r = 0; r < rows; ++r) {
    std::vector<lp::Entry> entries;
    double activity = 0.0;
    for (int j = 0; j < cols; ++j) {
      if (unit(rng) < 0.5) {
        const double v = -4.0 + 8.0 * unit(rng);
        entries.push_back({j, v});
        activity += v * point[j];
      }
    }
    if (unit(rng) < 0.5) {
      problem.AddRow(std::move(entries), lp::RowSense::kLessEqual,
                     activity + 1.5 * unit(rng));
    } else {
      problem.AddRow(std::move(entries), lp::RowSense::kGreaterEqual,
                     activity - 1.5 * unit(rng));
    }
  }
  return mip;
}

}  // namespace reorient::testing

#endif  // REORIENT_TESTS_SUPPORT_RANDOM_LP_H_
