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

#include <algorithm>
#include <cmath>
#include <string>

#include "reorient/errors.h"
#include "reorient/lp/solver.h"

namespace reorient::lp {

ChebyshevResult ChebyshevCenter(const LinearProgram& polytope,
                                std::span<const double> box_lower,
                                std::span<const double> box_upper,
                                const ToleranceConfig& tolerances) {
  polytope.Validate();
  const int n = polytope.num_columns();
  if (static_cast<int>(box_lower.size()) != n ||
      static_cast<int>(box_upper.size()) != n) {
    throw StructuralError("chebyshev_center: box dimension mismatch");
  }
  LinearProgram ball;
  double widest = 0.0;
  for (int j = 0; j < n; ++j) {
    const double lo = std::max(polytope.lower[j], box_lower[j]);
    const double hi = std::min(polytope.upper[j], box_upper[j]);
    if (!std::isfinite(lo) || !std::isfinite(hi)) {
      throw StructuralError("chebyshev_center: column " + std::to_string(j) +
                            " is unbounded after applying the box");
    }
    if (lo > hi) {
      ChebyshevResult empty;
      empty.status = SolveStatus::kInfeasible;
      return empty;
    }
    ball.AddColumn(0.0, lo, hi);
    widest = std::max(widest, 0.5 * (hi - lo));
  }
  const int radius = ball.AddColumn(-1.0, 0.0, widest, "radius");

  for (int r = 0; r < polytope.num_rows(); ++r) {
    std::vector<Entry> entries = polytope.rows[r];
    double norm = 0.0;
    for (const Entry& e : entries) {
      // Fixed columns do not move, so they do not shrink the ball.
      if (ball.lower[e.index] < ball.upper[e.index]) norm += e.value * e.value;
    }
    norm = std::sqrt(norm);
    const RowSense sense = polytope.senses[r];
    if (sense == RowSense::kLessEqual && norm > 0.0) {
      entries.push_back({radius, norm});
    } else if (sense == RowSense::kGreaterEqual && norm > 0.0) {
      entries.push_back({radius, -norm});
    }
    ball.AddRow(std::move(entries), sense, polytope.rhs[r]);
  }
  for (int j = 0; j < n; ++j) {
    if (ball.lower[j] == ball.upper[j]) continue;
    ball.AddRow({{j, 1.0}, {radius, -1.0}}, RowSense::kGreaterEqual,
                ball.lower[j]);
    ball.AddRow({{j, 1.0}, {radius, 1.0}}, RowSense::kLessEqual, ball.upper[j]);
  }

  const LpSolution sol = SolveLp(ball, tolerances);
  ChebyshevResult result;
  result.status = sol.status;
  if (!sol.optimal()) return result;
  result.radius = std::max(0.0, sol.primal[radius]);

  // The largest radius usually leaves directions that are not pinned by any
  // binding constraint; a second pass holds the radius and centres each such
  // coordinate inside its own box.
  LinearProgram refine = ball;
  refine.objective[radius] = 0.0;
  refine.lower[radius] = std::max(
      0.0, result.radius - 1e-9 * std::max(1.0, result.radius));
  for (int j = 0; j < n; ++j) {
    if (ball.lower[j] == ball.upper[j]) continue;
    const double width = ball.upper[j] - ball.lower[j];
    const int t = refine.AddColumn(-1.0 / width, 0.0, width);
    refine.AddRow({{t, 1.0}, {j, -1.0}, {radius, 1.0}}, RowSense::kLessEqual,
                  -ball.lower[j]);
    refine.AddRow({{t, 1.0}, {j, 1.0}, {radius, 1.0}}, RowSense::kLessEqual,
                  ball.upper[j]);
  }
  const LpSolution centred = SolveLp(refine, tolerances);
  const LpSolution& chosen = centred.optimal() ? centred : sol;
  result.center.assign(chosen.primal.begin(), chosen.primal.begin() + n);
  result.radius = std::max(0.0, chosen.primal[radius]);
  return result;
}

}  // namespace reorient::lp
