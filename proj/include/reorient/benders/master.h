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


#ifndef REORIENT_BENDERS_MASTER_H_
#define REORIENT_BENDERS_MASTER_H_

#include <span>
#include <vector>

#include "reorient/lp/solver.h"
#include "reorient/mhsp/decomposition.h"

namespace reorient::benders {

// beta_i >= theta + lambda^T (x_i - x).
struct Cut {
  std::vector<double> x;
  double theta = 0.0;
  std::vector<double> lambda;

  double Evaluate(std::span<const double> at) const;
};

// Per-node cut collections. Each starts with the constant cut
// (beta_lower, 0, 0).
class CutPool {
 public:
  explicit CutPool(const mhsp::DecomposedProblem& problem);

  // Returns false and keeps the pool unchanged if an identical cut exists.
  bool Add(int link, Cut cut);
  const std::vector<Cut>& cuts(int link) const { return cuts_[link]; }
  int num_links() const { return static_cast<int>(cuts_.size()); }
  int size() const;
  // Largest cut value for `link` at node point `at`.
  double Value(int link, std::span<const double> at) const;

 private:
  std::vector<std::vector<Cut>> cuts_;
};

// Master MILP with one row per non-constant cut.
lp::MixedIntegerProgram BuildRmp(const mhsp::DecomposedProblem& problem,
                                 const CutPool& pool);

struct RmpResult {
  std::vector<double> x;
  // Value of the incumbent and the proven bound of branch-and-bound.
  double objective = 0.0;
  double lower_bound = 0.0;
  long branch_nodes = 0;
};

// Throws ModelError if the master is infeasible or unbounded.
RmpResult SolveRmp(const mhsp::DecomposedProblem& problem, const CutPool& pool,
                   const lp::ToleranceConfig& tolerances = {});

struct CpResult {
  std::vector<double> x;
  double radius = 0.0;
  double level_target = 0.0;
  // True when the centre problem failed numerically and x is rmp_x.
  bool fallback = false;
  // Centre problem in unit-box coordinates u, with x = origin + width * u.
  lp::LinearProgram scaled;
  std::vector<double> origin;
  std::vector<double> width;
};

// Chebyshev centre of the LP relaxation of the master plus cuts plus the
// level row objective <= lower + gamma (upper - lower), computed in
// coordinates scaled to the unit box. Infinite bounds are replaced by a
// box around rmp_x: beta columns get rmp_x + (target - lower) / weight,
// other columns rmp_x +- max(1, |rmp_x|).
CpResult SolveCp(const mhsp::DecomposedProblem& problem, const CutPool& pool,
                 std::span<const double> rmp_x, double lower, double upper,
                 double gamma, const lp::ToleranceConfig& tolerances = {});

}  // namespace reorient::benders

#endif  // REORIENT_BENDERS_MASTER_H_
