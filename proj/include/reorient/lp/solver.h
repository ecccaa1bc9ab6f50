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

#ifndef REORIENT_LP_SOLVER_H_
#define REORIENT_LP_SOLVER_H_

#include <span>
#include <string>
#include <vector>

#include "reorient/lp/linear_program.h"

namespace reorient::lp {

enum class SolveStatus { kOptimal, kInfeasible, kUnbounded };

const char* ToString(SolveStatus status);

enum class VarStatus : unsigned char { kBasic, kAtLower, kAtUpper, kFree };

// Simplex basis over the n structural columns followed by one logical column
// per row. Usable as a warm start for a problem of the same shape, or for the
// same problem with rows appended (see ExtendBasisWithRows).
struct Basis {
  std::vector<VarStatus> status;
  bool empty() const { return status.empty(); }
};

// Appends a basic logical for every row added since `basis` was taken.
Basis ExtendBasisWithRows(const Basis& basis, int num_rows_now);

struct LpSolution {
  SolveStatus status = SolveStatus::kInfeasible;
  double objective_value = 0.0;
  std::vector<double> primal;
  // d(objective)/d(rhs) per row.
  std::vector<double> dual;
  std::vector<double> reduced_costs;
  Basis basis;
  long iterations = 0;
  // MILP only.
  long branch_nodes = 0;
  double best_bound = 0.0;

  bool optimal() const { return status == SolveStatus::kOptimal; }
};

// Bounded-variable primal revised simplex on an explicit dense basis
// inverse. Phase 1 minimizes the sum of bound violations of the basic
// variables, so any basis is an acceptable starting point. Dantzig pricing
// with a Harris two-pass ratio test; after `degenerate_streak` consecutive
// degenerate pivots it switches to Bland's rule until progress resumes.
LpSolution SolveLp(const LinearProgram& problem,
                   const ToleranceConfig& tolerances = {},
                   const Basis* warm_start = nullptr);

// Branch-and-bound over the binary columns: depth-first plunge until the
// first incumbent, best-bound selection afterwards, most-fractional
// branching. Node LPs are warm-started from the parent basis.
LpSolution SolveMilp(const MixedIntegerProgram& problem,
                     const ToleranceConfig& tolerances = {});

struct ChebyshevResult {
  SolveStatus status = SolveStatus::kInfeasible;
  std::vector<double> center;
  double radius = 0.0;
};

// Largest Euclidean ball inside {x : rows of `polytope`} intersected with
// the box [box_lower, box_upper] and the column bounds of `polytope`.
// Equality rows and fixed columns restrict the ball to their affine hull.
// The objective of `polytope` is ignored.
ChebyshevResult ChebyshevCenter(const LinearProgram& polytope,
                                std::span<const double> box_lower,
                                std::span<const double> box_upper,
                                const ToleranceConfig& tolerances = {});

// Pluggable solver so that a production LP/MILP code can stand in for the
// built-in kernel without touching callers.
class SolverBackend {
 public:
  virtual ~SolverBackend() = default;
  virtual std::string name() const = 0;
  virtual LpSolution SolveLp(const LinearProgram& problem,
                             const ToleranceConfig& tolerances,
                             const Basis* warm_start) const = 0;
  virtual LpSolution SolveMilp(const MixedIntegerProgram& problem,
                               const ToleranceConfig& tolerances) const = 0;
};

class BuiltinSolver final : public SolverBackend {
 public:
  std::string name() const override { return "builtin-simplex"; }
  LpSolution SolveLp(const LinearProgram& problem,
                     const ToleranceConfig& tolerances,
                     const Basis* warm_start) const override {
    return lp::SolveLp(problem, tolerances, warm_start);
  }
  LpSolution SolveMilp(const MixedIntegerProgram& problem,
                       const ToleranceConfig& tolerances) const override {
    return lp::SolveMilp(problem, tolerances);
  }
};

const SolverBackend& DefaultSolver();

}  // namespace reorient::lp

#endif  // REORIENT_LP_SOLVER_H_
