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
#include <memory>
#include <vector>

#include "reorient/errors.h"
#include "reorient/lp/solver.h"

namespace reorient::lp {
namespace {

struct Node {
  long id = 0;
  int depth = 0;
  double bound = -kInfinity;
  // -1 free, 0 or 1 fixed; indexed like the binary list.
  std::vector<signed char> fixing;
  std::shared_ptr<const Basis> warm;
};

}  // namespace

LpSolution SolveMilp(const MixedIntegerProgram& problem,
                     const ToleranceConfig& tolerances) {
  problem.Validate();
  const std::vector<int> binaries(problem.binary_columns.begin(),
                                  problem.binary_columns.end());
  if (static_cast<int>(binaries.size()) > tolerances.max_binaries) {
    throw ResourceError("branch-and-bound: " + std::to_string(binaries.size()) +
                        " binaries exceed the budget of " +
                        std::to_string(tolerances.max_binaries));
  }

  LinearProgram relaxation = problem.base;
  const auto apply = [&](const Node& node) {
    for (size_t k = 0; k < binaries.size(); ++k) {
      const int j = binaries[k];
      if (node.fixing[k] < 0) {
        relaxation.lower[j] = problem.base.lower[j];
        relaxation.upper[j] = problem.base.upper[j];
      } else {
        relaxation.lower[j] = relaxation.upper[j] = node.fixing[k];
      }
    }
  };

  LpSolution incumbent;
  incumbent.status = SolveStatus::kInfeasible;
  double incumbent_value = kInfinity;
  bool have_incumbent = false;
  long branchings = 0;
  long total_iterations = 0;
  long next_id = 0;

  std::vector<Node> open;
  Node root;
  root.id = next_id++;
  root.fixing.assign(binaries.size(), -1);
  open.push_back(std::move(root));

  const auto prune_threshold = [&]() {
    return incumbent_value -
           std::max(tolerances.absolute_gap,
                    tolerances.relative_gap * std::abs(incumbent_value));
  };

  double pruned_bound = kInfinity;
  bool root_done = false;
  double root_bound = -kInfinity;
  while (!open.empty()) {
    // Plunge (LIFO) until an incumbent exists, then best bound.
    size_t pick = open.size() - 1;
    if (have_incumbent) {
      for (size_t k = 0; k < open.size(); ++k) {
        if (open[k].bound < open[pick].bound ||
            (open[k].bound == open[pick].bound && open[k].id < open[pick].id)) {
          pick = k;
        }
      }
    }
    Node node = std::move(open[pick]);
    open.erase(open.begin() + static_cast<long>(pick));
    if (have_incumbent && node.bound >= prune_threshold()) {
      pruned_bound = std::min(pruned_bound, node.bound);
      continue;
    }

    apply(node);
    LpSolution lp = SolveLp(relaxation, tolerances, node.warm.get());
    total_iterations += lp.iterations;
    if (!root_done) {
      root_done = true;
      if (lp.status == SolveStatus::kUnbounded) {
        lp.iterations = total_iterations;
        return lp;
      }
      if (lp.optimal()) root_bound = lp.objective_value;
    }
    if (lp.status != SolveStatus::kOptimal) continue;
    if (have_incumbent && lp.objective_value >= prune_threshold()) {
      pruned_bound = std::min(pruned_bound, lp.objective_value);
      continue;
    }

    int branch_k = -1;
    double best_fraction = tolerances.integrality;
    for (size_t k = 0; k < binaries.size(); ++k) {
      const double v = lp.primal[binaries[k]];
      const double fraction = std::abs(v - std::round(v));
      if (fraction > best_fraction + 1e-12) {
        best_fraction = fraction;
        branch_k = static_cast<int>(k);
      }
    }
    if (branch_k < 0) {
      for (int j : binaries) lp.primal[j] = std::round(lp.primal[j]);
      incumbent = std::move(lp);
      incumbent_value = incumbent.objective_value;
      have_incumbent = true;
      continue;
    }
    if (++branchings > tolerances.max_branch_nodes) {
      throw ResourceError("branch-and-bound: node budget of " +
                          std::to_string(tolerances.max_branch_nodes) +
                          " exhausted");
    }
    const double value = lp.primal[binaries[branch_k]];
    const signed char first = value >= 0.5 ? 1 : 0;
    auto warm = std::make_shared<const Basis>(lp.basis);
    // Push the away child first so the plunge explores the rounded side.
    for (signed char side : {static_cast<signed char>(1 - first), first}) {
      Node child;
      child.id = next_id++;
      child.depth = node.depth + 1;
      child.bound = lp.objective_value;
      child.fixing = node.fixing;
      child.fixing[branch_k] = side;
      child.warm = warm;
      open.push_back(std::move(child));
    }
  }

  if (!have_incumbent) {
    LpSolution infeasible;
    infeasible.status = SolveStatus::kInfeasible;
    infeasible.iterations = total_iterations;
    infeasible.branch_nodes = branchings;
    infeasible.best_bound = root_bound;
    return infeasible;
  }
  incumbent.iterations = total_iterations;
  incumbent.branch_nodes = branchings;
  incumbent.best_bound = std::min(incumbent_value, pruned_bound);
  return incumbent;
}

}  // namespace reorient::lp
