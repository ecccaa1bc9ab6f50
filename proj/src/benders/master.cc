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


#include "reorient/benders/master.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "reorient/errors.h"

namespace reorient::benders {

double Cut::Evaluate(std::span<const double> at) const {
  double value = theta;
  for (size_t k = 0; k < lambda.size(); ++k) value += lambda[k] * (at[k] - x[k]);
  return value;
}

CutPool::CutPool(const mhsp::DecomposedProblem& problem)
    : cuts_(problem.links.size()) {
  for (size_t i = 0; i < problem.links.size(); ++i) {
    const int dim = problem.templates[problem.links[i].template_id].x_dimension;
    cuts_[i].push_back({std::vector<double>(dim, 0.0), problem.beta_lower,
                        std::vector<double>(dim, 0.0)});
  }
}

bool CutPool::Add(int link, Cut cut) {
  for (const Cut& c : cuts_[link]) {
    if (c.theta == cut.theta && c.x == cut.x && c.lambda == cut.lambda) return false;
  }
  cuts_[link].push_back(std::move(cut));
  return true;
}

int CutPool::size() const {
  int total = 0;
  for (const auto& list : cuts_) total += static_cast<int>(list.size());
  return total;
}

double CutPool::Value(int link, std::span<const double> at) const {
  double best = -lp::kInfinity;
  for (const Cut& cut : cuts_[link]) best = std::max(best, cut.Evaluate(at));
  return best;
}

lp::MixedIntegerProgram BuildRmp(const mhsp::DecomposedProblem& problem,
                                 const CutPool& pool) {
  lp::MixedIntegerProgram rmp = problem.master;
  lp::LinearProgram& lp = rmp.base;
  for (int i = 0; i < pool.num_links(); ++i) {
    const mhsp::OperationalLink& link = problem.links[i];
    const double beta_lo = lp.lower[link.beta_column];
    int index = 0;
    for (const Cut& cut : pool.cuts(i)) {
      const bool constant = std::all_of(cut.lambda.begin(), cut.lambda.end(),
                                        [](double v) { return v == 0.0; });
      if (constant && cut.theta <= beta_lo) {
        ++index;
        continue;
      }
      std::vector<lp::Entry> row{{link.beta_column, 1.0}};
      double rhs = cut.theta;
      for (size_t k = 0; k < cut.lambda.size(); ++k) {
        const double l = cut.lambda[k];
        if (l == 0.0) continue;
        rhs += l * (link.x_offsets[k] - cut.x[k]);
        if (link.x_columns[k] >= 0) row.push_back({link.x_columns[k], -l});
      }
      lp.AddRow(std::move(row), lp::RowSense::kGreaterEqual, rhs,
                "cut[" + link.label + "," + std::to_string(index++) + "]");
    }
  }
  lp.Canonicalize();
  return rmp;
}

RmpResult SolveRmp(const mhsp::DecomposedProblem& problem, const CutPool& pool,
                   const lp::ToleranceConfig& tolerances) {
  const lp::MixedIntegerProgram rmp = BuildRmp(problem, pool);
  const lp::LpSolution sol = lp::DefaultSolver().SolveMilp(rmp, tolerances);
  if (!sol.optimal()) {
    throw ModelError(std::string("master problem is ") + lp::ToString(sol.status));
  }
  RmpResult out;
  out.x = sol.primal;
  out.objective = sol.objective_value;
  out.lower_bound = std::min(sol.best_bound, sol.objective_value);
  out.branch_nodes = sol.branch_nodes;
  return out;
}

CpResult SolveCp(const mhsp::DecomposedProblem& problem, const CutPool& pool,
                 std::span<const double> rmp_x, double lower, double upper,
                 double gamma, const lp::ToleranceConfig& tolerances) {
  CpResult out;
  out.level_target = lower + gamma * std::max(0.0, upper - lower);
  out.x.assign(rmp_x.begin(), rmp_x.end());

  const lp::LinearProgram relaxed = BuildRmp(problem, pool).base;
  const int n = relaxed.num_columns();

  std::vector<double> weight_of_beta(n, -1.0);
  for (const mhsp::OperationalLink& link : problem.links) {
    weight_of_beta[link.beta_column] = relaxed.objective[link.beta_column];
  }
  std::vector<double> lo(n), hi(n);
  for (int j = 0; j < n; ++j) {
    const double anchor = rmp_x[j];
    const double spread = std::max(1.0, std::abs(anchor));
    lo[j] = std::isfinite(relaxed.lower[j]) ? relaxed.lower[j]
                                            : std::min(anchor, 0.0) - spread;
    if (std::isfinite(relaxed.upper[j])) {
      hi[j] = relaxed.upper[j];
    } else if (weight_of_beta[j] > 0.0) {
      const double base = std::max(anchor, lo[j]);
      hi[j] = base + std::max((out.level_target - lower) / weight_of_beta[j],
                              1e-9 * (1.0 + std::abs(base)));
    } else {
      hi[j] = std::max(anchor, lo[j]) + spread;
    }
  }

  // Unit-box coordinates u = (x - lo) / width.
  lp::LinearProgram& scaled = out.scaled;
  std::vector<double>& width = out.width;
  width.resize(n);
  out.origin = lo;
  for (int j = 0; j < n; ++j) {
    width[j] = hi[j] - lo[j];
    scaled.AddColumn(0.0, 0.0, width[j] > 0.0 ? 1.0 : 0.0);
  }
  auto add_scaled = [&](const std::vector<lp::Entry>& row, lp::RowSense sense,
                        double rhs) {
    std::vector<lp::Entry> entries;
    for (const lp::Entry& e : row) {
      rhs -= e.value * lo[e.index];
      if (width[e.index] > 0.0) entries.push_back({e.index, e.value * width[e.index]});
    }
    scaled.AddRow(std::move(entries), sense, rhs);
  };
  for (int r = 0; r < relaxed.num_rows(); ++r) {
    add_scaled(relaxed.rows[r], relaxed.senses[r], relaxed.rhs[r]);
  }
  std::vector<lp::Entry> level;
  for (int j = 0; j < n; ++j) {
    if (relaxed.objective[j] != 0.0) level.push_back({j, relaxed.objective[j]});
  }
  add_scaled(level, lp::RowSense::kLessEqual,
             out.level_target - relaxed.objective_offset);

  const std::vector<double> box_lo(n, 0.0), box_hi(n, 1.0);
  lp::ChebyshevResult center;
  try {
    center = lp::ChebyshevCenter(scaled, box_lo, box_hi, tolerances);
  } catch (const NumericalError&) {
    out.fallback = true;
    return out;
  }
  if (center.status != lp::SolveStatus::kOptimal) {
    out.fallback = true;
    return out;
  }
  out.radius = center.radius;
  for (int j = 0; j < n; ++j) out.x[j] = lo[j] + width[j] * center.center[j];
  return out;
}

}  // namespace reorient::benders
