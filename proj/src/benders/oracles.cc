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


#include "reorient/benders/oracles.h"

#include <cmath>
#include <string>

#include "reorient/errors.h"

namespace reorient::benders {

ExactResult ExactSolveSubproblem(const mhsp::SubproblemTemplate& tmpl,
                                 std::span<const double> x,
                                 std::span<const double> c,
                                 const lp::ToleranceConfig& tolerances,
                                 const lp::Basis* warm_start) {
  const lp::LinearProgram bound = mhsp::BindTemplate(tmpl, x, c);
  lp::LpSolution sol;
  try {
    sol = lp::DefaultSolver().SolveLp(bound, tolerances, warm_start);
  } catch (const NumericalError& e) {
    throw NumericalError("subproblem '" + tmpl.name + "': " + e.what());
  }
  if (!sol.optimal()) {
    throw ModelError("subproblem '" + tmpl.name + "' is " +
                     lp::ToString(sol.status) +
                     "; relatively complete recourse is violated");
  }
  ExactResult out;
  out.theta = sol.objective_value;
  out.iterations = sol.iterations;
  out.lambda.assign(tmpl.x_dimension, 0.0);
  out.phi.assign(tmpl.c_dimension, 0.0);
  for (int r = 0; r < bound.num_rows(); ++r) {
    for (const lp::Entry& e : tmpl.rhs_links[r]) {
      out.lambda[e.index] += sol.dual[r] * e.value;
    }
  }
  for (int j = 0; j < bound.num_columns(); ++j) {
    const double y = sol.primal[j];
    for (const lp::Entry& e : tmpl.cost_links[j]) out.phi[e.index] += e.value * y;
    if (tmpl.upper_links[j].empty()) continue;
    // The bound multiplier is the negative part of the reduced cost of a
    // column resting at its upper bound.
    const double d = sol.reduced_costs[j];
    const bool at_upper =
        sol.basis.status[j] != lp::VarStatus::kBasic &&
        y >= bound.upper[j] - tolerances.feasibility * (1.0 + std::abs(y));
    if (at_upper && d < 0.0) {
      for (const lp::Entry& e : tmpl.upper_links[j]) out.lambda[e.index] += d * e.value;
    }
  }
  out.basis = std::move(sol.basis);
  return out;
}

Sample SpecialPointSample(const mhsp::SubproblemTemplate& tmpl,
                          const lp::ToleranceConfig& tolerances) {
  if (static_cast<int>(tmpl.special_x.size()) != tmpl.x_dimension) {
    throw StructuralError(tmpl.name + ": special point not assigned");
  }
  const std::vector<double> c(tmpl.c_dimension, 0.0);
  ExactResult r = ExactSolveSubproblem(tmpl, tmpl.special_x, c, tolerances);
  return {tmpl.special_x, c, r.theta, std::move(r.lambda), std::move(r.phi)};
}

LowerOracleResult LowerOracle(const SampleSet& samples,
                              std::span<const double> x,
                              std::span<const double> c, double beta_lower,
                              const lp::ToleranceConfig& tolerances) {
  LowerOracleResult out;
  out.lambda.assign(x.size(), 0.0);
  auto fallback = [&]() {
    out.theta = beta_lower;
    std::fill(out.lambda.begin(), out.lambda.end(), 0.0);
    out.fallback = true;
    return out;
  };
  if (samples.empty()) return fallback();

  lp::LinearProgram oracle;
  for (const Sample& s : samples.samples()) {
    double value = s.theta;
    for (size_t k = 0; k < x.size(); ++k) value += s.lambda[k] * (x[k] - s.x[k]);
    oracle.AddColumn(-value, 0.0, lp::kInfinity);
  }
  for (size_t k = 0; k < c.size(); ++k) {
    std::vector<lp::Entry> row;
    for (int j = 0; j < samples.size(); ++j) {
      const double v = samples.samples()[j].c[k];
      if (v != 0.0) row.push_back({j, v});
    }
    if (row.empty()) {
      if (c[k] < 0.0) return fallback();
      continue;
    }
    oracle.AddRow(std::move(row), lp::RowSense::kLessEqual, c[k]);
  }
  const lp::LpSolution sol = lp::SolveLp(oracle, tolerances);
  if (!sol.optimal()) return fallback();
  out.theta = -sol.objective_value;
  for (int j = 0; j < samples.size(); ++j) {
    const double mu = sol.primal[j];
    if (mu == 0.0) continue;
    const Sample& s = samples.samples()[j];
    for (size_t k = 0; k < x.size(); ++k) out.lambda[k] += mu * s.lambda[k];
  }
  return out;
}

UpperOracleResult UpperOracle(const SampleSet& samples,
                              std::span<const double> x,
                              std::span<const double> c, double big_m,
                              const lp::ToleranceConfig& tolerances) {
  UpperOracleResult out;
  out.phi.assign(c.size(), 0.0);
  auto fallback = [&]() {
    out.theta = big_m;
    std::fill(out.phi.begin(), out.phi.end(), 0.0);
    out.fallback = true;
    return out;
  };
  if (samples.empty()) return fallback();

  lp::LinearProgram oracle;
  std::vector<lp::Entry> convexity;
  for (int j = 0; j < samples.size(); ++j) {
    const Sample& s = samples.samples()[j];
    double value = s.theta;
    for (size_t k = 0; k < c.size(); ++k) value += s.phi[k] * (c[k] - s.c[k]);
    oracle.AddColumn(value, 0.0, lp::kInfinity);
    convexity.push_back({j, 1.0});
  }
  for (size_t k = 0; k < x.size(); ++k) {
    std::vector<lp::Entry> row;
    bool binding = false;
    for (int j = 0; j < samples.size(); ++j) {
      const double v = samples.samples()[j].x[k];
      if (v != 0.0) row.push_back({j, v});
      binding |= v > x[k];
    }
    // Rows every sample satisfies alone cannot bind a convex combination.
    if (binding) oracle.AddRow(std::move(row), lp::RowSense::kLessEqual, x[k]);
  }
  oracle.AddRow(std::move(convexity), lp::RowSense::kEqual, 1.0);
  const lp::LpSolution sol = lp::SolveLp(oracle, tolerances);
  if (!sol.optimal()) return fallback();
  out.theta = sol.objective_value;
  for (int j = 0; j < samples.size(); ++j) {
    const double mu = sol.primal[j];
    if (mu == 0.0) continue;
    const Sample& s = samples.samples()[j];
    for (size_t k = 0; k < c.size(); ++k) out.phi[k] += mu * s.phi[k];
  }
  return out;
}

}  // namespace reorient::benders
