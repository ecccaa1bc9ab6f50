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


#ifndef REORIENT_BENDERS_ORACLES_H_
#define REORIENT_BENDERS_ORACLES_H_

#include <span>
#include <vector>

#include "reorient/lp/solver.h"
#include "reorient/mhsp/decomposition.h"

namespace reorient::benders {

// Exact value of g at (x, c) with a subgradient in x (lambda) and the
// gradient in c (phi, the cost activity of the optimal operation).
struct ExactResult {
  double theta = 0.0;
  std::vector<double> lambda;
  std::vector<double> phi;
  lp::Basis basis;
  long iterations = 0;
};

// Throws ModelError if the bound subproblem is infeasible or unbounded and
// NumericalError (with the template name) if the LP kernel fails.
ExactResult ExactSolveSubproblem(const mhsp::SubproblemTemplate& tmpl,
                                 std::span<const double> x,
                                 std::span<const double> c,
                                 const lp::ToleranceConfig& tolerances = {},
                                 const lp::Basis* warm_start = nullptr);

struct Sample {
  std::vector<double> x;
  std::vector<double> c;
  double theta = 0.0;
  std::vector<double> lambda;
  std::vector<double> phi;
};

// Exactly solved points of one subproblem template, shared by every node
// that uses the template.
class SampleSet {
 public:
  void Add(Sample sample) { samples_.push_back(std::move(sample)); }
  const std::vector<Sample>& samples() const { return samples_; }
  int size() const { return static_cast<int>(samples_.size()); }
  bool empty() const { return samples_.empty(); }

 private:
  std::vector<Sample> samples_;
};

// Solves the template at its special point (special x, c = 0).
Sample SpecialPointSample(const mhsp::SubproblemTemplate& tmpl,
                          const lp::ToleranceConfig& tolerances = {});

struct LowerOracleResult {
  double theta = 0.0;
  std::vector<double> lambda;
  bool fallback = false;
};

// max sum_j mu_j (theta_j + lambda_j^T (x - x_j))
//   s.t. sum_j mu_j c_j <= c, mu >= 0.
// Falls back to (beta_lower, 0) when the oracle LP has no optimum.
LowerOracleResult LowerOracle(const SampleSet& samples,
                              std::span<const double> x,
                              std::span<const double> c, double beta_lower,
                              const lp::ToleranceConfig& tolerances = {});

struct UpperOracleResult {
  double theta = 0.0;
  std::vector<double> phi;
  bool fallback = false;
};

// min sum_j mu_j (theta_j + phi_j^T (c - c_j))
//   s.t. sum_j mu_j x_j <= x, sum_j mu_j = 1, mu >= 0.
// Falls back to big_m when no sampled combination lies below x.
UpperOracleResult UpperOracle(const SampleSet& samples,
                              std::span<const double> x,
                              std::span<const double> c, double big_m,
                              const lp::ToleranceConfig& tolerances = {});

}  // namespace reorient::benders

#endif  // REORIENT_BENDERS_ORACLES_H_
