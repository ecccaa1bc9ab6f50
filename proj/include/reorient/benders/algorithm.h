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


#ifndef REORIENT_BENDERS_ALGORITHM_H_
#define REORIENT_BENDERS_ALGORITHM_H_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "reorient/benders/master.h"
#include "reorient/benders/oracles.h"
#include "reorient/lp/solver.h"
#include "reorient/mhsp/decomposition.h"

namespace reorient::benders {

struct AlgorithmConfig {
  // Converged when U* - L* <= max(epsilon_abs, epsilon_rel * |U*|).
  double epsilon_abs = 1e-6;
  double epsilon_rel = 0.01;
  double gamma = 0.5;
  // Initial upper bound M and the value of a failed upper oracle.
  double big_m = 1e12;
  int max_iterations = 200;
  // Exact solves per inner loop; 0 means the number of operational nodes.
  int inner_budget = 0;

  // Level-set management: after `stall_iterations` iterations without an
  // upper-bound improvement gamma shrinks by `gamma_factor` (not below
  // gamma_min); after as many without lower-bound progress it grows by
  // 1 / gamma_factor (not above gamma_max).
  int stall_iterations = 5;
  double gamma_factor = 0.7;
  double gamma_min = 0.1;
  double gamma_max = 0.9;

  // Solve exactly at the master point for the nodes whose oracle brackets
  // there are widest, until the gap closes or the inner budget is spent.
  bool refine_upper_at_rmp = true;
  // Solve exactly at every oracle query and check the bracket.
  bool verify_oracles = false;
  int threads = 1;
  lp::ToleranceConfig tolerances;
};

// Throws ValidationError.
void ValidateConfig(const AlgorithmConfig& config);

enum class RunStatus { kConverged, kIterationLimit };

const char* ToString(RunStatus status);

struct IterationRecord {
  int iteration = 0;
  double lower = 0.0;  // L*_j
  double upper = 0.0;  // U*_j
  double lower_oracle_bound = 0.0;  // L^LBO_j
  double upper_oracle_bound = 0.0;  // U^UBO_j
  double gamma = 0.0;
  int exact_evaluations = 0;
  int oracle_calls = 0;
  int inner_steps = 0;
  std::string inner_exit;
  double seconds_master = 0.0;
  double seconds_stabilization = 0.0;
  double seconds_subproblems = 0.0;
  double seconds_oracles = 0.0;
};

struct IterationLog {
  std::vector<IterationRecord> records;

  long TotalEvaluations() const;
  long TotalOracleCalls() const;
  double TotalSeconds() const;
  // Columnar text, one row per iteration. Timings are optional so that the
  // default output is reproducible byte for byte.
  void Write(std::ostream& out, bool with_timings = false) const;
  // One-line summary: iterations, evaluations, total time and the share of
  // master, stabilization and subproblem time.
  void WriteSummary(std::ostream& out, const std::string& label) const;
};

struct SandwichStats {
  long checks = 0;
  long violations = 0;
  double worst_excess = 0.0;
};

struct BendersResult {
  RunStatus status = RunStatus::kIterationLimit;
  std::string algorithm;
  double upper_bound = 0.0;
  double lower_bound = 0.0;
  std::vector<double> master_x;
  IterationLog log;
  CutPool cuts;
  std::vector<SampleSet> samples;
  SandwichStats sandwich;
  long exact_evaluations = 0;

  explicit BendersResult(const mhsp::DecomposedProblem& problem) : cuts(problem) {}
  double gap() const { return upper_bound - lower_bound; }
};

// Benders decomposition with adaptive oracles and centre-point
// stabilization. Throws ValidationError if the problem violates the sign
// conditions the oracles rely on.
BendersResult RunAlgorithm1(const mhsp::DecomposedProblem& problem,
                            const AlgorithmConfig& config = {});

// Multi-cut Benders: every node solved exactly at the master point.
BendersResult RunStandardBenders(const mhsp::DecomposedProblem& problem,
                                 const AlgorithmConfig& config = {});

struct MonolithicResult {
  double objective = 0.0;
  double bound = 0.0;
  std::vector<double> master_x;
  long branch_nodes = 0;
  double seconds = 0.0;
};

// Branch-and-bound on the flattened problem. Throws ModelError when it has
// no optimum.
MonolithicResult SolveMonolithic(const mhsp::DecomposedProblem& problem,
                                 const lp::ToleranceConfig& tolerances = {});

struct CutCheck {
  long checks = 0;
  long violations = 0;
  double worst_excess = 0.0;
};

// Compares every cut with exact values at `draws` random node points
// between the special point and twice the largest sampled coordinate.
// Tolerance 1e-6 (1 + |g|).
CutCheck CheckCutValidity(const mhsp::DecomposedProblem& problem,
                          const CutPool& pool, int draws, uint64_t seed,
                          const lp::ToleranceConfig& tolerances = {});

}  // namespace reorient::benders

#endif  // REORIENT_BENDERS_ALGORITHM_H_
