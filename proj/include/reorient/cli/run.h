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


#ifndef REORIENT_CLI_RUN_H_
#define REORIENT_CLI_RUN_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "reorient/benders/algorithm.h"
#include "reorient/model/builder.h"
#include "reorient/model/case.h"

namespace reorient::cli {

enum class Algorithm { kEnhanced, kStandard, kMonolithic };

const char* ToString(Algorithm algorithm);
// Throws ValidationError for an unknown name.
Algorithm ParseAlgorithm(const std::string& name);

// Environment variable naming the default output directory.
inline constexpr const char* kOutputDirVariable = "REORIENT_OUTPUT_DIR";

// Value of kOutputDirVariable, or "reorient-out".
std::string DefaultOutputDir();

struct RunManifest {
  std::string case_path;
  Algorithm algorithm = Algorithm::kEnhanced;
  benders::AlgorithmConfig config;
  // Replaces the price and scenario seeds of the case when set.
  std::optional<uint64_t> seed;
  std::string output_dir;

  // Throws DataError for a missing case file, ValidationError otherwise.
  void Validate() const;
};

// Loads the case named by the manifest and applies its seed.
model::CaseData LoadManifestCase(const RunManifest& manifest);

// Result of one solve with any of the algorithms.
struct SolveOutcome {
  Algorithm algorithm = Algorithm::kEnhanced;
  bool converged = false;
  double objective = 0.0;
  double lower_bound = 0.0;
  std::vector<double> master_x;
  benders::IterationLog log;
  long exact_evaluations = 0;
  long branch_nodes = 0;
  double seconds = 0.0;
};

SolveOutcome Solve(const model::ReorientModel& model, Algorithm algorithm,
                   const benders::AlgorithmConfig& config);

// Version string: project version plus the source revision when known.
std::string VersionString();

}  // namespace reorient::cli

#endif  // REORIENT_CLI_RUN_H_
