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


#include "reorient/cli/run.h"

#include <chrono>
#include <cstdlib>
#include <filesystem>

#include "reorient/errors.h"

#ifndef REORIENT_VERSION
#define REORIENT_VERSION "0.0.0"
#endif
#ifndef REORIENT_REVISION
#define REORIENT_REVISION ""
#endif

namespace reorient::cli {

const char* ToString(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::kEnhanced:
      return "enhanced";
    case Algorithm::kStandard:
      return "standard";
    case Algorithm::kMonolithic:
      return "monolithic";
  }
  return "unknown";
}

Algorithm ParseAlgorithm(const std::string& name) {
  if (name == "enhanced") return Algorithm::kEnhanced;
  if (name == "standard") return Algorithm::kStandard;
  if (name == "monolithic") return Algorithm::kMonolithic;
  throw ValidationError("unknown algorithm '" + name +
                        "' (expected enhanced, standard or monolithic)");
}

std::string DefaultOutputDir() {
  const char* dir = std::getenv(kOutputDirVariable);
  return dir != nullptr && *dir != '\0' ? dir : "reorient-out";
}

void RunManifest::Validate() const {
  if (case_path.empty()) throw ValidationError("manifest has no case path");
  if (!std::filesystem::is_regular_file(case_path)) {
    throw DataError("case file '" + case_path + "' does not exist");
  }
  if (output_dir.empty()) throw ValidationError("manifest has no output directory");
  benders::ValidateConfig(config);
}

model::CaseData LoadManifestCase(const RunManifest& manifest) {
  manifest.Validate();
  model::CaseData data = model::LoadCase(manifest.case_path);
  if (manifest.seed) {
    data.tree.price_seed = *manifest.seed;
    data.tree.scenario_seed = *manifest.seed;
  }
  return data;
}

SolveOutcome Solve(const model::ReorientModel& model, Algorithm algorithm,
                   const benders::AlgorithmConfig& config) {
  SolveOutcome out;
  out.algorithm = algorithm;
  const auto start = std::chrono::steady_clock::now();
  if (algorithm == Algorithm::kMonolithic) {
    const benders::MonolithicResult r =
        benders::SolveMonolithic(model.problem, config.tolerances);
    out.converged = true;
    out.objective = r.objective;
    out.lower_bound = r.bound;
    out.master_x = r.master_x;
    out.branch_nodes = r.branch_nodes;
  } else {
    const benders::BendersResult r = algorithm == Algorithm::kEnhanced
                                         ? benders::RunAlgorithm1(model.problem, config)
                                         : benders::RunStandardBenders(model.problem, config);
    out.converged = r.status == benders::RunStatus::kConverged;
    out.objective = r.upper_bound;
    out.lower_bound = r.lower_bound;
    out.master_x = r.master_x;
    out.log = r.log;
    out.exact_evaluations = r.exact_evaluations;
  }
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

std::string VersionString() {
  const std::string revision = REORIENT_REVISION;
  return revision.empty() ? std::string(REORIENT_VERSION)
                          : std::string(REORIENT_VERSION) + "-g" + revision;
}

}  // namespace reorient::cli
