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


#ifndef REORIENT_CLI_COMMANDS_H_
#define REORIENT_CLI_COMMANDS_H_

#include <iosfwd>
#include <string>
#include <vector>

#include "reorient/cli/report.h"
#include "reorient/cli/run.h"
#include "reorient/errors.h"
#include "reorient/model/case.h"

namespace reorient::cli {

// Bad command-line usage, e.g. an unknown sweep parameter.
class UsageError : public Error {
 public:
  using Error::Error;
};

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitNotConverged = 3;

// Sweepable scalars: retrofit_share, co2_price, demand_power,
// demand_hydrogen, demand_heat, reserve, profit_scale.
std::vector<std::string> SweepParameters();
// Throws UsageError for an unknown parameter.
void ApplyParameter(model::CaseData& data, const std::string& parameter, double value);

struct SolveRun {
  DecisionReport report;
  SolveOutcome outcome;
};

SolveRun RunSolve(const model::CaseData& data, const RunManifest& manifest,
                  const model::ModelOptions& options = {});

struct SweepPoint {
  double value = 0.0;
  DecisionReport report;
};

struct SweepReport {
  std::string parameter;
  std::vector<SweepPoint> points;

  // Incidence tuples per retrofit and value, then objectives.
  void Write(std::ostream& out) const;
  // Retrofit decisions summed over stages and retrofits (abandonment
  // excluded) at point k.
  int RetrofitCount(size_t k) const;
};

SweepReport RunSensitivity(const RunManifest& manifest, const std::string& parameter,
                           const std::vector<double>& values);

struct ComparisonReport {
  DecisionReport full;
  DecisionReport investment_only;
  // The investment-only decisions are feasible in the full model; when they
  // are better than the full solve's incumbent they are reported as the
  // full-model solution.
  bool full_uses_restricted_incumbent = false;

  void Write(std::ostream& out) const;
};

ComparisonReport RunCompare(const RunManifest& manifest);

// Each command writes into manifest.output_dir and returns an exit code.
// Deterministic files (reports, iteration logs) carry no timings; timings
// go to timings.txt and run.json.
int CmdSolve(const RunManifest& manifest, std::ostream& console);
int CmdSensitivity(const RunManifest& manifest, const std::string& parameter,
                   const std::vector<double>& values, std::ostream& console);
int CmdCompare(const RunManifest& manifest, std::ostream& console);
// Writes the fitted price tree, the strategic tree and the sampled
// operational periods.
int CmdGenScenarios(const RunManifest& manifest, std::ostream& console);

}  // namespace reorient::cli

#endif  // REORIENT_CLI_COMMANDS_H_
