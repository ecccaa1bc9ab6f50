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


#ifndef REORIENT_CLI_REPORT_H_
#define REORIENT_CLI_REPORT_H_

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "reorient/cli/run.h"
#include "reorient/model/builder.h"
#include "reorient/model/case.h"

namespace reorient::cli {

// Expected accumulated capacity of one technology, per stage.
struct CapacityRow {
  std::string technology;
  std::string tech_class;
  std::string region;
  std::vector<double> capacity;
};

// Number of investment nodes per stage in which a retrofit or abandonment
// is decided.
struct IncidenceRow {
  std::string source;
  std::string target;
  std::vector<int> nodes;
};

struct DecisionReport {
  std::string case_name;
  std::string algorithm;
  bool converged = false;
  double objective = 0.0;
  double lower_bound = 0.0;
  // Expected investment-side cost (builds, retrofits, fixed O&M net of
  // platform profit) and expected operational cost; they sum to the
  // objective.
  double investment_cost = 0.0;
  double operational_cost = 0.0;
  // Investment nodes per stage.
  std::vector<int> stage_nodes;
  std::vector<CapacityRow> capacities;
  std::vector<IncidenceRow> incidence;
  // Expected build and retrofit spending per region.
  std::map<std::string, double> investment_by_region;

  // Columnar text with fixed precision.
  void Write(std::ostream& out) const;
};

DecisionReport MakeReport(const model::CaseData& data, const model::ReorientModel& model,
                          const SolveOutcome& outcome);

// "(x_1,...,x_S)".
std::string Tuple(const std::vector<int>& counts);

}  // namespace reorient::cli

#endif  // REORIENT_CLI_REPORT_H_
