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


#ifndef REORIENT_MHSP_RANDOM_INSTANCE_H_
#define REORIENT_MHSP_RANDOM_INSTANCE_H_

#include <cstdint>
#include <vector>

#include "reorient/mhsp/problem.h"

namespace reorient::mhsp {

// Capacity-expansion shaped MHSP instances: each investment node may build
// capacity of a few technologies (some gated by a binary build decision)
// that accumulates down the tree; each operational node dispatches that
// capacity against demand over a few hours per scenario, with load shedding
// at a penalty. Operational rows satisfy T <= 0 and y >= 0, so every
// strategic decision leaves the subproblems feasible.
struct RandomMhspOptions {
  // branching[s] children per stage-s node; branching[0] is the root.
  std::vector<int> branching = {1, 2};
  int technologies = 2;
  int gated_technologies = 1;
  int scenarios = 2;
  int hours = 4;
  // Demand identical at every node, so operational nodes share templates.
  bool shared_structure = true;
};

MHSPProblem RandomMhsp(const RandomMhspOptions& options, uint64_t seed);

// Instance settings cycling over 2 to 4 stages with at most 8 operational
// nodes, 12 binaries and 2000 continuous variables.
RandomMhspOptions SuiteOptions(int index);
RandomMhspOptions LargestSuiteOptions();

}  // namespace reorient::mhsp

#endif  // REORIENT_MHSP_RANDOM_INSTANCE_H_
