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



#ifndef REORIENT_MODEL_BUILDER_H_
#define REORIENT_MODEL_BUILDER_H_

#include <map>
#include <span>
#include <string>
#include <vector>

#include "reorient/lp/linear_program.h"
#include "reorient/mhsp/decomposition.h"
#include "reorient/mhsp/tree.h"
#include "reorient/model/case.h"
#include "reorient/stoch/price_tree.h"
#include "reorient/stoch/time_series.h"

namespace reorient::model {

// Strategic data of one tree node.
struct NodeScalars {
  int stage = 1;
  double demand_power = 1.0;
  double demand_hydrogen = 1.0;
  double demand_heat = 1.0;
  double co2_price = 0.0;
  double co2_budget = 0.0;  // unused when the case has no budget
  double oil = 0.0;
  double gas = 0.0;
};

// Components of the operational node's strategic vector x. Capacities enter
// as themselves; demands enter negated so that g is nonincreasing in every
// component.
enum class XKind {
  kAccumulated,    // accumulated capacity of a technology
  kRetrofitted,    // accumulated capacity of a retrofit target
  kRemaining,      // remaining capacity of a retrofit source
  kNegDemandPower,
  kNegDemandHydrogen,
  kNegDemandHeat,
  kCo2Budget,
};

struct XComponent {
  XKind kind = XKind::kAccumulated;
  std::string technology;
  std::string label;
};

// Cost vector c = (base, CO2 price); base is 1 at every node.
inline constexpr int kCostBase = 0;
inline constexpr int kCostCo2 = 1;

std::vector<XComponent> LinkLayout(const CaseData& data);

// Operational template shared by every operational node.
mhsp::SubproblemTemplate BuildSubproblem(const CaseData& data,
                                         const stoch::OperationalScenarioSet& scenarios);

// Parameter substitution; throws StructuralError on a dimension mismatch.
lp::LinearProgram BindNode(const mhsp::SubproblemTemplate& tmpl,
                           std::span<const double> x, std::span<const double> c);

struct ModelOptions {
  // Retrofit and abandonment decisions fixed to zero.
  bool investment_only = false;
};

struct MasterModel {
  lp::MixedIntegerProgram program;
  // Column per "family[technology,node]" label, e.g. "y_ref[Vesterled,0]".
  std::map<std::string, int> columns;
  int c_inv = -1;
  // Operational node -> beta column.
  std::map<int, int> beta;
  std::vector<mhsp::OperationalLink> links;

  // -1 when the family has no column for (technology, node).
  int Column(const std::string& family, const std::string& technology, int node) const;
};

MasterModel BuildMaster(const CaseData& data, const mhsp::StrategicTree& tree,
                        const std::map<int, NodeScalars>& scalars,
                        const ModelOptions& options = {});

// Investment tree with prices fitted to simulated price paths, plus one
// operational node per investment node.
stoch::PriceTree FitPriceTree(const CaseData& data);

// Scalars of every investment and operational node.
std::map<int, NodeScalars> ComputeNodeScalars(const CaseData& data,
                                              const stoch::PriceTree& prices,
                                              const mhsp::StrategicTree& tree);

// Annual profit of a retrofit source at a node, before the profit scale.
double AnnualProfit(const Technology& tech, const NodeScalars& node, double kappa);

struct ReorientModel {
  stoch::PriceTree prices;
  mhsp::StrategicTree tree;
  stoch::OperationalScenarioSet scenarios;
  std::map<int, NodeScalars> scalars;
  MasterModel master;
  mhsp::DecomposedProblem problem;
};

// Throws DataError, ValidationError.
ReorientModel BuildModel(const CaseData& data, const ModelOptions& options = {});

}  // namespace reorient::model

#endif  // REORIENT_MODEL_BUILDER_H_
