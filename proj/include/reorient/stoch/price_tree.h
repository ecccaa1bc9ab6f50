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


#ifndef REORIENT_STOCH_PRICE_TREE_H_
#define REORIENT_STOCH_PRICE_TREE_H_

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "reorient/mhsp/tree.h"

namespace reorient::stoch {

struct NodePrice {
  double oil = 0.0;
  double gas = 0.0;
};

// Investment-node tree with oil and gas prices per node.
struct PriceTree {
  mhsp::StrategicTree tree;
  std::map<int, NodePrice> prices;
  std::vector<std::string> warnings;

  // Columns: node stage probability oil gas.
  void WritePrices(std::ostream& out) const;
};

struct TreeFitOptions {
  // Path periods between consecutive stages; stage s (0-based) reads period
  // 1 + s * stride.
  int stride = 1;
  // Oil price = oil_scale * path price; gas = gas_intercept + gas_slope * oil.
  double oil_scale = 1.0;
  double gas_intercept = 0.0;
  double gas_slope = 1.0;
  // Stochastic-approximation passes over the shuffled paths.
  int passes = 3;
};

// Price paths, one vector per path, all of equal length.
using PricePaths = std::vector<std::vector<double>>;

// Fits a tree with branching[s] children per stage-s node (branching[0] is
// the root and must be 1). Children start at the stage mean and at randomly
// drawn path values; paths descend to the nearest child, which moves toward
// the path value with step 1/(hits+1). A final pass assigns every path,
// sets each node to the mean of its paths and its probability to their
// fraction. Unused children are dropped with a warning.
PriceTree BuildPriceTree(const PricePaths& paths, const std::vector<int>& branching,
                         uint64_t seed, const TreeFitOptions& options = {});

// Removes zero-probability nodes and their descendants.
PriceTree ReduceTree(const PriceTree& tree);

// Adds one operational node per investment node (id = largest id + 1 + k in
// investment order) carrying `scenario_count` uniform scenario weights.
mhsp::StrategicTree AttachOperationalNodes(const mhsp::StrategicTree& tree,
                                           int scenario_count);

}  // namespace reorient::stoch

#endif  // REORIENT_STOCH_PRICE_TREE_H_
