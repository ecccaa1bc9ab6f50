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


#ifndef REORIENT_MHSP_TREE_H_
#define REORIENT_MHSP_TREE_H_

#include <iosfwd>
#include <string>
#include <unordered_map>
#include <vector>

namespace reorient::mhsp {

enum class NodeKind { kInvestment, kOperational };

const char* ToString(NodeKind kind);

inline constexpr int kNoAncestor = -1;

// A node of a multi-horizon tree. Investment nodes form the strategic tree;
// each operational node hangs off an investment node and carries the weights
// of its embedded operational scenarios. Probabilities are absolute.
struct StrategicNode {
  int id = 0;
  NodeKind kind = NodeKind::kInvestment;
  int ancestor = kNoAncestor;
  int stage = 1;
  double probability = 1.0;
  std::vector<double> scenario_weights;
};

struct TreeIssue {
  std::string rule;
  int node = kNoAncestor;
  int stage = 0;
  std::string message;
};

struct ValidationReport {
  std::vector<TreeIssue> issues;

  bool ok() const { return issues.empty(); }
  bool Has(const std::string& rule) const;
  std::string ToString() const;
};

class StrategicTree {
 public:
  StrategicTree() = default;
  // Stores the nodes as given; identifiers must be unique.
  explicit StrategicTree(std::vector<StrategicNode> nodes);

  // Root investment node with one operational node per investment node at
  // the same stage. branching[s] is the number of children of each stage-s
  // node (branching[0] is ignored; the root is unique). Probabilities split
  // evenly; each operational node gets `scenarios` equal weights.
  static StrategicTree Uniform(const std::vector<int>& branching,
                               int scenarios);

  const std::vector<StrategicNode>& nodes() const { return nodes_; }
  int num_nodes() const { return static_cast<int>(nodes_.size()); }
  bool Contains(int id) const { return index_.count(id) > 0; }
  const StrategicNode& node(int id) const;

  std::vector<int> Children(int id) const;
  // Investment ancestors of `id`, nearest first; includes `id` itself when it
  // is an investment node.
  std::vector<int> InvestmentPath(int id) const;
  // Investment node owning an operational node (identity for investment).
  int OwningInvestmentNode(int id) const;
  int NumStages() const;

  // Node identifiers in breadth-first stage order: by stage, investment
  // before operational, then by the order of the parent and the identifier.
  std::vector<int> CanonicalOrder() const;
  std::vector<int> InvestmentNodes() const;
  std::vector<int> OperationalNodes() const;
  std::vector<int> NodesAtStage(int stage, NodeKind kind) const;

  // Copy with identifiers renumbered 0..n-1 in canonical order.
  StrategicTree Canonicalized() const;

  void Write(std::ostream& out) const;
  // Throws ParseError.
  static StrategicTree Read(std::istream& in);

 private:
  std::vector<StrategicNode> nodes_;
  std::unordered_map<int, int> index_;
};

// Checks unique identifiers, a single investment root, acyclic ancestry,
// stage-wise probability sums, scenario weight sums, successor existence and
// the placement of operational nodes. Never throws.
ValidationReport ValidateTree(const StrategicTree& tree,
                              double tolerance = 1e-9);

}  // namespace reorient::mhsp

#endif  // REORIENT_MHSP_TREE_H_
