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


#include "reorient/mhsp/tree.h"

#include <algorithm>
#include <cmath>
#include <deque>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include "reorient/errors.h"
#include "reorient/text.h"

namespace reorient::mhsp {

const char* ToString(NodeKind kind) {
  return kind == NodeKind::kInvestment ? "investment" : "operational";
}

bool ValidationReport::Has(const std::string& rule) const {
  return std::any_of(issues.begin(), issues.end(),
                     [&](const TreeIssue& i) { return i.rule == rule; });
}

std::string ValidationReport::ToString() const {
  if (ok()) return "pass\n";
  std::ostringstream out;
  for (const TreeIssue& issue : issues) {
    out << issue.rule << " node=" << issue.node << " stage=" << issue.stage
        << ": " << issue.message << '\n';
  }
  return out.str();
}

StrategicTree::StrategicTree(std::vector<StrategicNode> nodes)
    : nodes_(std::move(nodes)) {
  for (int k = 0; k < num_nodes(); ++k) index_.emplace(nodes_[k].id, k);
}

StrategicTree StrategicTree::Uniform(const std::vector<int>& branching,
                                     int scenarios) {
  if (branching.empty()) throw ValidationError("branching must be nonempty");
  if (scenarios < 1) throw ValidationError("need at least one scenario");
  std::vector<StrategicNode> nodes;
  const std::vector<double> weights(scenarios, 1.0 / scenarios);
  std::vector<int> frontier{0};
  nodes.push_back({0, NodeKind::kInvestment, kNoAncestor, 1, 1.0, {}});
  for (size_t s = 1; s < branching.size(); ++s) {
    if (branching[s] < 1) throw ValidationError("branching counts must be >= 1");
    std::vector<int> next;
    for (int parent : frontier) {
      const double p = nodes[parent].probability / branching[s];
      for (int b = 0; b < branching[s]; ++b) {
        const int id = static_cast<int>(nodes.size());
        nodes.push_back({id, NodeKind::kInvestment, parent,
                         static_cast<int>(s) + 1, p, {}});
        next.push_back(id);
      }
    }
    frontier = std::move(next);
  }
  const int investment_count = static_cast<int>(nodes.size());
  for (int i = 0; i < investment_count; ++i) {
    nodes.push_back({static_cast<int>(nodes.size()), NodeKind::kOperational, i,
                     nodes[i].stage, nodes[i].probability, weights});
  }
  return StrategicTree(std::move(nodes)).Canonicalized();
}

const StrategicNode& StrategicTree::node(int id) const {
  auto it = index_.find(id);
  if (it == index_.end()) {
    throw StructuralError("unknown tree node " + std::to_string(id));
  }
  return nodes_[it->second];
}

std::vector<int> StrategicTree::Children(int id) const {
  std::vector<int> out;
  for (const StrategicNode& n : nodes_) {
    if (n.ancestor == id) out.push_back(n.id);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> StrategicTree::InvestmentPath(int id) const {
  std::vector<int> path;
  int current = OwningInvestmentNode(id);
  while (current != kNoAncestor) {
    if (static_cast<int>(path.size()) > num_nodes()) {
      throw StructuralError("cyclic ancestry at node " + std::to_string(id));
    }
    path.push_back(current);
    current = node(current).ancestor;
  }
  return path;
}

int StrategicTree::OwningInvestmentNode(int id) const {
  const StrategicNode& n = node(id);
  return n.kind == NodeKind::kInvestment ? n.id : n.ancestor;
}

int StrategicTree::NumStages() const {
  int stages = 0;
  for (const StrategicNode& n : nodes_) stages = std::max(stages, n.stage);
  return stages;
}

std::vector<int> StrategicTree::CanonicalOrder() const {
  std::map<int, std::vector<int>> children;
  std::vector<int> roots;
  for (const StrategicNode& n : nodes_) {
    if (n.ancestor == kNoAncestor) {
      roots.push_back(n.id);
    } else {
      children[n.ancestor].push_back(n.id);
    }
  }
  std::sort(roots.begin(), roots.end());
  for (auto& [id, list] : children) std::sort(list.begin(), list.end());

  std::vector<int> discovered;
  std::set<int> seen;
  std::deque<int> queue(roots.begin(), roots.end());
  while (!queue.empty()) {
    const int id = queue.front();
    queue.pop_front();
    if (!seen.insert(id).second) continue;
    discovered.push_back(id);
    for (int child : children[id]) queue.push_back(child);
  }
  std::vector<int> rest;
  for (const StrategicNode& n : nodes_) {
    if (!seen.count(n.id)) rest.push_back(n.id);
  }
  std::sort(rest.begin(), rest.end());
  discovered.insert(discovered.end(), rest.begin(), rest.end());

  std::stable_sort(discovered.begin(), discovered.end(), [&](int a, int b) {
    const StrategicNode& na = node(a);
    const StrategicNode& nb = node(b);
    if (na.stage != nb.stage) return na.stage < nb.stage;
    return na.kind == NodeKind::kInvestment && nb.kind == NodeKind::kOperational;
  });
  return discovered;
}

std::vector<int> StrategicTree::InvestmentNodes() const {
  std::vector<int> out;
  for (int id : CanonicalOrder()) {
    if (node(id).kind == NodeKind::kInvestment) out.push_back(id);
  }
  return out;
}

std::vector<int> StrategicTree::OperationalNodes() const {
  std::vector<int> out;
  for (int id : CanonicalOrder()) {
    if (node(id).kind == NodeKind::kOperational) out.push_back(id);
  }
  return out;
}

std::vector<int> StrategicTree::NodesAtStage(int stage, NodeKind kind) const {
  std::vector<int> out;
  for (int id : CanonicalOrder()) {
    const StrategicNode& n = node(id);
    if (n.stage == stage && n.kind == kind) out.push_back(id);
  }
  return out;
}

StrategicTree StrategicTree::Canonicalized() const {
  const std::vector<int> order = CanonicalOrder();
  std::unordered_map<int, int> renumber;
  for (int k = 0; k < static_cast<int>(order.size()); ++k) {
    renumber[order[k]] = k;
  }
  std::vector<StrategicNode> out;
  out.reserve(order.size());
  for (int id : order) {
    StrategicNode n = node(id);
    n.id = renumber.at(id);
    if (n.ancestor != kNoAncestor) {
      auto it = renumber.find(n.ancestor);
      n.ancestor = it == renumber.end() ? n.ancestor : it->second;
    }
    out.push_back(std::move(n));
  }
  return StrategicTree(std::move(out));
}

void StrategicTree::Write(std::ostream& out) const {
  out << "REORIENT-TREE 1\n";
  out << "# id kind ancestor stage probability scenario-weights...\n";
  for (const StrategicNode& n : nodes_) {
    out << n.id << ' ' << mhsp::ToString(n.kind) << ' ';
    if (n.ancestor == kNoAncestor) {
      out << '-';
    } else {
      out << n.ancestor;
    }
    out << ' ' << n.stage << ' ' << text::FormatNumber(n.probability);
    for (double w : n.scenario_weights) out << ' ' << text::FormatNumber(w);
    out << '\n';
  }
  out << "END\n";
}

StrategicTree StrategicTree::Read(std::istream& in) {
  std::string line;
  int line_no = 0;
  bool header = false;
  bool ended = false;
  std::vector<StrategicNode> nodes;
  while (std::getline(in, line)) {
    ++line_no;
    const std::vector<std::string> tok = text::Split(text::StripComment(line));
    if (tok.empty()) continue;
    if (!header) {
      if (tok.size() != 2 || tok[0] != "REORIENT-TREE" || tok[1] != "1") {
        throw ParseError("expected 'REORIENT-TREE 1'", line_no);
      }
      header = true;
      continue;
    }
    if (tok[0] == "END") {
      ended = true;
      break;
    }
    if (tok.size() < 5) throw ParseError("node record needs 5 fields", line_no);
    StrategicNode n;
    n.id = text::ParseInt(tok[0], line_no);
    if (tok[1] == "investment") {
      n.kind = NodeKind::kInvestment;
    } else if (tok[1] == "operational") {
      n.kind = NodeKind::kOperational;
    } else {
      throw ParseError("unknown node kind '" + tok[1] + "'", line_no);
    }
    n.ancestor = tok[2] == "-" ? kNoAncestor : text::ParseInt(tok[2], line_no);
    n.stage = text::ParseInt(tok[3], line_no);
    n.probability = text::ParseNumber(tok[4], line_no);
    for (size_t k = 5; k < tok.size(); ++k) {
      n.scenario_weights.push_back(text::ParseNumber(tok[k], line_no));
    }
    nodes.push_back(std::move(n));
  }
  if (!header) throw ParseError("empty tree document", line_no);
  if (!ended) throw ParseError("missing END", line_no);
  return StrategicTree(std::move(nodes));
}

ValidationReport ValidateTree(const StrategicTree& tree, double tolerance) {
  ValidationReport report;
  auto issue = [&](std::string rule, int node, int stage, std::string msg) {
    report.issues.push_back({std::move(rule), node, stage, std::move(msg)});
  };

  std::map<int, int> id_count;
  for (const StrategicNode& n : tree.nodes()) ++id_count[n.id];
  for (const auto& [id, count] : id_count) {
    if (count > 1) issue("duplicate-id", id, 0, "identifier used more than once");
  }

  int roots = 0;
  for (const StrategicNode& n : tree.nodes()) {
    if (n.ancestor == kNoAncestor) {
      ++roots;
      if (n.kind != NodeKind::kInvestment) {
        issue("root", n.id, n.stage, "root must be an investment node");
      }
      continue;
    }
    if (!tree.Contains(n.ancestor)) {
      issue("dangling-ancestor", n.id, n.stage,
            "ancestor " + std::to_string(n.ancestor) + " does not exist");
    }
  }
  if (roots != 1) {
    issue("root", kNoAncestor, 0,
          "expected exactly one root, found " + std::to_string(roots));
  }

  for (const StrategicNode& n : tree.nodes()) {
    std::set<int> visited{n.id};
    int current = n.ancestor;
    while (current != kNoAncestor && tree.Contains(current)) {
      if (!visited.insert(current).second) {
        issue("acyclicity", n.id, n.stage, "ancestry does not reach the root");
        break;
      }
      current = tree.node(current).ancestor;
    }
  }

  for (const StrategicNode& n : tree.nodes()) {
    if (!(n.probability > 0.0 && n.probability <= 1.0 + tolerance)) {
      issue("probability-range", n.id, n.stage, "probability outside (0, 1]");
    }
    if (n.kind == NodeKind::kOperational) {
      if (n.scenario_weights.empty()) {
        issue("scenario-weights", n.id, n.stage, "no operational scenarios");
      } else {
        double sum = 0.0;
        bool negative = false;
        for (double w : n.scenario_weights) {
          sum += w;
          negative |= w < 0.0;
        }
        if (negative || std::abs(sum - 1.0) > tolerance) {
          issue("scenario-weights", n.id, n.stage,
                "weights must be nonnegative and sum to 1, sum is " +
                    text::FormatNumber(sum));
        }
      }
    } else if (!n.scenario_weights.empty()) {
      issue("scenario-weights", n.id, n.stage,
            "investment nodes carry no scenario weights");
    }
    if (n.ancestor == kNoAncestor || !tree.Contains(n.ancestor)) continue;
    const StrategicNode& parent = tree.node(n.ancestor);
    if (parent.kind != NodeKind::kInvestment) {
      issue("placement", n.id, n.stage, "ancestor is an operational node");
    } else if (n.kind == NodeKind::kOperational && n.stage != parent.stage) {
      issue("placement", n.id, n.stage,
            "operational node must share the stage of its investment node");
    } else if (n.kind == NodeKind::kInvestment && n.stage != parent.stage + 1) {
      issue("placement", n.id, n.stage,
            "investment node must be one stage after its ancestor");
    }
  }

  std::map<std::pair<int, NodeKind>, double> stage_sum;
  for (const StrategicNode& n : tree.nodes()) {
    stage_sum[{n.stage, n.kind}] += n.probability;
  }
  for (const auto& [key, sum] : stage_sum) {
    if (std::abs(sum - 1.0) > tolerance) {
      issue("stage-probability", kNoAncestor, key.first,
            std::string(ToString(key.second)) + " probabilities sum to " +
                text::FormatNumber(sum));
    }
  }

  int last_stage = 0;
  for (const StrategicNode& n : tree.nodes()) {
    if (n.kind == NodeKind::kInvestment) last_stage = std::max(last_stage, n.stage);
  }
  std::set<int> has_successor;
  for (const StrategicNode& n : tree.nodes()) {
    if (n.kind == NodeKind::kInvestment && n.ancestor != kNoAncestor) {
      has_successor.insert(n.ancestor);
    }
  }
  for (const StrategicNode& n : tree.nodes()) {
    if (n.kind == NodeKind::kInvestment && n.stage < last_stage &&
        !has_successor.count(n.id)) {
      issue("successor", n.id, n.stage, "non-terminal node has no successor");
    }
  }
  return report;
}

}  // namespace reorient::mhsp
