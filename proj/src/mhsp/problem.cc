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


#include "reorient/mhsp/problem.h"

#include <string>

#include "reorient/errors.h"

namespace reorient::mhsp {
namespace {

std::string Where(int node) { return "node " + std::to_string(node) + ": "; }

void Require(bool condition, int node, const std::string& what) {
  if (!condition) throw StructuralError(Where(node) + what);
}

double YLower(const OperationalScenario& s, int k) {
  return s.y_lower.empty() ? 0.0 : s.y_lower[k];
}

double YUpper(const OperationalScenario& s, int k) {
  return s.y_upper.empty() ? lp::kInfinity : s.y_upper[k];
}

}  // namespace

void MHSPProblem::Validate() const {
  const ValidationReport report = ValidateTree(tree);
  if (!report.ok()) throw StructuralError("invalid tree:\n" + report.ToString());
  for (int id : tree.InvestmentNodes()) {
    auto it = strategic.find(id);
    Require(it != strategic.end(), id, "missing strategic block");
    const StrategicBlock& b = it->second;
    const int n = b.num_columns();
    Require(static_cast<int>(b.lower.size()) == n &&
                static_cast<int>(b.upper.size()) == n,
            id, "bound lengths differ from cost length");
    Require(b.num_binaries >= 0 && b.num_binaries <= n, id,
            "binary count out of range");
    for (int k = 0; k < b.num_binaries; ++k) {
      Require(b.lower[k] >= 0.0 && b.upper[k] <= 1.0, id,
              "binary column bounds outside [0, 1]");
    }
    const int m = static_cast<int>(b.h.size());
    Require(b.w.rows == m && (m == 0 || b.w.cols == n), id,
            "W dimensions inconsistent");
    const int parent = tree.node(id).ancestor;
    if (parent == kNoAncestor) {
      Require(b.t_parent.empty(), id, "root block cannot reference an ancestor");
    } else if (!b.t_parent.empty()) {
      const int np = strategic.at(parent).num_columns();
      Require(b.t_parent.rows == m && b.t_parent.cols == np, id,
              "T dimensions inconsistent with ancestor");
    }
  }
  for (const auto& [id, block] : strategic) {
    Require(tree.Contains(id) &&
                tree.node(id).kind == NodeKind::kInvestment,
            id, "strategic block on a non-investment node");
  }
  for (int id : tree.OperationalNodes()) {
    auto it = operational.find(id);
    Require(it != operational.end(), id, "missing operational scenarios");
    const StrategicNode& node = tree.node(id);
    Require(it->second.size() == node.scenario_weights.size(), id,
            "scenario count differs from weight count");
    const int n = strategic.at(node.ancestor).num_columns();
    for (const OperationalScenario& s : it->second) {
      const int m = static_cast<int>(s.h.size());
      const int ny = s.num_columns();
      Require(s.w.rows == m && (m == 0 || s.w.cols == ny), id,
              "operational W dimensions inconsistent");
      Require(s.t.empty() || (s.t.rows == m && s.t.cols == n), id,
              "operational T dimensions inconsistent");
      Require(s.y_lower.empty() || static_cast<int>(s.y_lower.size()) == ny,
              id, "y lower bound length");
      Require(s.y_upper.empty() || static_cast<int>(s.y_upper.size()) == ny,
              id, "y upper bound length");
    }
  }
  for (const auto& [id, list] : operational) {
    Require(tree.Contains(id) &&
                tree.node(id).kind == NodeKind::kOperational,
            id, "operational block on a non-operational node");
  }
}

lp::MixedIntegerProgram DeterministicEquivalent(const MHSPProblem& problem) {
  problem.Validate();
  const StrategicTree& tree = problem.tree;
  lp::MixedIntegerProgram mip;
  lp::LinearProgram& lp = mip.base;

  std::map<int, int> first_x;
  for (int id : tree.InvestmentNodes()) {
    const StrategicBlock& b = problem.strategic.at(id);
    const double pi = tree.node(id).probability;
    first_x[id] = lp.num_columns();
    for (int k = 0; k < b.num_columns(); ++k) {
      const int col = lp.AddColumn(pi * b.cost[k], b.lower[k], b.upper[k],
                                   "x[" + std::to_string(id) + "," +
                                       std::to_string(k) + "]");
      if (k < b.num_binaries) mip.binary_columns.insert(col);
    }
  }
  for (int id : tree.InvestmentNodes()) {
    const StrategicBlock& b = problem.strategic.at(id);
    const int parent = tree.node(id).ancestor;
    for (int r = 0; r < b.w.rows; ++r) {
      std::vector<lp::Entry> row;
      for (int k = 0; k < b.w.cols; ++k) {
        if (b.w(r, k) != 0.0) row.push_back({first_x[id] + k, b.w(r, k)});
      }
      if (parent != kNoAncestor && !b.t_parent.empty()) {
        for (int k = 0; k < b.t_parent.cols; ++k) {
          if (b.t_parent(r, k) != 0.0) {
            row.push_back({first_x[parent] + k, b.t_parent(r, k)});
          }
        }
      }
      lp.AddRow(std::move(row), lp::RowSense::kLessEqual, b.h[r],
                "strategic[" + std::to_string(id) + "," + std::to_string(r) +
                    "]");
    }
  }
  for (int id : tree.OperationalNodes()) {
    const StrategicNode& node = tree.node(id);
    const int x0 = first_x[node.ancestor];
    const std::vector<OperationalScenario>& scenarios =
        problem.operational.at(id);
    for (size_t s = 0; s < scenarios.size(); ++s) {
      const OperationalScenario& sc = scenarios[s];
      const double weight = node.probability * node.scenario_weights[s];
      const int y0 = lp.num_columns();
      for (int k = 0; k < sc.num_columns(); ++k) {
        lp.AddColumn(weight * sc.q[k], YLower(sc, k), YUpper(sc, k),
                     "y[" + std::to_string(id) + "," + std::to_string(s) +
                         "," + std::to_string(k) + "]");
      }
      for (int r = 0; r < sc.w.rows; ++r) {
        std::vector<lp::Entry> row;
        if (!sc.t.empty()) {
          for (int k = 0; k < sc.t.cols; ++k) {
            if (sc.t(r, k) != 0.0) row.push_back({x0 + k, sc.t(r, k)});
          }
        }
        for (int k = 0; k < sc.w.cols; ++k) {
          if (sc.w(r, k) != 0.0) row.push_back({y0 + k, sc.w(r, k)});
        }
        lp.AddRow(std::move(row), lp::RowSense::kLessEqual, sc.h[r],
                  "operational[" + std::to_string(id) + "," +
                      std::to_string(s) + "," + std::to_string(r) + "]");
      }
    }
  }
  return mip;
}

}  // namespace reorient::mhsp
