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


#include "reorient/mhsp/decomposition.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "reorient/errors.h"

namespace reorient::mhsp {
namespace {

double LinkValue(const std::vector<lp::Entry>& link, std::span<const double> v) {
  double sum = 0.0;
  for (const lp::Entry& e : link) sum += e.value * v[e.index];
  return sum;
}

bool SameEntries(const std::vector<std::vector<lp::Entry>>& a,
                 const std::vector<std::vector<lp::Entry>>& b) {
  if (a.size() != b.size()) return false;
  for (size_t r = 0; r < a.size(); ++r) {
    if (a[r].size() != b[r].size()) return false;
    for (size_t k = 0; k < a[r].size(); ++k) {
      if (a[r][k].index != b[r][k].index || a[r][k].value != b[r][k].value) {
        return false;
      }
    }
  }
  return true;
}

bool SameStructure(const SubproblemTemplate& a, const SubproblemTemplate& b) {
  return a.x_dimension == b.x_dimension && a.c_dimension == b.c_dimension &&
         a.structure.lower == b.structure.lower &&
         a.structure.upper == b.structure.upper &&
         a.structure.senses == b.structure.senses &&
         a.structure.rhs == b.structure.rhs &&
         SameEntries(a.structure.rows, b.structure.rows) &&
         SameEntries(a.rhs_links, b.rhs_links) &&
         SameEntries(a.upper_links, b.upper_links) &&
         SameEntries(a.cost_links, b.cost_links);
}

void CheckLinks(const std::vector<std::vector<lp::Entry>>& links, int expected,
                int dimension, const std::string& what,
                const std::string& name) {
  if (static_cast<int>(links.size()) != expected) {
    throw StructuralError(name + ": " + what + " link count mismatch");
  }
  for (const auto& list : links) {
    for (const lp::Entry& e : list) {
      if (e.index < 0 || e.index >= dimension || !std::isfinite(e.value)) {
        throw StructuralError(name + ": bad " + what + " link entry");
      }
    }
  }
}

}  // namespace

void SubproblemTemplate::ResizeLinks() {
  rhs_links.resize(structure.num_rows());
  upper_links.resize(structure.num_columns());
  cost_links.resize(structure.num_columns());
}

void SubproblemTemplate::Validate() const {
  structure.Validate();
  CheckLinks(rhs_links, structure.num_rows(), x_dimension, "rhs", name);
  CheckLinks(upper_links, structure.num_columns(), x_dimension, "upper", name);
  CheckLinks(cost_links, structure.num_columns(), c_dimension, "cost", name);
  for (int j = 0; j < structure.num_columns(); ++j) {
    if (!upper_links[j].empty() && !std::isfinite(structure.upper[j])) {
      throw StructuralError(name + ": linked upper bound needs a finite base");
    }
  }
  if (!special_x.empty() && static_cast<int>(special_x.size()) != x_dimension) {
    throw StructuralError(name + ": special point dimension");
  }
}

std::vector<std::string> SubproblemTemplate::OracleAssumptionIssues() const {
  std::vector<std::string> issues;
  for (int j = 0; j < structure.num_columns(); ++j) {
    if (structure.objective[j] != 0.0) {
      issues.push_back(name + ": column " + std::to_string(j) +
                       " has a cost not linked to c");
    }
    for (const lp::Entry& e : cost_links[j]) {
      if (e.value < 0.0 || structure.lower[j] < 0.0) {
        issues.push_back(name + ": cost-linked column " + std::to_string(j) +
                         " can have negative cost activity");
        break;
      }
    }
    for (const lp::Entry& e : upper_links[j]) {
      if (e.value < 0.0) {
        issues.push_back(name + ": upper bound of column " +
                         std::to_string(j) + " decreases in x");
      }
    }
  }
  for (int r = 0; r < structure.num_rows(); ++r) {
    for (const lp::Entry& e : rhs_links[r]) {
      const bool tightening =
          (structure.senses[r] == lp::RowSense::kLessEqual && e.value < 0.0) ||
          (structure.senses[r] == lp::RowSense::kGreaterEqual && e.value > 0.0);
      if (tightening) {
        issues.push_back(name + ": row " + std::to_string(r) +
                         " tightens as x grows");
      }
    }
  }
  if (static_cast<int>(special_x.size()) != x_dimension) {
    issues.push_back(name + ": special point not assigned");
  }
  return issues;
}

lp::LinearProgram BindTemplate(const SubproblemTemplate& tmpl,
                               std::span<const double> x,
                               std::span<const double> c) {
  if (static_cast<int>(x.size()) != tmpl.x_dimension ||
      static_cast<int>(c.size()) != tmpl.c_dimension) {
    throw StructuralError(tmpl.name + ": bind dimension mismatch (x " +
                          std::to_string(x.size()) + "/" +
                          std::to_string(tmpl.x_dimension) + ", c " +
                          std::to_string(c.size()) + "/" +
                          std::to_string(tmpl.c_dimension) + ")");
  }
  lp::LinearProgram bound = tmpl.structure;
  for (int j = 0; j < bound.num_columns(); ++j) {
    bound.objective[j] = LinkValue(tmpl.cost_links[j], c);
    if (!tmpl.upper_links[j].empty()) {
      bound.upper[j] += LinkValue(tmpl.upper_links[j], x);
      if (bound.upper[j] < bound.lower[j] &&
          bound.lower[j] - bound.upper[j] <= 1e-6 * (1.0 + std::abs(bound.lower[j]))) {
        bound.upper[j] = bound.lower[j];
      }
    }
  }
  for (int r = 0; r < bound.num_rows(); ++r) {
    bound.rhs[r] += LinkValue(tmpl.rhs_links[r], x);
  }
  return bound;
}

std::vector<double> OperationalLink::XValue(
    std::span<const double> master_x) const {
  std::vector<double> x(x_offsets);
  for (size_t k = 0; k < x.size(); ++k) {
    if (x_columns[k] >= 0) x[k] += master_x[x_columns[k]];
  }
  return x;
}

void DecomposedProblem::Validate() const {
  master.Validate();
  const int n = master.base.num_columns();
  std::set<int> betas;
  for (const SubproblemTemplate& t : templates) t.Validate();
  for (const OperationalLink& link : links) {
    const std::string where = "link '" + link.label + "': ";
    if (link.template_id < 0 ||
        link.template_id >= static_cast<int>(templates.size())) {
      throw StructuralError(where + "template out of range");
    }
    const SubproblemTemplate& t = templates[link.template_id];
    if (static_cast<int>(link.x_columns.size()) != t.x_dimension ||
        static_cast<int>(link.x_offsets.size()) != t.x_dimension ||
        static_cast<int>(link.cost.size()) != t.c_dimension) {
      throw StructuralError(where + "dimension mismatch with template");
    }
    for (int col : link.x_columns) {
      if (col >= n) throw StructuralError(where + "x column out of range");
    }
    if (link.beta_column < 0 || link.beta_column >= n ||
        !betas.insert(link.beta_column).second) {
      throw StructuralError(where + "beta column invalid or shared");
    }
    if (master.binary_columns.count(link.beta_column)) {
      throw StructuralError(where + "beta column marked binary");
    }
    if (!(link.weight >= 0.0)) throw StructuralError(where + "negative weight");
  }
}

double DecomposedProblem::StrategicCost(std::span<const double> master_x) const {
  double value = master.base.ObjectiveValue(master_x);
  for (const OperationalLink& link : links) {
    value -= master.base.objective[link.beta_column] * master_x[link.beta_column];
  }
  return value;
}

std::vector<std::string> DecomposedProblem::OracleAssumptionIssues() const {
  std::vector<std::string> issues;
  for (const SubproblemTemplate& t : templates) {
    for (std::string& s : t.OracleAssumptionIssues()) issues.push_back(std::move(s));
  }
  for (const OperationalLink& link : links) {
    const SubproblemTemplate& t = templates[link.template_id];
    if (static_cast<int>(t.special_x.size()) != t.x_dimension) continue;
    for (int k = 0; k < t.x_dimension; ++k) {
      const double lo = link.x_offsets[k] +
          (link.x_columns[k] >= 0 ? master.base.lower[link.x_columns[k]] : 0.0);
      if (lo < t.special_x[k] - 1e-9) {
        issues.push_back("link '" + link.label + "': x can fall below the " +
                         "special point in component " + std::to_string(k));
        break;
      }
    }
  }
  return issues;
}

void AssignSpecialPoints(DecomposedProblem& problem) {
  for (int t = 0; t < static_cast<int>(problem.templates.size()); ++t) {
    SubproblemTemplate& tmpl = problem.templates[t];
    std::vector<double> point(tmpl.x_dimension, lp::kInfinity);
    for (const OperationalLink& link : problem.links) {
      if (link.template_id != t) continue;
      for (int k = 0; k < tmpl.x_dimension; ++k) {
        const int col = link.x_columns[k];
        const double lo =
            link.x_offsets[k] + (col >= 0 ? problem.master.base.lower[col] : 0.0);
        point[k] = std::min(point[k], lo);
      }
    }
    for (int k = 0; k < tmpl.x_dimension; ++k) {
      if (!std::isfinite(point[k])) {
        if (point[k] > 0) {
          point[k] = 0.0;  // Unused component.
        } else {
          throw StructuralError(tmpl.name + ": component " + std::to_string(k) +
                                " has no finite lower bound");
        }
      }
    }
    tmpl.special_x = std::move(point);
  }
}

lp::MixedIntegerProgram Flatten(const DecomposedProblem& problem) {
  problem.Validate();
  lp::MixedIntegerProgram flat = problem.master;
  lp::LinearProgram& out = flat.base;
  for (const OperationalLink& link : problem.links) {
    const SubproblemTemplate& t = problem.templates[link.template_id];
    const lp::LinearProgram& s = t.structure;
    const int y0 = out.num_columns();
    auto x_terms = [&](const std::vector<lp::Entry>& l, double sign,
                       std::vector<lp::Entry>* row, double* rhs) {
      for (const lp::Entry& e : l) {
        *rhs += e.value * link.x_offsets[e.index];
        if (link.x_columns[e.index] >= 0) {
          row->push_back({link.x_columns[e.index], sign * e.value});
        }
      }
    };
    for (int j = 0; j < s.num_columns(); ++j) {
      const bool linked = !t.upper_links[j].empty();
      out.AddColumn(0.0, s.lower[j], linked ? lp::kInfinity : s.upper[j],
                    link.label + ":" + (s.column_labels.empty() ? std::to_string(j)
                                                                : s.column_labels[j]));
    }
    for (int j = 0; j < s.num_columns(); ++j) {
      if (t.upper_links[j].empty()) continue;
      std::vector<lp::Entry> row{{y0 + j, 1.0}};
      double rhs = s.upper[j];
      x_terms(t.upper_links[j], -1.0, &row, &rhs);
      out.AddRow(std::move(row), lp::RowSense::kLessEqual, rhs,
                 link.label + ":ub" + std::to_string(j));
    }
    for (int r = 0; r < s.num_rows(); ++r) {
      std::vector<lp::Entry> row;
      for (const lp::Entry& e : s.rows[r]) row.push_back({y0 + e.index, e.value});
      double rhs = s.rhs[r];
      x_terms(t.rhs_links[r], -1.0, &row, &rhs);
      out.AddRow(std::move(row), s.senses[r], rhs,
                 link.label + ":" + (s.row_labels.empty() ? std::to_string(r)
                                                          : s.row_labels[r]));
    }
    std::vector<lp::Entry> cost_row{{link.beta_column, 1.0}};
    for (int j = 0; j < s.num_columns(); ++j) {
      const double cost = LinkValue(t.cost_links[j], link.cost);
      if (cost != 0.0) cost_row.push_back({y0 + j, -cost});
    }
    out.AddRow(std::move(cost_row), lp::RowSense::kEqual, 0.0,
               link.label + ":cost");
  }
  return flat;
}

DecomposedProblem Decompose(const MHSPProblem& problem, double beta_lower) {
  problem.Validate();
  const StrategicTree& tree = problem.tree;
  DecomposedProblem out;
  out.beta_lower = beta_lower;
  lp::LinearProgram& master = out.master.base;

  std::map<int, int> first_x;
  for (int id : tree.InvestmentNodes()) {
    const StrategicBlock& b = problem.strategic.at(id);
    const double pi = tree.node(id).probability;
    first_x[id] = master.num_columns();
    for (int k = 0; k < b.num_columns(); ++k) {
      const int col = master.AddColumn(
          pi * b.cost[k], b.lower[k], b.upper[k],
          "x[" + std::to_string(id) + "," + std::to_string(k) + "]");
      if (k < b.num_binaries) out.master.binary_columns.insert(col);
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
      master.AddRow(std::move(row), lp::RowSense::kLessEqual, b.h[r],
                    "strategic[" + std::to_string(id) + "," +
                        std::to_string(r) + "]");
    }
  }

  for (int id : tree.OperationalNodes()) {
    const StrategicNode& node = tree.node(id);
    const std::vector<OperationalScenario>& scenarios =
        problem.operational.at(id);
    const int nx = problem.strategic.at(node.ancestor).num_columns();

    std::vector<int> components;
    for (int k = 0; k < nx; ++k) {
      bool used = false;
      for (const OperationalScenario& sc : scenarios) {
        for (int r = 0; r < sc.t.rows && !used; ++r) used = sc.t(r, k) != 0.0;
      }
      if (used) components.push_back(k);
    }

    SubproblemTemplate t;
    t.name = "node" + std::to_string(id);
    t.x_dimension = static_cast<int>(components.size());
    for (int k : components) t.x_labels.push_back("x" + std::to_string(k));
    OperationalLink link;
    link.tree_node = id;
    link.label = "op" + std::to_string(id);
    link.weight = node.probability;
    for (int k : components) {
      link.x_columns.push_back(first_x[node.ancestor] + k);
      link.x_offsets.push_back(0.0);
    }

    lp::LinearProgram& s = t.structure;
    for (size_t sc_index = 0; sc_index < scenarios.size(); ++sc_index) {
      const OperationalScenario& sc = scenarios[sc_index];
      const int y0 = s.num_columns();
      for (int k = 0; k < sc.num_columns(); ++k) {
        s.AddColumn(0.0, sc.y_lower.empty() ? 0.0 : sc.y_lower[k],
                    sc.y_upper.empty() ? lp::kInfinity : sc.y_upper[k],
                    "y[" + std::to_string(sc_index) + "," + std::to_string(k) +
                        "]");
        t.cost_links.push_back({{t.c_dimension, 1.0}});
        t.c_labels.push_back("q[" + std::to_string(sc_index) + "," +
                             std::to_string(k) + "]");
        link.cost.push_back(node.scenario_weights[sc_index] * sc.q[k]);
        ++t.c_dimension;
      }
      for (int r = 0; r < sc.w.rows; ++r) {
        std::vector<lp::Entry> row;
        for (int k = 0; k < sc.w.cols; ++k) {
          if (sc.w(r, k) != 0.0) row.push_back({y0 + k, sc.w(r, k)});
        }
        std::vector<lp::Entry> rhs_link;
        if (!sc.t.empty()) {
          for (int c = 0; c < t.x_dimension; ++c) {
            const double v = sc.t(r, components[c]);
            if (v != 0.0) rhs_link.push_back({c, -v});
          }
        }
        s.AddRow(std::move(row), lp::RowSense::kLessEqual, sc.h[r]);
        t.rhs_links.push_back(std::move(rhs_link));
      }
    }
    t.upper_links.assign(s.num_columns(), {});

    link.template_id = -1;
    for (int k = 0; k < static_cast<int>(out.templates.size()); ++k) {
      if (SameStructure(out.templates[k], t)) {
        link.template_id = k;
        break;
      }
    }
    if (link.template_id < 0) {
      link.template_id = static_cast<int>(out.templates.size());
      out.templates.push_back(std::move(t));
    }
    link.beta_column = master.AddColumn(node.probability, beta_lower,
                                        lp::kInfinity,
                                        "beta[" + std::to_string(id) + "]");
    out.links.push_back(std::move(link));
  }
  AssignSpecialPoints(out);
  out.Validate();
  return out;
}

}  // namespace reorient::mhsp
