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


#ifndef REORIENT_MHSP_DECOMPOSITION_H_
#define REORIENT_MHSP_DECOMPOSITION_H_

#include <span>
#include <string>
#include <vector>

#include "reorient/lp/linear_program.h"
#include "reorient/mhsp/problem.h"

namespace reorient::mhsp {

// Operational subproblem g(x, c) = min { cost(c)^T y : rows(x), bounds(x) }
// in parametric form. Row right-hand sides and column upper bounds are
// affine in x; every objective coefficient is linear in c, so g is
// positively homogeneous in c.
struct SubproblemTemplate {
  std::string name;
  // Rows, senses, base right-hand sides and base bounds. The objective of
  // this program is ignored; costs come from `cost_links`.
  lp::LinearProgram structure;
  int x_dimension = 0;
  int c_dimension = 0;
  // rhs[r] = structure.rhs[r] + sum_k coef * x[k], one list per row.
  std::vector<std::vector<lp::Entry>> rhs_links;
  // upper[j] = structure.upper[j] + sum_k coef * x[k], one list per column.
  std::vector<std::vector<lp::Entry>> upper_links;
  // cost[j] = sum_k coef * c[k], one list per column.
  std::vector<std::vector<lp::Entry>> cost_links;
  // The special point x; every linked node's x is componentwise above it.
  std::vector<double> special_x;
  std::vector<std::string> x_labels;
  std::vector<std::string> c_labels;

  // Sizes the link lists to the structure.
  void ResizeLinks();
  // Throws StructuralError.
  void Validate() const;
  // Sign conditions under which g is nonincreasing in x and nondecreasing in
  // c (both oracles rely on them). Equality rows are not checked; a builder
  // that links them must provide free disposal. Empty means satisfied.
  std::vector<std::string> OracleAssumptionIssues() const;
};

// Parameter substitution only: same rows and columns as the structure.
lp::LinearProgram BindTemplate(const SubproblemTemplate& tmpl,
                               std::span<const double> x,
                               std::span<const double> c);

// An operational node of the decomposition. Component k of the node's x is
// x_offsets[k] plus the master column x_columns[k] when that is >= 0.
struct OperationalLink {
  int tree_node = kNoAncestor;
  std::string label;
  int template_id = 0;
  int beta_column = -1;
  double weight = 0.0;
  std::vector<int> x_columns;
  std::vector<double> x_offsets;
  std::vector<double> cost;

  std::vector<double> XValue(std::span<const double> master_x) const;
};

struct DecomposedProblem {
  // Strategic MILP. Its objective is f(x) + sum_i weight_i beta_i.
  lp::MixedIntegerProgram master;
  std::vector<SubproblemTemplate> templates;
  std::vector<OperationalLink> links;
  double beta_lower = 0.0;

  void Validate() const;
  // f(x): the master objective without the beta terms.
  double StrategicCost(std::span<const double> master_x) const;
  std::vector<std::string> OracleAssumptionIssues() const;
};

// Sets each template's special point to the componentwise minimum, over the
// nodes using it, of offset plus the master column's lower bound.
// Throws StructuralError when that minimum is unbounded.
void AssignSpecialPoints(DecomposedProblem& problem);

// Monolithic MILP: the master plus one copy of every node's subproblem with
// x replaced by master columns and beta_i tied to the node's operational
// cost. Columns of the master keep their indices.
lp::MixedIntegerProgram Flatten(const DecomposedProblem& problem);

// Splits an MHSP problem into strategic master and operational templates.
// Nodes whose scenario data coincide share a template.
DecomposedProblem Decompose(const MHSPProblem& problem,
                            double beta_lower = 0.0);

}  // namespace reorient::mhsp

#endif  // REORIENT_MHSP_DECOMPOSITION_H_
