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


#ifndef REORIENT_MHSP_PROBLEM_H_
#define REORIENT_MHSP_PROBLEM_H_

#include <map>
#include <vector>

#include "reorient/lp/linear_program.h"
#include "reorient/mhsp/tree.h"

namespace reorient::mhsp {

// Row-major dense matrix.
struct DenseMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<double> data;

  DenseMatrix() = default;
  DenseMatrix(int r, int c) : rows(r), cols(c), data(size_t(r) * c, 0.0) {}

  double& operator()(int r, int c) { return data[size_t(r) * cols + c]; }
  double operator()(int r, int c) const { return data[size_t(r) * cols + c]; }
  bool empty() const { return rows == 0; }
};

// Strategic block of an investment node i:
//   T_parent x_{I_i} + W x_i <= h   (root: W x_1 <= h).
// The first `num_binaries` columns are binary.
struct StrategicBlock {
  std::vector<double> cost;
  std::vector<double> lower;
  std::vector<double> upper;
  int num_binaries = 0;
  DenseMatrix t_parent;
  DenseMatrix w;
  std::vector<double> h;

  int num_columns() const { return static_cast<int>(cost.size()); }
};

// One operational scenario s of an operational node:
//   T x_i + W y_s <= h,  y_lower <= y_s <= y_upper,  cost q^T y_s.
struct OperationalScenario {
  DenseMatrix t;
  DenseMatrix w;
  std::vector<double> h;
  std::vector<double> q;
  std::vector<double> y_lower;
  std::vector<double> y_upper;

  int num_columns() const { return static_cast<int>(q.size()); }
};

struct MHSPProblem {
  StrategicTree tree;
  std::map<int, StrategicBlock> strategic;
  std::map<int, std::vector<OperationalScenario>> operational;

  // Throws StructuralError on dimension mismatches or missing blocks.
  void Validate() const;
};

// Monolithic MILP of the whole tree. Columns follow the canonical node
// order: each investment node's x_i, then each operational node's y_is by
// scenario. Column labels are "x[node,k]" and "y[node,s,k]".
lp::MixedIntegerProgram DeterministicEquivalent(const MHSPProblem& problem);

}  // namespace reorient::mhsp

#endif  // REORIENT_MHSP_PROBLEM_H_
