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

#ifndef REORIENT_LP_LINEAR_PROGRAM_H_
#define REORIENT_LP_LINEAR_PROGRAM_H_

#include <cstdint>
#include <limits>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace reorient::lp {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

enum class RowSense { kLessEqual, kEqual, kGreaterEqual };

const char* ToString(RowSense sense);

struct Entry {
  int index = 0;
  double value = 0.0;
};

// Minimization problem
//
//   min  c'x + offset
//   s.t. a_r'x  (<=|=|>=)  b_r     for every row r
//        lower <= x <= upper
//
// The coefficient matrix is conceptually dense; rows are held as (column,
// value) lists because the models built on top of it are mostly zeros.
// Coefficient() and DenseRow() give the dense view.
struct LinearProgram {
  std::vector<double> objective;
  std::vector<double> lower;
  std::vector<double> upper;
  std::vector<std::string> column_labels;

  std::vector<std::vector<Entry>> rows;
  std::vector<RowSense> senses;
  std::vector<double> rhs;
  std::vector<std::string> row_labels;

  double objective_offset = 0.0;

  int num_rows() const { return static_cast<int>(rows.size()); }
  int num_columns() const { return static_cast<int>(objective.size()); }

  int AddColumn(double cost, double lo, double hi, std::string label = {});
  int AddRow(std::vector<Entry> entries, RowSense sense, double value,
             std::string label = {});

  // Sums duplicate column entries and drops exact zeros in every row.
  void Canonicalize();

  double Coefficient(int row, int column) const;
  std::vector<double> DenseRow(int row) const;
  double RowActivity(int row, std::span<const double> x) const;
  double ObjectiveValue(std::span<const double> x) const;

  // Throws StructuralError when the invariants of the type are violated:
  // matching lengths, column indices in range, lower <= upper, no NaNs.
  void Validate() const;
};

struct MixedIntegerProgram {
  LinearProgram base;
  std::set<int> binary_columns;

  void Validate() const;
};

// Default tolerances of the numerical kernel. All solvers take them
// explicitly so callers can tighten or loosen them per call.
struct ToleranceConfig {
  double feasibility = 1e-7;
  double optimality = 1e-7;
  double integrality = 1e-6;
  double pivot = 1e-9;
  // Branch-and-bound prunes a node when its bound is within this much of the
  // incumbent: max(absolute_gap, relative_gap * |incumbent|).
  double absolute_gap = 1e-6;
  double relative_gap = 1e-9;
  int max_binaries = 64;
  int max_branch_nodes = 200000;
  // Consecutive degenerate pivots before switching to Bland's rule.
  int degenerate_streak = 50;
  int refactor_interval = 100;
  // 0 selects an automatic budget proportional to the problem size.
  int64_t max_iterations = 0;
};

}  // namespace reorient::lp

#endif  // REORIENT_LP_LINEAR_PROGRAM_H_
