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

#include "reorient/lp/linear_program.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <utility>

#include "reorient/errors.h"

namespace reorient::lp {

const char* ToString(RowSense sense) {
  switch (sense) {
    case RowSense::kLessEqual:
      return "<=";
    case RowSense::kEqual:
      return "=";
    case RowSense::kGreaterEqual:
      return ">=";
  }
  return "?";
}

int LinearProgram::AddColumn(double cost, double lo, double hi,
                             std::string label) {
  objective.push_back(cost);
  lower.push_back(lo);
  upper.push_back(hi);
  column_labels.push_back(std::move(label));
  return num_columns() - 1;
}

int LinearProgram::AddRow(std::vector<Entry> entries, RowSense sense,
                          double value, std::string label) {
  rows.push_back(std::move(entries));
  senses.push_back(sense);
  rhs.push_back(value);
  row_labels.push_back(std::move(label));
  return num_rows() - 1;
}

void LinearProgram::Canonicalize() {
  for (auto& row : rows) {
    std::map<int, double> merged;
    for (const Entry& e : row) merged[e.index] += e.value;
    row.clear();
    for (const auto& [index, value] : merged) {
      if (value != 0.0) row.push_back({index, value});
    }
  }
}

double LinearProgram::Coefficient(int row, int column) const {
  double sum = 0.0;
  for (const Entry& e : rows.at(row)) {
    if (e.index == column) sum += e.value;
  }
  return sum;
}

std::vector<double> LinearProgram::DenseRow(int row) const {
  std::vector<double> dense(num_columns(), 0.0);
  for (const Entry& e : rows.at(row)) dense[e.index] += e.value;
  return dense;
}

double LinearProgram::RowActivity(int row, std::span<const double> x) const {
  double sum = 0.0;
  for (const Entry& e : rows[row]) sum += e.value * x[e.index];
  return sum;
}

double LinearProgram::ObjectiveValue(std::span<const double> x) const {
  double sum = objective_offset;
  for (int j = 0; j < num_columns(); ++j) sum += objective[j] * x[j];
  return sum;
}

void LinearProgram::Validate() const {
  const size_t n = objective.size();
  if (lower.size() != n || upper.size() != n) {
    throw StructuralError("bound vectors do not match the column count");
  }
  if (!column_labels.empty() && column_labels.size() != n) {
    throw StructuralError("column label count does not match column count");
  }
  const size_t m = rows.size();
  if (senses.size() != m || rhs.size() != m) {
    throw StructuralError("row sense / right-hand side length mismatch");
  }
  if (!row_labels.empty() && row_labels.size() != m) {
    throw StructuralError("row label count does not match row count");
  }
  for (size_t j = 0; j < n; ++j) {
    if (std::isnan(objective[j]) || std::isnan(lower[j]) ||
        std::isnan(upper[j])) {
      throw StructuralError("NaN in column " + std::to_string(j));
    }
    if (lower[j] > upper[j]) {
      throw StructuralError("column " + std::to_string(j) +
                            " has lower bound above upper bound");
    }
  }
  for (size_t r = 0; r < m; ++r) {
    if (!std::isfinite(rhs[r])) {
      throw StructuralError("non-finite right-hand side in row " +
                            std::to_string(r));
    }
    for (const Entry& e : rows[r]) {
      if (e.index < 0 || static_cast<size_t>(e.index) >= n) {
        throw StructuralError("row " + std::to_string(r) +
                              " references column " + std::to_string(e.index) +
                              " out of range");
      }
      if (!std::isfinite(e.value)) {
        throw StructuralError("non-finite coefficient in row " +
                              std::to_string(r));
      }
    }
  }
}

void MixedIntegerProgram::Validate() const {
  base.Validate();
  for (int j : binary_columns) {
    if (j < 0 || j >= base.num_columns()) {
      throw StructuralError("binary column index out of range");
    }
    if (base.lower[j] < 0.0 || base.upper[j] > 1.0) {
      throw StructuralError("binary column " + std::to_string(j) +
                            " has bounds outside [0, 1]");
    }
  }
}

}  // namespace reorient::lp
