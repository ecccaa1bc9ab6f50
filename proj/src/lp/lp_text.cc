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

#include "reorient/lp/lp_text.h"

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "reorient/errors.h"
#include "reorient/text.h"

namespace reorient::lp {
namespace {

std::string Label(const std::vector<std::string>& labels, int k) {
  if (static_cast<size_t>(k) >= labels.size() || labels[k].empty()) return "-";
  std::string out = labels[k];
  for (char& c : out) {
    if (c == ' ' || c == '\t' || c == '\n') c = '_';
  }
  return out;
}

using text::ParseNumber;

std::string Number(double v) { return text::FormatNumber(v); }

void Pad(std::ostream& out, const std::string& s, int width) {
  out << s;
  for (int k = static_cast<int>(s.size()); k < width; ++k) out << ' ';
}

}  // namespace

void WriteLpText(const LinearProgram& problem, std::ostream& out) {
  problem.Validate();
  out << "REORIENT-LP 1\n";
  out << "DIMS " << problem.num_rows() << ' ' << problem.num_columns() << '\n';
  out << "OFFSET " << Number(problem.objective_offset) << '\n';
  out << "COLUMNS\n";
  for (int j = 0; j < problem.num_columns(); ++j) {
    Pad(out, std::to_string(j), 8);
    Pad(out, Label(problem.column_labels, j), 32);
    Pad(out, Number(problem.objective[j]), 24);
    Pad(out, Number(problem.lower[j]), 24);
    out << Number(problem.upper[j]) << '\n';
  }
  out << "ROWS\n";
  for (int r = 0; r < problem.num_rows(); ++r) {
    Pad(out, std::to_string(r), 8);
    Pad(out, Label(problem.row_labels, r), 32);
    Pad(out, ToString(problem.senses[r]), 4);
    out << Number(problem.rhs[r]) << '\n';
  }
  out << "COEFFICIENTS\n";
  for (int r = 0; r < problem.num_rows(); ++r) {
    for (const Entry& e : problem.rows[r]) {
      Pad(out, std::to_string(r), 8);
      Pad(out, std::to_string(e.index), 8);
      out << Number(e.value) << '\n';
    }
  }
  out << "END\n";
}

LinearProgram ReadLpText(std::istream& in) {
  LinearProgram problem;
  std::string line;
  int line_no = 0;
  const auto next = [&]() -> std::istringstream {
    if (!std::getline(in, line)) throw ParseError("unexpected end of input", line_no);
    ++line_no;
    return std::istringstream(line);
  };
  const auto expect = [&](const std::string& keyword) {
    auto fields = next();
    std::string word;
    fields >> word;
    if (word != keyword) {
      throw ParseError("expected " + keyword + ", found '" + word + "'", line_no);
    }
    return fields;
  };
  auto header = expect("REORIENT-LP");
  int version = 0;
  header >> version;
  if (version != 1) throw ParseError("unsupported version", line_no);
  auto dims = expect("DIMS");
  int rows = -1;
  int cols = -1;
  dims >> rows >> cols;
  if (rows < 0 || cols < 0) throw ParseError("bad dimensions", line_no);
  auto offset = expect("OFFSET");
  std::string token;
  offset >> token;
  problem.objective_offset = ParseNumber(token, line_no);
  expect("COLUMNS");
  for (int j = 0; j < cols; ++j) {
    auto f = next();
    int index = -1;
    std::string label, cost, lo, hi;
    f >> index >> label >> cost >> lo >> hi;
    if (index != j || hi.empty()) throw ParseError("bad column record", line_no);
    problem.AddColumn(ParseNumber(cost, line_no), ParseNumber(lo, line_no),
                      ParseNumber(hi, line_no), label == "-" ? "" : label);
  }
  expect("ROWS");
  for (int r = 0; r < rows; ++r) {
    auto f = next();
    int index = -1;
    std::string label, sense, rhs;
    f >> index >> label >> sense >> rhs;
    if (index != r || rhs.empty()) throw ParseError("bad row record", line_no);
    RowSense parsed;
    if (sense == "<=") {
      parsed = RowSense::kLessEqual;
    } else if (sense == "=") {
      parsed = RowSense::kEqual;
    } else if (sense == ">=") {
      parsed = RowSense::kGreaterEqual;
    } else {
      throw ParseError("bad row sense '" + sense + "'", line_no);
    }
    problem.AddRow({}, parsed, ParseNumber(rhs, line_no),
                   label == "-" ? "" : label);
  }
  expect("COEFFICIENTS");
  while (true) {
    auto f = next();
    std::string first;
    f >> first;
    if (first == "END") break;
    int column = -1;
    std::string value;
    f >> column >> value;
    const int row = static_cast<int>(ParseNumber(first, line_no));
    if (row < 0 || row >= rows || column < 0 || column >= cols || value.empty()) {
      throw ParseError("bad coefficient record", line_no);
    }
    problem.rows[row].push_back({column, ParseNumber(value, line_no)});
  }
  problem.Validate();
  return problem;
}

}  // namespace reorient::lp
