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

#ifndef REORIENT_LP_LP_TEXT_H_
#define REORIENT_LP_LP_TEXT_H_

#include <iosfwd>

#include "reorient/lp/linear_program.h"

namespace reorient::lp {

// Plain-text dump of a LinearProgram for debugging. Layout:
//
//   REORIENT-LP 1
//   DIMS <rows> <columns>
//   OFFSET <value>
//   COLUMNS
//   <index> <label> <cost> <lower> <upper>        one line per column
//   ROWS
//   <index> <label> <sense> <rhs>                 sense is <=, = or >=
//   COEFFICIENTS
//   <row> <column> <value>                        nonzeros, row-major
//   END
//
// Fields are padded to fixed widths (index 8, label 32, numbers 24) and
// numbers are printed with 17 significant digits, so ReadLpText(WriteLpText)
// reproduces the problem bit for bit. Empty labels are written as "-";
// whitespace inside labels becomes '_'. Infinite bounds print as inf/-inf.
void WriteLpText(const LinearProgram& problem, std::ostream& out);
LinearProgram ReadLpText(std::istream& in);

}  // namespace reorient::lp

#endif  // REORIENT_LP_LP_TEXT_H_
