// Copyright 2026 The posetgame Authors.
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

#ifndef POSETGAME_LP_H_
#define POSETGAME_LP_H_

#include <utility>
#include <vector>

#include "posetgame/rational.h"

namespace posetgame {

enum class RowSense { kLessEqual, kGreaterEqual, kEqual };

// maximize objective . x  subject to  rows,  x >= 0.
struct LinearProgram {
  struct Row {
    std::vector<std::pair<int, Rational>> terms;
    RowSense sense = RowSense::kLessEqual;
    Rational rhs;
  };

  int num_vars = 0;
  std::vector<Rational> objective;
  std::vector<Row> rows;

  int AddVariable(const Rational& cost) {
    objective.push_back(cost);
    return num_vars++;
  }
  int AddRow(std::vector<std::pair<int, Rational>> terms, RowSense sense,
             const Rational& rhs) {
    rows.push_back({std::move(terms), sense, rhs});
    return static_cast<int>(rows.size()) - 1;
  }
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

// Duals satisfy A^T y >= objective with y >= 0 on <= rows, y <= 0 on >=
// rows and y free on equality rows; at optimum rhs . y equals the objective.
struct LpSolution {
  LpStatus status = LpStatus::kInfeasible;
  Rational objective;
  std::vector<Rational> x;
  std::vector<Rational> duals;
};

// Two-phase dense tableau simplex in exact arithmetic with Bland's rule.
LpSolution SolveLp(const LinearProgram& lp);

}  // namespace posetgame

#endif  // POSETGAME_LP_H_
