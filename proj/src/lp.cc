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

#include "posetgame/lp.h"

#include <vector>

namespace posetgame {
namespace {

class Tableau {
 public:
  Tableau(int rows, int cols)
      : rows_(rows),
        cols_(cols),
        cells_(static_cast<size_t>(rows) * (cols + 1)),
        reduced_(cols + 1),
        basis_(rows, -1) {}

  Rational& at(int r, int c) { return cells_[Index(r, c)]; }
  const Rational& at(int r, int c) const { return cells_[Index(r, c)]; }
  Rational& rhs(int r) { return at(r, cols_); }
  int& basis(int r) { return basis_[r]; }
  int basis(int r) const { return basis_[r]; }

  // Sets reduced costs c_j - c_B B^-1 A_j for the given costs.
  void Price(const std::vector<Rational>& cost) {
    for (int c = 0; c <= cols_; ++c) {
      reduced_[c] = c < cols_ ? cost[c] : Rational(0);
    }
    for (int r = 0; r < rows_; ++r) {
      const Rational& cb = cost[basis_[r]];
      if (IsZero(cb)) continue;
      for (int c = 0; c <= cols_; ++c) {
        const Rational& v = at(r, c);
        if (!IsZero(v)) reduced_[c] -= cb * v;
      }
    }
  }

  void Pivot(int pr, int pc) {
    const Rational inv = 1 / at(pr, pc);
    for (int c = 0; c <= cols_; ++c) {
      Rational& v = at(pr, c);
      if (!IsZero(v)) v *= inv;
    }
    for (int r = 0; r < rows_; ++r) {
      if (r == pr) continue;
      const Rational factor = at(r, pc);
      if (IsZero(factor)) continue;
      for (int c = 0; c <= cols_; ++c) {
        const Rational& v = at(pr, c);
        if (!IsZero(v)) at(r, c) -= factor * v;
      }
    }
    const Rational factor = reduced_[pc];
    if (!IsZero(factor)) {
      for (int c = 0; c <= cols_; ++c) {
        const Rational& v = at(pr, c);
        if (!IsZero(v)) reduced_[c] -= factor * v;
      }
    }
    basis_[pr] = pc;
  }

  // Runs Bland's rule over columns with allowed[c]. Returns false when
  // unbounded.
  bool Optimize(const std::vector<char>& allowed) {
    while (true) {
      int enter = -1;
      for (int c = 0; c < cols_; ++c) {
        if (allowed[c] && IsPositive(reduced_[c])) {
          enter = c;
          break;
        }
      }
      if (enter < 0) return true;
      int leave = -1;
      Rational best;
      for (int r = 0; r < rows_; ++r) {
        const Rational& a = at(r, enter);
        if (!IsPositive(a)) continue;
        const Rational ratio = rhs(r) / a;
        if (leave < 0 || ratio < best ||
            (ratio == best && basis_[r] < basis_[leave])) {
          leave = r;
          best = ratio;
        }
      }
      if (leave < 0) return false;
      Pivot(leave, enter);
    }
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

 private:
  size_t Index(int r, int c) const {
    return static_cast<size_t>(r) * (cols_ + 1) + c;
  }

  int rows_;
  int cols_;
  std::vector<Rational> cells_;
  std::vector<Rational> reduced_;
  std::vector<int> basis_;
};

}  // namespace

LpSolution SolveLp(const LinearProgram& lp) {
  const int m = static_cast<int>(lp.rows.size());
  const int n = lp.num_vars;

  // Column layout: structural, then one slack or surplus per inequality
  // row, then one artificial per >= or = row.
  std::vector<char> flipped(m, 0);
  std::vector<RowSense> sense(m);
  int slack_count = 0, artificial_count = 0;
  for (int i = 0; i < m; ++i) {
    sense[i] = lp.rows[i].sense;
    if (IsNegative(lp.rows[i].rhs)) {
      flipped[i] = 1;
      if (sense[i] == RowSense::kLessEqual) {
        sense[i] = RowSense::kGreaterEqual;
      } else if (sense[i] == RowSense::kGreaterEqual) {
        sense[i] = RowSense::kLessEqual;
      }
    }
    if (sense[i] != RowSense::kEqual) ++slack_count;
    if (sense[i] != RowSense::kLessEqual) ++artificial_count;
  }
  const int cols = n + slack_count + artificial_count;
  const int first_artificial = n + slack_count;
  Tableau tab(m, cols);
  std::vector<int> identity_col(m);
  int next_slack = n, next_artificial = first_artificial;
  for (int i = 0; i < m; ++i) {
    const Rational sign = flipped[i] ? -1 : 1;
    for (const auto& [j, a] : lp.rows[i].terms) tab.at(i, j) += sign * a;
    tab.rhs(i) = sign * lp.rows[i].rhs;
    if (sense[i] == RowSense::kLessEqual) {
      tab.at(i, next_slack) = 1;
      identity_col[i] = next_slack++;
    } else {
      if (sense[i] == RowSense::kGreaterEqual) tab.at(i, next_slack++) = -1;
      tab.at(i, next_artificial) = 1;
      identity_col[i] = next_artificial++;
    }
    tab.basis(i) = identity_col[i];
  }

  LpSolution solution;
  std::vector<char> allowed(cols, 1);
  if (artificial_count > 0) {
    std::vector<Rational> phase1(cols);
    for (int c = first_artificial; c < cols; ++c) phase1[c] = -1;
    tab.Price(phase1);
    tab.Optimize(allowed);
    for (int r = 0; r < m; ++r) {
      if (tab.basis(r) >= first_artificial && IsPositive(tab.rhs(r))) {
        solution.status = LpStatus::kInfeasible;
        return solution;
      }
    }
    // Drive zero-level artificials out of the basis where possible; rows
    // where this fails are redundant and never change again.
    for (int r = 0; r < m; ++r) {
      if (tab.basis(r) < first_artificial) continue;
      for (int c = 0; c < first_artificial; ++c) {
        if (!IsZero(tab.at(r, c))) {
          tab.Pivot(r, c);
          break;
        }
      }
    }
    for (int c = first_artificial; c < cols; ++c) allowed[c] = 0;
  }

  std::vector<Rational> cost(cols);
  for (int j = 0; j < n; ++j) cost[j] = lp.objective[j];
  tab.Price(cost);
  if (!tab.Optimize(allowed)) {
    solution.status = LpStatus::kUnbounded;
    return solution;
  }

  solution.status = LpStatus::kOptimal;
  solution.x.assign(n, 0);
  for (int r = 0; r < m; ++r) {
    const int b = tab.basis(r);
    if (b < n) solution.x[b] = tab.rhs(r);
    solution.objective += cost[b] * tab.rhs(r);
  }
  solution.duals.assign(m, 0);
  for (int i = 0; i < m; ++i) {
    Rational y = 0;
    for (int r = 0; r < m; ++r) {
      const Rational& cb = cost[tab.basis(r)];
      if (!IsZero(cb)) y += cb * tab.at(r, identity_col[i]);
    }
    solution.duals[i] = flipped[i] ? Rational(-y) : y;
  }
  return solution;
}

}  // namespace posetgame
