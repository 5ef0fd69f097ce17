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

#include <random>

#include "gtest/gtest.h"
#include "test_support.h"

namespace posetgame {
namespace {

using ::posetgame::testing::Q;

TEST(SolveLpTest, SmallMaximization) {
  // max 3x + 2y  s.t.  x + y <= 4,  x + 3y <= 6,  x <= 3.
  LinearProgram lp;
  const int x = lp.AddVariable(Q("3"));
  const int y = lp.AddVariable(Q("2"));
  lp.AddRow({{x, Q("1")}, {y, Q("1")}}, RowSense::kLessEqual, Q("4"));
  lp.AddRow({{x, Q("1")}, {y, Q("3")}}, RowSense::kLessEqual, Q("6"));
  lp.AddRow({{x, Q("1")}}, RowSense::kLessEqual, Q("3"));
  const LpSolution solution = SolveLp(lp);
  ASSERT_EQ(solution.status, LpStatus::kOptimal);
  EXPECT_EQ(solution.objective, 11);
  EXPECT_EQ(solution.x, (std::vector<Rational>{Q("3"), Q("1")}));
  EXPECT_EQ(solution.duals, (std::vector<Rational>{Q("2"), Q("0"), Q("1")}));
}

TEST(SolveLpTest, InfeasibleAndUnbounded) {
  LinearProgram infeasible;
  const int x = infeasible.AddVariable(Q("1"));
  infeasible.AddRow({{x, Q("1")}}, RowSense::kLessEqual, Q("1"));
  infeasible.AddRow({{x, Q("1")}}, RowSense::kGreaterEqual, Q("2"));
  EXPECT_EQ(SolveLp(infeasible).status, LpStatus::kInfeasible);

  LinearProgram unbounded;
  const int y = unbounded.AddVariable(Q("1"));
  unbounded.AddRow({{y, Q("1")}}, RowSense::kGreaterEqual, Q("1"));
  EXPECT_EQ(SolveLp(unbounded).status, LpStatus::kUnbounded);
}

TEST(SolveLpTest, EqualityAndNegativeRhs) {
  // max -x - y  s.t.  x - y = -1,  x + y >= 3.
  LinearProgram lp;
  const int x = lp.AddVariable(Q("-1"));
  const int y = lp.AddVariable(Q("-1"));
  lp.AddRow({{x, Q("1")}, {y, Q("-1")}}, RowSense::kEqual, Q("-1"));
  lp.AddRow({{x, Q("1")}, {y, Q("1")}}, RowSense::kGreaterEqual, Q("3"));
  const LpSolution solution = SolveLp(lp);
  ASSERT_EQ(solution.status, LpStatus::kOptimal);
  EXPECT_EQ(solution.objective, -3);
  EXPECT_EQ(solution.x, (std::vector<Rational>{Q("1"), Q("2")}));
}

TEST(SolveLpTest, RedundantEqualities) {
  LinearProgram lp;
  const int x = lp.AddVariable(Q("1"));
  const int y = lp.AddVariable(Q("1"));
  lp.AddRow({{x, Q("1")}, {y, Q("1")}}, RowSense::kEqual, Q("2"));
  lp.AddRow({{x, Q("2")}, {y, Q("2")}}, RowSense::kEqual, Q("4"));
  lp.AddRow({{x, Q("1")}}, RowSense::kLessEqual, Q("1"));
  const LpSolution solution = SolveLp(lp);
  ASSERT_EQ(solution.status, LpStatus::kOptimal);
  EXPECT_EQ(solution.objective, 2);
}

// Dual feasibility and strong duality in the documented sign convention.
void ExpectDualCertificate(const LinearProgram& lp, const LpSolution& s) {
  std::vector<Rational> reduced = lp.objective;
  Rational dual_objective = 0;
  for (size_t i = 0; i < lp.rows.size(); ++i) {
    const LinearProgram::Row& row = lp.rows[i];
    const Rational& y = s.duals[i];
    if (row.sense == RowSense::kLessEqual) EXPECT_GE(y, 0);
    if (row.sense == RowSense::kGreaterEqual) EXPECT_LE(y, 0);
    for (const auto& [j, v] : row.terms) reduced[j] -= v * y;
    dual_objective += row.rhs * y;
  }
  for (const Rational& r : reduced) EXPECT_LE(r, 0);
  EXPECT_EQ(dual_objective, s.objective);
}

TEST(SolveLpPropertyTest, MatchesVertexEnumeration) {
  std::mt19937_64 rng(53);
  std::uniform_int_distribution<int> vars(1, 4), rows(1, 5), sense(0, 5);
  std::bernoulli_distribution sparse(0.3);
  int optimal = 0;
  for (int trial = 0; trial < 400; ++trial) {
    LinearProgram lp;
    const int n = vars(rng);
    for (int j = 0; j < n; ++j) {
      lp.AddVariable(testing::RandomRational(rng, -4, 4, 2));
    }
    const int m = rows(rng);
    for (int i = 0; i < m; ++i) {
      std::vector<std::pair<int, Rational>> terms;
      for (int j = 0; j < n; ++j) {
        if (!sparse(rng)) terms.emplace_back(j, testing::RandomRational(rng, -3, 4, 1));
      }
      const int kind = sense(rng);
      const RowSense row_sense = kind < 4   ? RowSense::kLessEqual
                                 : kind < 5 ? RowSense::kGreaterEqual
                                            : RowSense::kEqual;
      lp.AddRow(terms, row_sense, testing::RandomRational(rng, -2, 6, 2));
    }
    // A box keeps every instance bounded so that vertices decide the optimum.
    for (int j = 0; j < n; ++j) lp.AddRow({{j, Q("1")}}, RowSense::kLessEqual, Q("5"));
    SCOPED_TRACE(trial);
    const LpSolution solution = SolveLp(lp);
    const std::optional<Rational> expected = testing::VertexEnumerationOptimum(lp);
    if (!expected) {
      EXPECT_EQ(solution.status, LpStatus::kInfeasible);
      continue;
    }
    ASSERT_EQ(solution.status, LpStatus::kOptimal);
    EXPECT_EQ(solution.objective, *expected);
    ExpectDualCertificate(lp, solution);
    ++optimal;
  }
  EXPECT_GT(optimal, 100);
}

}  // namespace
}  // namespace posetgame
