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

#include "posetgame/circulation.h"

#include <random>

#include "gtest/gtest.h"
#include "posetgame/errors.h"
#include "posetgame/lp.h"
#include "test_support.h"

namespace posetgame {
namespace {

using ::posetgame::testing::TwoPathNetwork;
using ::posetgame::testing::Q;
using ::posetgame::testing::SingleEdgeNetwork;

int Edge(const FlowNetwork& network, const std::string& label) {
  return network.EdgeIndexByLabel(label);
}

// The edge program written out independently of the library, solved by
// vertex enumeration.
Rational OracleOptimum(const FlowNetwork& network) {
  LinearProgram lp;
  for (const NetworkEdge& edge : network.edges()) {
    lp.AddVariable((edge.from == network.s() ? Rational(1) : Rational(0)) -
                   edge.b / network.p1());
  }
  for (int e = 0; e < network.num_edges(); ++e) {
    const NetworkEdge& edge = network.edge(e);
    lp.AddRow({{e, Rational(1)}}, RowSense::kLessEqual,
              std::min<Rational>(edge.c, edge.d / network.p2()));
  }
  for (int v = 0; v < network.num_nodes(); ++v) {
    if (v == network.s() || v == network.t()) continue;
    std::vector<std::pair<int, Rational>> terms;
    for (int e : network.in_edges(v)) terms.emplace_back(e, Rational(1));
    for (int e : network.out_edges(v)) terms.emplace_back(e, Rational(-1));
    lp.AddRow(terms, RowSense::kEqual, Rational(0));
  }
  return *testing::VertexEnumerationOptimum(lp);
}

// Complementary slackness between an edge flow and its duals, plus dual
// feasibility along every path.
void ExpectComplementarySlackness(const FlowNetwork& network,
                                  const CirculationSolution& solution) {
  for (int e = 0; e < network.num_edges(); ++e) {
    const NetworkEdge& edge = network.edge(e);
    EXPECT_GE(solution.dual.rho[e], 0);
    EXPECT_GE(solution.dual.mu[e], 0);
    EXPECT_LE(solution.flow[e], edge.c);
    EXPECT_LE(solution.flow[e], edge.d / network.p2());
    if (IsPositive(solution.dual.rho[e])) {
      EXPECT_EQ(solution.flow[e], edge.d / network.p2());
    }
    if (IsPositive(solution.dual.mu[e])) EXPECT_EQ(solution.flow[e], edge.c);
  }
  const PathFlow paths = DecomposeFlow(network, solution.flow);
  for (const Path& path : EnumeratePaths(network)) {
    Rational covered = 0;
    for (int e : path) covered += solution.dual.rho[e] + solution.dual.mu[e];
    EXPECT_GE(covered, network.PathThreshold(path));
    if (paths.count(path)) EXPECT_EQ(covered, network.PathThreshold(path));
  }
}

Rational DualObjective(const FlowNetwork& network, const DualSolution& dual) {
  Rational value = 0;
  for (int e = 0; e < network.num_edges(); ++e) {
    value += network.edge(e).d / network.p2() * dual.rho[e] +
             network.edge(e).c * dual.mu[e];
  }
  return value;
}

TEST(SolveCirculationTest, TwoPath) {
  const FlowNetwork network = TwoPathNetwork();
  const CirculationSolution solution = SolveCirculation(network);
  EXPECT_EQ(solution.flow[Edge(network, "(s,1)")], 1);
  EXPECT_EQ(solution.flow[Edge(network, "(s,2)")], 1);
  EXPECT_EQ(solution.flow[Edge(network, "(2,1)")], 1);
  EXPECT_EQ(solution.flow[Edge(network, "(1,t)")], 2);
  EXPECT_EQ(solution.objective, Q("3/2"));
  EXPECT_EQ(solution.dual.rho[Edge(network, "(s,1)")], Q("1/10"));
  EXPECT_EQ(solution.dual.rho[Edge(network, "(1,t)")], Q("7/10"));
  for (const Rational& mu : solution.dual.mu) EXPECT_EQ(mu, 0);
  EXPECT_EQ(DualObjective(network, solution.dual), solution.objective);
  EXPECT_EQ(OracleOptimum(network), solution.objective);
  ExpectComplementarySlackness(network, solution);
}

TEST(SolveCirculationTest, SingleEdgeCapacityBinds) {
  // c = 1, d/p2 = 2, b/p1 = 1/2.
  const FlowNetwork network = SingleEdgeNetwork(Q("1"), Q("1"), Q("2"), Q("2"), Q("1"));
  const CirculationSolution solution = SolveCirculation(network);
  EXPECT_EQ(solution.flow[0], 1);
  EXPECT_EQ(solution.objective, Q("1/2"));
  EXPECT_EQ(OracleOptimum(network), Q("1/2"));
  EXPECT_EQ(solution.dual.mu[0], Q("1/2"));
  EXPECT_EQ(solution.dual.rho[0], 0);
}

TEST(SolveCirculationTest, UnprofitablePathsCarryNothing) {
  const FlowNetwork network = SingleEdgeNetwork(Q("1"), Q("3"), Q("2"), Q("2"), Q("1"));
  const CirculationSolution solution = SolveCirculation(network);
  EXPECT_EQ(solution.flow[0], 0);
  EXPECT_EQ(solution.objective, 0);
  EXPECT_EQ(solution.dual.rho[0], 0);
  EXPECT_EQ(solution.dual.mu[0], 0);
}

TEST(DecomposeFlowTest, TwoPath) {
  const FlowNetwork network = TwoPathNetwork();
  const PathFlow paths = DecomposeFlow(network, SolveCirculation(network).flow);
  ASSERT_EQ(paths.size(), 2u);
  EXPECT_EQ(paths.at(network.ParsePathKey("s->1->t")), 1);
  EXPECT_EQ(paths.at(network.ParsePathKey("s->2->1->t")), 1);
}

TEST(DecomposeFlowTest, ZeroAndSinglePath) {
  const FlowNetwork network = TwoPathNetwork();
  EXPECT_TRUE(DecomposeFlow(network, EdgeFlow(4)).empty());
  EdgeFlow flow(4);
  flow[Edge(network, "(s,1)")] = Q("3/2");
  flow[Edge(network, "(1,t)")] = Q("3/2");
  const PathFlow paths = DecomposeFlow(network, flow);
  EXPECT_EQ(paths, (PathFlow{{network.ParsePathKey("s->1->t"), Q("3/2")}}));
}

TEST(DecomposeFlowTest, RejectsNonConservingFlow) {
  const FlowNetwork network = TwoPathNetwork();
  EdgeFlow flow(4);
  flow[Edge(network, "(s,1)")] = 1;
  try {
    DecomposeFlow(network, flow);
    FAIL() << "expected NonConserving";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNonConserving);
  }
}

TEST(StrictlyComplementaryPairTest, TwoPath) {
  const FlowNetwork network = TwoPathNetwork();
  const ComplementaryPair pair = StrictlyComplementaryPair(network);
  EXPECT_TRUE(AuditStrictComplementarity(network, pair).empty());
  EXPECT_EQ(pair.objective, Q("3/2"));
  EXPECT_EQ(pair.flow, DecomposeFlow(network, SolveCirculation(network).flow));
  EXPECT_EQ(pair.dual.rho[Edge(network, "(s,1)")], Q("1/10"));
  EXPECT_EQ(pair.dual.rho[Edge(network, "(1,t)")], Q("7/10"));
  EXPECT_EQ(pair.dual.rho[Edge(network, "(s,2)")], 0);
  EXPECT_EQ(pair.dual.rho[Edge(network, "(2,1)")], 0);
}

TEST(StrictlyComplementaryPairTest, SingleEdge) {
  const FlowNetwork network = SingleEdgeNetwork(Q("1"), Q("1"), Q("2"), Q("2"), Q("1"));
  const ComplementaryPair pair = StrictlyComplementaryPair(network);
  EXPECT_TRUE(AuditStrictComplementarity(network, pair).empty());
  EXPECT_EQ(pair.flow.begin()->second, 1);
  EXPECT_EQ(pair.dual.rho[0], 0);
  EXPECT_EQ(pair.dual.mu[0], Q("1/2"));
}

TEST(StrictlyComplementaryPairTest, NegativeThresholds) {
  const FlowNetwork network = SingleEdgeNetwork(Q("1"), Q("3"), Q("2"), Q("2"), Q("1"));
  const ComplementaryPair pair = StrictlyComplementaryPair(network);
  EXPECT_TRUE(pair.flow.empty());
  EXPECT_TRUE(AuditStrictComplementarity(network, pair).empty());
}

TEST(StrictlyComplementaryPairTest, ZeroThresholdPathCarriesFlow) {
  // b = p1 makes the path worthless; some optimal flow still uses it, and
  // the dual slack is zero, so strict complementarity needs positive flow.
  const FlowNetwork network = SingleEdgeNetwork(Q("1"), Q("2"), Q("2"), Q("2"), Q("1"));
  const ComplementaryPair pair = StrictlyComplementaryPair(network);
  EXPECT_TRUE(AuditStrictComplementarity(network, pair).empty());
  ASSERT_EQ(pair.flow.size(), 1u);
  EXPECT_EQ(pair.flow.begin()->second, Q("1/2"));
  EXPECT_EQ(pair.objective, 0);
}

TEST(StrictlyComplementaryPairTest, PathCap) {
  try {
    StrictlyComplementaryPair(TwoPathNetwork(), {.path_cap = 1});
    FAIL() << "expected PathLimitExceeded";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kPathLimitExceeded);
  }
}

TEST(CirculationPropertyTest, RandomNetworks) {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 150; ++trial) {
    SCOPED_TRACE(trial);
    const FlowNetwork network = testing::RandomNetwork(rng, 6);
    const CirculationSolution solution = SolveCirculation(network);
    EXPECT_EQ(solution.objective, OracleOptimum(network));
    EXPECT_EQ(DualObjective(network, solution.dual), solution.objective);
    EXPECT_EQ(EdgeObjective(network, solution.flow), solution.objective);
    ExpectComplementarySlackness(network, solution);
    const PathFlow paths = DecomposeFlow(network, solution.flow);
    EXPECT_EQ(InducedEdgeFlow(network, paths), solution.flow);
    EXPECT_EQ(PathObjective(network, paths), solution.objective);

    const ComplementaryPair pair = StrictlyComplementaryPair(network);
    const std::vector<std::string> failures =
        AuditStrictComplementarity(network, pair);
    EXPECT_TRUE(failures.empty()) << failures.front();
    EXPECT_EQ(pair.objective, solution.objective);
    const ComplementaryPair serial =
        StrictlyComplementaryPair(network, {.serial = true});
    EXPECT_EQ(serial.flow, pair.flow);
    EXPECT_EQ(serial.dual.rho, pair.dual.rho);
    EXPECT_EQ(serial.dual.mu, pair.dual.mu);
  }
}

}  // namespace
}  // namespace posetgame
