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

// The circulation program behind the interdiction game: maximize
// F(f) - T(f)/p1 subject to f_e <= min(d_e/p2, c_e), in edge form, plus
// flow decomposition and a strictly complementary path-form pair.

#ifndef POSETGAME_CIRCULATION_H_
#define POSETGAME_CIRCULATION_H_

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "posetgame/network.h"
#include "posetgame/rational.h"

namespace posetgame {

// Edge flow indexed by edge.
using EdgeFlow = std::vector<Rational>;

// Sparse flow on s-t paths.
using PathFlow = std::map<Path, Rational>;

// Multipliers indexed by edge: rho on the d/p2 caps and mu on the
// capacities. Node potentials of the edge form telescope along paths and
// are not kept.
struct DualSolution {
  std::vector<Rational> rho;
  std::vector<Rational> mu;
};

struct CirculationSolution {
  EdgeFlow flow;
  DualSolution dual;
  Rational objective;
};

// Exact simplex on the edge formulation.
CirculationSolution SolveCirculation(const FlowNetwork& network);

// Edge flow induced by a path flow.
EdgeFlow InducedEdgeFlow(const FlowNetwork& network, const PathFlow& flow);

// F(f) - T(f)/p1 of an edge flow.
Rational EdgeObjective(const FlowNetwork& network, const EdgeFlow& flow);

// F(f) - T(f)/p1 of a path flow.
Rational PathObjective(const FlowNetwork& network, const PathFlow& flow);

// Repeatedly peels the lexicographically smallest path of positive-flow
// edges, subtracting its bottleneck. Throws Error(kNonConserving) when flow
// is not conserved at some interior node or is negative.
PathFlow DecomposeFlow(const FlowNetwork& network, const EdgeFlow& flow);

struct ComplementaryPair {
  std::vector<Path> paths;
  PathFlow flow;
  DualSolution dual;
  Rational objective;
};

struct ComplementaryOptions {
  int64_t path_cap = kDefaultPathCap;
  // Runs the secondary programs one after another.
  bool serial = false;
};

// Optimal path-form pair in the relative interior of both optimal faces:
// every variable or slack is positive in the returned pair whenever it is
// positive in some optimal solution. Throws Error(kPathLimitExceeded).
ComplementaryPair StrictlyComplementaryPair(
    const FlowNetwork& network, const ComplementaryOptions& options = {});

// One line per failed strict complementarity condition; empty when the
// pair is optimal and strictly complementary.
std::vector<std::string> AuditStrictComplementarity(
    const FlowNetwork& network, const ComplementaryPair& pair);

}  // namespace posetgame

#endif  // POSETGAME_CIRCULATION_H_
