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

// The interdiction game: P1 routes flow along s-t paths, P2 interdicts
// subsets of edges, and equilibria are assembled from the circulation
// program and the affine chain solver on the edge poset.

#ifndef POSETGAME_GAME_H_
#define POSETGAME_GAME_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "posetgame/circulation.h"
#include "posetgame/constraint_model.h"
#include "posetgame/network.h"
#include "posetgame/rational.h"

namespace posetgame {

// P1's expected routing and P2's distribution over edge subsets. Subsets
// are sorted edge indices.
struct StrategyProfile {
  PathFlow routing;
  SubsetDistribution interdiction;
};

struct Payoffs {
  Rational u1;
  Rational u2;
};

// F(f), the total flow value.
Rational FlowValue(const PathFlow& flow);

// T(f), the total transportation cost.
Rational TransportCost(const FlowNetwork& network, const PathFlow& flow);

// C(S). Throws Error(kUnknownEdge).
Rational InterdictionCost(const FlowNetwork& network,
                          const std::vector<int>& subset);

// u1 = p1 F(f^S) - T(f) and u2 = p2 (F(f) - F(f^S)) - C(S), where f^S drops
// every path meeting S. Throws Error(kUnknownEdge).
Payoffs ComputePayoffs(const FlowNetwork& network, const PathFlow& flow,
                       const std::vector<int>& subset);

// Payoffs averaged over the interdiction distribution.
Payoffs ExpectedPayoffs(const FlowNetwork& network,
                        const StrategyProfile& profile);

// F(f^S) - T(f)/p1 + C(S)/p2, the payoff of the strategically equivalent
// zero-sum game.
Rational ZeroSumPayoff(const FlowNetwork& network, const PathFlow& flow,
                       const std::vector<int>& subset);

// Probability that the distribution interdicts some edge of `path`.
Rational HitProbability(const SubsetDistribution& interdiction,
                        const Path& path);

// Throws Error(kMalformedInput) unless the routing uses valid s-t paths
// with non-negative values within capacity, and the interdiction weights
// are non-negative, sum to one and sit on sorted duplicate-free subsets.
// Throws Error(kUnknownEdge) for an edge index out of range.
void ValidateProfile(const FlowNetwork& network,
                     const StrategyProfile& profile);

struct EquilibriumProfile {
  StrategyProfile profile;
  PathFlow primal;
  DualSolution dual;
  // pi*_lambda for every s-t path.
  std::map<Path, Rational> pi_star;
  Rational u1;
  Rational u2;
  std::vector<std::string> warnings;
};

struct GameOptions {
  int64_t path_cap = kDefaultPathCap;
  // Uses the serial kernels throughout.
  bool serial = false;
  // Largest edge count for which verification enumerates P2's subsets.
  int max_subset_edges = 20;
};

// Equilibrium built from an optimal primal-dual pair of the circulation
// program. Warns when some edge has zero transportation cost.
EquilibriumProfile ComputeNe(const FlowNetwork& network,
                             const GameOptions& options = {});

struct NeReport {
  bool is_ne = false;
  Rational p1_value;
  Rational p2_value;
  Rational p1_best;
  Rational p2_best;
  Rational p1_gap;
  Rational p2_gap;
  PathFlow p1_witness;
  std::vector<int> p2_witness;
};

// Compares the profile's payoffs with exact best responses. Throws
// Error(kEnumerationLimitExceeded) above options.max_subset_edges edges.
NeReport VerifyNe(const FlowNetwork& network, const StrategyProfile& profile,
                  const GameOptions& options = {});

struct EquilibriumQuantities {
  Rational flow_value;
  Rational transport_cost;
  Rational interdiction_cost;
  Rational interdicted_flow;
  Rational effective_flow;
};

// Expected quantities at an equilibrium, from f* and rho*.
EquilibriumQuantities ComputeEquilibriumQuantities(
    const FlowNetwork& network, const EquilibriumProfile& equilibrium);

struct CriticalComponents {
  // Paths and edges used with positive probability in some equilibrium.
  std::vector<Path> paths;
  std::vector<int> edges;
};

CriticalComponents ComputeCriticalComponents(const FlowNetwork& network,
                                             const GameOptions& options = {});

// (f, {empty set: 1}) when some equilibrium has P2 never interdicting.
std::optional<StrategyProfile> PureNeCheck(const FlowNetwork& network,
                                           const GameOptions& options = {});

}  // namespace posetgame

#endif  // POSETGAME_GAME_H_
