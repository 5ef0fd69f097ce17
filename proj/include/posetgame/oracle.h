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

// Brute-force references for the chain solvers and for best responses in
// the game. They share only type definitions with the fast paths.

#ifndef POSETGAME_ORACLE_H_
#define POSETGAME_ORACLE_H_

#include <cstdint>
#include <string>
#include <vector>

#include "posetgame/circulation.h"
#include "posetgame/constraint_model.h"
#include "posetgame/game.h"
#include "posetgame/network.h"
#include "posetgame/rational.h"

namespace posetgame {

inline constexpr int kMaxOracleElements = 16;

struct OracleResult {
  Rational optimum;
  // Nonzero subset weights of an optimal solution; the empty set is absent.
  SubsetDistribution witness;
  std::string method;
};

// Minimum total weight over one variable per nonempty subset, with exact
// marginals and the per-chain overlap budgets delta_C. Throws
// Error(kTooLarge) above kMaxOracleElements elements.
OracleResult BruteForceQ(const ChainConstraintProblem& problem);

struct BestResponseOptions {
  int64_t path_cap = kDefaultPathCap;
  int max_subset_edges = 20;
  // Scans P2's subsets on one thread.
  bool serial = false;
};

struct BestResponses {
  // max over capacity-feasible flows of P1's expected payoff.
  Rational p1_best;
  PathFlow p1_witness;
  // max over edge subsets of P2's payoff against the expected routing.
  Rational p2_best;
  std::vector<int> p2_witness;
};

// Throws Error(kEnumerationLimitExceeded) above options.max_subset_edges
// edges and Error(kPathLimitExceeded) from path enumeration.
BestResponses BruteForceBestResponses(const FlowNetwork& network,
                                      const StrategyProfile& profile,
                                      const BestResponseOptions& options = {});

}  // namespace posetgame

#endif  // POSETGAME_ORACLE_H_
