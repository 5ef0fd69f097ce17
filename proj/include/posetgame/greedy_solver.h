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

#ifndef POSETGAME_GREEDY_SOLVER_H_
#define POSETGAME_GREEDY_SOLVER_H_

#include <cstdint>
#include <vector>

#include "posetgame/constraint_model.h"
#include "posetgame/rational.h"

namespace posetgame {

// State at the start of iteration k, plus the selection made in it. Chain
// indices refer to ChainConstraintProblem::chains() of the explicit problem.
struct IterationState {
  int k = 0;
  std::vector<int> surviving_elements;
  std::vector<int> surviving_chains;
  std::vector<int> tight_chains;
  std::vector<int> loose_chains;
  // Indexed by element.
  std::vector<Rational> rho;
  // Indexed by chain, for every chain of the poset including pruned ones.
  std::vector<Rational> delta;
  std::vector<Rational> pi;
  std::vector<int> selected;
  Rational weight;
};

struct SolveOptions {
  bool trace = false;
  // Re-derives delta from rho and pi after every iteration and checks the
  // per-iteration invariants; throws std::logic_error on a mismatch.
  bool debug_checks = false;
  int64_t chain_cap = kDefaultChainCap;
};

struct QSolution {
  SubsetDistribution sigma;
  Rational total;
  int iterations = 0;
  std::vector<IterationState> trace;
};

// Greedy chain-decomposition solver for the minimum-total-weight problem.
// Affine problems are expanded to explicit chain values first. Throws
// kConditionsViolated when the necessary or conservation condition fails.
QSolution SolveQGeneral(const ChainConstraintProblem& problem,
                        const SolveOptions& options = {});

// Adds weight 1 - total on the empty subset. Throws kTotalExceedsOne.
SubsetDistribution LiftToDistribution(const SubsetDistribution& sigma,
                                      const Rational& total);

}  // namespace posetgame

#endif  // POSETGAME_GREEDY_SOLVER_H_
