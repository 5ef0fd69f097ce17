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

#ifndef POSETGAME_AFFINE_SOLVER_H_
#define POSETGAME_AFFINE_SOLVER_H_

#include <optional>
#include <vector>

#include "posetgame/constraint_model.h"
#include "posetgame/dag_shortest_path.h"
#include "posetgame/poset.h"
#include "posetgame/rational.h"

namespace posetgame {

// Hasse diagram of the poset extended by a source below every element and a
// sink above every element. Nodes 0..n-1 are the poset elements, n is the
// source and n+1 the sink.
struct AugmentedCoverGraph {
  int num_elements = 0;
  int source() const { return num_elements; }
  int sink() const { return num_elements + 1; }
  int num_nodes() const { return num_elements + 2; }
  // Arc (x, y) of the diagram; the length of an arc depends on y only.
  std::vector<std::pair<int, int>> arcs;
};

AugmentedCoverGraph AugmentCoverGraph(const Poset& poset);

// Arcs with length rho_y + beta_y into element y and `sink_weight` into the
// sink.
std::vector<WeightedArc> WeightArcs(const AugmentedCoverGraph& graph,
                                    const std::vector<Rational>& rho,
                                    const std::vector<Rational>& beta,
                                    const Rational& sink_weight);

struct AffineIterationState {
  int k = 0;
  std::vector<int> surviving_elements;
  // Indexed by element.
  std::vector<Rational> rho;
  // Accumulated sink weight, -alpha plus the weights assigned so far.
  Rational beta_t;
  std::vector<int> selected;
  // hop_lengths[q] for q = 0..|selected|; q counts selected elements.
  std::vector<std::optional<Rational>> hop_lengths;
  Rational weight;
};

struct AffineSolveOptions {
  bool trace = false;
  // Selects the single-threaded shortest-path kernel.
  bool serial = false;
  // Disables the scaled 128-bit integer fast path.
  bool force_big_integers = false;
};

struct AffineSolution {
  SubsetDistribution sigma;
  Rational total;
  int iterations = 0;
  std::vector<AffineIterationState> trace;
};

// Polynomial solver for chain values alpha - sum of beta. Throws
// kNecessaryConditionViolated when some chain has negative slack,
// kPiAboveOne when some chain value exceeds one and kMalformedInput on
// inconsistent sizes or rho outside [0, 1].
AffineSolution SolveQAffine(const Poset& poset,
                            const std::vector<Rational>& rho,
                            const Rational& alpha,
                            const std::vector<Rational>& beta,
                            const AffineSolveOptions& options = {});

inline AffineSolution SolveQAffine(const ChainConstraintProblem& problem,
                                   const AffineSolveOptions& options = {}) {
  return SolveQAffine(problem.poset(), problem.rho(), problem.alpha(),
                      problem.beta(), options);
}

}  // namespace posetgame

#endif  // POSETGAME_AFFINE_SOLVER_H_
