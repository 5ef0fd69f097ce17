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

#ifndef POSETGAME_CONSTRAINT_MODEL_H_
#define POSETGAME_CONSTRAINT_MODEL_H_

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "posetgame/poset.h"
#include "posetgame/rational.h"

namespace posetgame {

// Sparse nonnegative weights on element subsets. Keys are sorted element
// indices; the empty key is the empty subset.
using SubsetDistribution = std::map<std::vector<int>, Rational>;

Rational TotalWeight(const SubsetDistribution& sigma);

// Sorted, dash-joined labels; `empty_key` for the empty subset.
std::string SubsetKey(const Poset& poset, const std::vector<int>& subset,
                      const std::string& empty_key = "\xE2\x88\x85");

// Element values rho plus chain values pi, given either per maximal chain or
// in affine form pi_C = alpha - sum of beta over C.
class ChainConstraintProblem {
 public:
  // Throws kMalformedInput for rho outside [0, 1] or a missing chain value,
  // kUnknownChain for a key that is not a maximal chain, kPiAboveOne for a
  // value above one and kChainLimitExceeded from enumeration.
  static ChainConstraintProblem Explicit(
      Poset poset, std::vector<Rational> rho,
      const std::map<MaximalChain, Rational>& pi,
      int64_t chain_cap = kDefaultChainCap);

  // Throws kMalformedInput for rho outside [0, 1] or a size mismatch.
  static ChainConstraintProblem Affine(Poset poset, std::vector<Rational> rho,
                                       Rational alpha,
                                       std::vector<Rational> beta);

  const Poset& poset() const { return poset_; }
  const std::vector<Rational>& rho() const { return rho_; }
  bool is_affine() const { return affine_; }

  // Affine data.
  const Rational& alpha() const { return alpha_; }
  const std::vector<Rational>& beta() const { return beta_; }

  // Explicit data: chains in enumeration order and their values.
  const std::vector<MaximalChain>& chains() const { return chains_; }
  const std::vector<Rational>& pi_values() const { return pi_; }
  // -1 when absent; explicit mode only.
  int ChainIndex(const MaximalChain& chain) const;

  // pi_C. Throws kUnknownChain if `chain` is not a maximal chain and
  // kPiAboveOne when an affine value exceeds one.
  Rational ChainValue(const MaximalChain& chain) const;

  // Explicit problem with the same pi; the identity in explicit mode.
  ChainConstraintProblem ToExplicit(int64_t chain_cap = kDefaultChainCap) const;

 private:
  Poset poset_;
  std::vector<Rational> rho_;
  bool affine_ = false;
  Rational alpha_;
  std::vector<Rational> beta_;
  std::vector<MaximalChain> chains_;
  std::vector<Rational> pi_;
  std::map<MaximalChain, int> chain_index_;
};

// True iff `chain` is a maximal chain of `poset`.
bool IsMaximalChain(const Poset& poset, const MaximalChain& chain);

// delta_C = sum of rho over C minus pi_C. Throws kUnknownChain.
Rational ComputeDelta(const ChainConstraintProblem& problem,
                      const MaximalChain& chain);

struct NecessaryViolation {
  MaximalChain chain;
  Rational delta;
};

// Chains `first` and `second` share `shared`; `first_second` takes the part
// of `first` up to `shared` and the part of `second` above it, and
// `second_first` the other way round. lhs and rhs are the two pi sums.
struct ConservationViolation {
  MaximalChain first;
  MaximalChain second;
  MaximalChain first_second;
  MaximalChain second_first;
  int shared = -1;
  Rational lhs;
  Rational rhs;
};

struct ConditionReport {
  bool necessary_ok = true;
  bool conservation_ok = true;
  std::vector<NecessaryViolation> necessary_violations;
  std::vector<ConservationViolation> conservation_violations;
  // Recombined sequences missing from the chain list.
  std::vector<std::string> structural_errors;
};

// In affine mode the necessary condition is checked through a shortest s-t
// path in the augmented cover graph, which names one witness chain, and the
// conservation scan is skipped.
ConditionReport VerifyConditions(const ChainConstraintProblem& problem);

// Explicit pairwise conservation scan, also usable on affine problems after
// ToExplicit().
void ScanConservation(const ChainConstraintProblem& problem,
                      ConditionReport& report);

// One line per violated requirement on subset weights: non-negative
// weights on valid subsets, marginals equal to rho, overlap within delta_C
// and coverage of pi_C on every maximal chain, and total at most one. The
// empty subset may be present.
std::vector<std::string> CheckSubsetWeights(
    const ChainConstraintProblem& problem, const SubsetDistribution& sigma,
    int64_t chain_cap = kDefaultChainCap);

}  // namespace posetgame

#endif  // POSETGAME_CONSTRAINT_MODEL_H_
