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

#include "posetgame/constraint_model.h"

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "posetgame/errors.h"

namespace posetgame {
namespace {

void CheckRho(const Poset& poset, const std::vector<Rational>& rho) {
  if (static_cast<int>(rho.size()) != poset.size()) {
    throw Error(ErrorCode::kMalformedInput, "rho must cover every element");
  }
  for (int x = 0; x < poset.size(); ++x) {
    if (IsNegative(rho[x]) || rho[x] > 1) {
      throw Error(ErrorCode::kMalformedInput,
                  "rho of " + poset.label(x).text() + " is outside [0,1]");
    }
  }
}

}  // namespace

Rational TotalWeight(const SubsetDistribution& sigma) {
  Rational total = 0;
  for (const auto& [subset, w] : sigma) total += w;
  return total;
}

std::string SubsetKey(const Poset& poset, const std::vector<int>& subset,
                      const std::string& empty_key) {
  if (subset.empty()) return empty_key;
  std::vector<int> sorted = subset;
  std::sort(sorted.begin(), sorted.end());
  return poset.Key(sorted);
}

ChainConstraintProblem ChainConstraintProblem::Explicit(
    Poset poset, std::vector<Rational> rho,
    const std::map<MaximalChain, Rational>& pi, int64_t chain_cap) {
  CheckRho(poset, rho);
  ChainConstraintProblem problem;
  problem.chains_ = EnumerateMaximalChains(poset, chain_cap);
  for (size_t i = 0; i < problem.chains_.size(); ++i) {
    problem.chain_index_[problem.chains_[i]] = static_cast<int>(i);
  }
  problem.pi_.resize(problem.chains_.size());
  std::vector<char> assigned(problem.chains_.size(), 0);
  for (const auto& [chain, value] : pi) {
    auto it = problem.chain_index_.find(chain);
    if (it == problem.chain_index_.end()) {
      throw Error(ErrorCode::kUnknownChain,
                  "not a maximal chain: " + poset.Key(chain));
    }
    if (value > 1) {
      throw Error(ErrorCode::kPiAboveOne,
                  "pi of chain " + poset.Key(chain) + " exceeds 1");
    }
    problem.pi_[it->second] = value;
    assigned[it->second] = 1;
  }
  for (size_t i = 0; i < assigned.size(); ++i) {
    if (!assigned[i]) {
      throw Error(ErrorCode::kMalformedInput,
                  "missing pi for chain " + poset.Key(problem.chains_[i]));
    }
  }
  problem.poset_ = std::move(poset);
  problem.rho_ = std::move(rho);
  return problem;
}

ChainConstraintProblem ChainConstraintProblem::Affine(
    Poset poset, std::vector<Rational> rho, Rational alpha,
    std::vector<Rational> beta) {
  CheckRho(poset, rho);
  if (static_cast<int>(beta.size()) != poset.size()) {
    throw Error(ErrorCode::kMalformedInput, "beta must cover every element");
  }
  ChainConstraintProblem problem;
  problem.poset_ = std::move(poset);
  problem.rho_ = std::move(rho);
  problem.affine_ = true;
  problem.alpha_ = std::move(alpha);
  problem.beta_ = std::move(beta);
  return problem;
}

int ChainConstraintProblem::ChainIndex(const MaximalChain& chain) const {
  auto it = chain_index_.find(chain);
  return it == chain_index_.end() ? -1 : it->second;
}

Rational ChainConstraintProblem::ChainValue(const MaximalChain& chain) const {
  if (!affine_) {
    const int i = ChainIndex(chain);
    if (i < 0) {
      throw Error(ErrorCode::kUnknownChain,
                  "not a maximal chain: " + poset_.Key(chain));
    }
    return pi_[i];
  }
  if (!IsMaximalChain(poset_, chain)) {
    throw Error(ErrorCode::kUnknownChain,
                "not a maximal chain: " + poset_.Key(chain));
  }
  Rational value = alpha_;
  for (int x : chain) value -= beta_[x];
  if (value > 1) {
    throw Error(ErrorCode::kPiAboveOne,
                "pi of chain " + poset_.Key(chain) + " exceeds 1");
  }
  return value;
}

ChainConstraintProblem ChainConstraintProblem::ToExplicit(
    int64_t chain_cap) const {
  if (!affine_) return *this;
  std::map<MaximalChain, Rational> pi;
  for (const MaximalChain& chain : EnumerateMaximalChains(poset_, chain_cap)) {
    pi[chain] = ChainValue(chain);
  }
  return Explicit(poset_, rho_, pi, chain_cap);
}

bool IsMaximalChain(const Poset& poset, const MaximalChain& chain) {
  if (chain.empty()) return false;
  for (int x : chain) {
    if (x < 0 || x >= poset.size()) return false;
  }
  if (!poset.lower_covers(chain.front()).empty()) return false;
  if (!poset.upper_covers(chain.back()).empty()) return false;
  for (size_t i = 0; i + 1 < chain.size(); ++i) {
    const auto& up = poset.upper_covers(chain[i]);
    if (!std::binary_search(up.begin(), up.end(), chain[i + 1])) return false;
  }
  return true;
}

Rational ComputeDelta(const ChainConstraintProblem& problem,
                      const MaximalChain& chain) {
  const Rational pi = problem.ChainValue(chain);
  Rational delta = -pi;
  for (int x : chain) delta += problem.rho()[x];
  return delta;
}

void ScanConservation(const ChainConstraintProblem& problem,
                      ConditionReport& report) {
  const std::vector<MaximalChain>& chains = problem.chains();
  const Poset& poset = problem.poset();
  const std::vector<Rational>& pi = problem.pi_values();
  const int n = poset.size();
  std::vector<int> position(n, -1);
  for (size_t i = 0; i < chains.size(); ++i) {
    std::fill(position.begin(), position.end(), -1);
    for (size_t p = 0; p < chains[i].size(); ++p) {
      position[chains[i][p]] = static_cast<int>(p);
    }
    for (size_t j = i + 1; j < chains.size(); ++j) {
      const MaximalChain& a = chains[i];
      const MaximalChain& b = chains[j];
      for (size_t q = 0; q < b.size(); ++q) {
        const int x = b[q];
        const int p = position[x];
        if (p < 0) continue;
        MaximalChain ab(a.begin(), a.begin() + p + 1);
        ab.insert(ab.end(), b.begin() + q + 1, b.end());
        MaximalChain ba(b.begin(), b.begin() + q + 1);
        ba.insert(ba.end(), a.begin() + p + 1, a.end());
        const int iab = problem.ChainIndex(ab);
        const int iba = problem.ChainIndex(ba);
        if (iab < 0 || iba < 0) {
          report.conservation_ok = false;
          report.structural_errors.push_back(
              "recombination of " + poset.Key(a) + " and " + poset.Key(b) +
              " at " + poset.label(x).text() + " is not a maximal chain");
          continue;
        }
        const Rational lhs = pi[i] + pi[j];
        const Rational rhs = pi[iab] + pi[iba];
        if (lhs != rhs) {
          report.conservation_ok = false;
          report.conservation_violations.push_back(
              {a, b, std::move(ab), std::move(ba), x, lhs, rhs});
        }
      }
    }
  }
}

ConditionReport VerifyConditions(const ChainConstraintProblem& problem) {
  ConditionReport report;
  const Poset& poset = problem.poset();
  if (!problem.is_affine()) {
    const auto& chains = problem.chains();
    for (size_t i = 0; i < chains.size(); ++i) {
      Rational delta = -problem.pi_values()[i];
      for (int x : chains[i]) delta += problem.rho()[x];
      if (IsNegative(delta)) {
        report.necessary_ok = false;
        report.necessary_violations.push_back({chains[i], delta});
      }
    }
    ScanConservation(problem, report);
    return report;
  }

  // Minimum of sum(rho + beta) over chains ending at each element.
  const int n = poset.size();
  std::vector<Rational> best(n);
  std::vector<int> pred(n, -1);
  for (int x : poset.topological_order()) {
    const auto& below = poset.lower_covers(x);
    Rational base = 0;
    for (int y : below) {
      if (pred[x] < 0 || best[y] < base) {
        base = best[y];
        pred[x] = y;
      }
    }
    best[x] = base + problem.rho()[x] + problem.beta()[x];
  }
  int top = -1;
  for (int x = 0; x < n; ++x) {
    if (!poset.upper_covers(x).empty()) continue;
    if (top < 0 || best[x] < best[top]) top = x;
  }
  const Rational min_delta = best[top] - problem.alpha();
  if (IsNegative(min_delta)) {
    MaximalChain chain;
    for (int x = top; x >= 0; x = pred[x]) chain.push_back(x);
    std::reverse(chain.begin(), chain.end());
    report.necessary_ok = false;
    report.necessary_violations.push_back({std::move(chain), min_delta});
  }
  return report;
}

std::vector<std::string> CheckSubsetWeights(
    const ChainConstraintProblem& problem, const SubsetDistribution& sigma,
    int64_t chain_cap) {
  std::vector<std::string> failures;
  const Poset& poset = problem.poset();
  const int n = poset.size();
  std::vector<Rational> marginal(n);
  Rational total = 0;
  for (const auto& [subset, weight] : sigma) {
    const bool valid =
        std::is_sorted(subset.begin(), subset.end()) &&
        std::adjacent_find(subset.begin(), subset.end()) == subset.end() &&
        std::all_of(subset.begin(), subset.end(),
                    [n](int x) { return x >= 0 && x < n; });
    if (!valid) {
      failures.push_back("invalid subset");
      continue;
    }
    if (IsNegative(weight)) {
      failures.push_back(SubsetKey(poset, subset) + ": negative weight");
    }
    for (int x : subset) marginal[x] += weight;
    total += weight;
  }
  if (total > 1) failures.push_back("total " + ToString(total) + " above 1");
  for (int x = 0; x < n; ++x) {
    if (marginal[x] != problem.rho()[x]) {
      failures.push_back(poset.label(x).text() + ": marginal " +
                         ToString(marginal[x]) + " differs from rho " +
                         ToString(problem.rho()[x]));
    }
  }
  for (const MaximalChain& chain : EnumerateMaximalChains(poset, chain_cap)) {
    Rational overlap = 0;
    Rational covered = 0;
    for (const auto& [subset, weight] : sigma) {
      int hits = 0;
      for (int x : chain) {
        hits += std::binary_search(subset.begin(), subset.end(), x);
      }
      if (hits >= 1) covered += weight;
      if (hits >= 2) overlap += weight * (hits - 1);
    }
    const Rational delta = ComputeDelta(problem, chain);
    if (overlap > delta) {
      failures.push_back(poset.Key(chain) + ": overlap " + ToString(overlap) +
                         " exceeds delta " + ToString(delta));
    }
    const Rational pi = problem.ChainValue(chain);
    if (covered < pi) {
      failures.push_back(poset.Key(chain) + ": coverage " +
                         ToString(covered) + " below pi " + ToString(pi));
    }
  }
  return failures;
}

}  // namespace posetgame
