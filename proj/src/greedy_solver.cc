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

#include "posetgame/greedy_solver.h"

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "posetgame/errors.h"

namespace posetgame {
namespace {

std::string DescribeFailure(const Poset& poset, const ConditionReport& report) {
  std::string message;
  if (!report.necessary_ok) {
    message += "necessary condition fails on chain " +
               poset.Key(report.necessary_violations.front().chain);
  }
  if (!report.conservation_ok) {
    if (!message.empty()) message += "; ";
    message += "conservation law fails";
    if (!report.conservation_violations.empty()) {
      const auto& v = report.conservation_violations.front();
      message += " for chains " + poset.Key(v.first) + " and " +
                 poset.Key(v.second);
    }
  }
  return message;
}

}  // namespace

QSolution SolveQGeneral(const ChainConstraintProblem& problem,
                        const SolveOptions& options) {
  std::optional<ChainConstraintProblem> expanded;
  if (problem.is_affine()) expanded = problem.ToExplicit(options.chain_cap);
  const ChainConstraintProblem& ex = expanded ? *expanded : problem;

  const ConditionReport report = VerifyConditions(ex);
  if (!report.necessary_ok || !report.conservation_ok) {
    throw Error(ErrorCode::kConditionsViolated,
                DescribeFailure(ex.poset(), report));
  }

  const Poset& poset = ex.poset();
  const std::vector<MaximalChain>& chains = ex.chains();
  const int n = poset.size();
  const int m = static_cast<int>(chains.size());
  const bool keep_pi = options.trace || options.debug_checks;

  std::vector<Rational> rho = ex.rho();
  std::vector<Rational> pi = keep_pi ? ex.pi_values() : std::vector<Rational>();
  std::vector<Rational> delta(m);
  for (int c = 0; c < m; ++c) {
    delta[c] = -ex.pi_values()[c];
    for (int x : chains[c]) delta[c] += rho[x];
  }
  std::vector<char> in_x(n, 0);
  for (int x = 0; x < n; ++x) in_x[x] = IsPositive(rho[x]);
  std::vector<char> active(m, 1);

  QSolution solution;
  const int iteration_bound = n + static_cast<int>(poset.cover_edges().size());
  std::vector<int> hits(m);
  std::vector<char> in_s(n);

  while (true) {
    std::vector<int> surviving;
    for (int x = 0; x < n; ++x) {
      if (in_x[x]) surviving.push_back(x);
    }
    if (surviving.empty()) break;
    if (solution.iterations >= iteration_bound) {
      throw std::logic_error("greedy solver exceeded its iteration bound");
    }
    ++solution.iterations;

    std::vector<int> tight, loose;
    std::vector<MaximalChain> tight_chains;
    for (int c = 0; c < m; ++c) {
      if (!active[c]) continue;
      if (IsZero(delta[c])) {
        tight.push_back(c);
        tight_chains.push_back(chains[c]);
      } else {
        loose.push_back(c);
      }
    }

    const Poset sub = SubposetFromChains(poset, surviving, tight_chains);
    std::vector<int> selected;
    for (int local : MinimalElements(sub)) {
      selected.push_back(surviving[local]);
    }
    std::fill(in_s.begin(), in_s.end(), 0);
    for (int x : selected) in_s[x] = 1;

    Rational w = rho[selected.front()];
    for (int x : selected) {
      if (rho[x] < w) w = rho[x];
    }
    for (int c = 0; c < m; ++c) {
      hits[c] = 0;
      for (int x : chains[c]) hits[c] += in_s[x];
    }
    for (int c : loose) {
      if (hits[c] >= 2) {
        const Rational bound = delta[c] / (hits[c] - 1);
        if (bound < w) w = bound;
      }
    }

    if (options.debug_checks) {
      for (int c : tight) {
        if (hits[c] > 1) {
          throw std::logic_error("tight chain meets the selection twice");
        }
      }
      if (!IsPositive(w)) throw std::logic_error("nonpositive weight");
    }

    if (options.trace) {
      IterationState state;
      state.k = solution.iterations;
      state.surviving_elements = surviving;
      for (int c = 0; c < m; ++c) {
        if (active[c]) state.surviving_chains.push_back(c);
      }
      state.tight_chains = tight;
      state.loose_chains = loose;
      state.rho = rho;
      state.delta = delta;
      state.pi = pi;
      state.selected = selected;
      state.weight = w;
      solution.trace.push_back(std::move(state));
    }

    solution.sigma[selected] += w;
    solution.total += w;

    for (int x : selected) rho[x] -= w;
    for (int c = 0; c < m; ++c) {
      if (hits[c] >= 2) delta[c] -= w * (hits[c] - 1);
      if (keep_pi && hits[c] >= 1) pi[c] -= w;
    }
    // Keep a chain iff its lowest element still in play was selected.
    for (int c = 0; c < m; ++c) {
      if (!active[c]) continue;
      int lowest = -1;
      for (int x : chains[c]) {
        if (in_x[x]) {
          lowest = x;
          break;
        }
      }
      active[c] = lowest >= 0 && in_s[lowest];
    }
    for (int x : selected) in_x[x] = IsPositive(rho[x]);

    if (options.debug_checks) {
      for (int c = 0; c < m; ++c) {
        Rational expected = -pi[c];
        for (int x : chains[c]) expected += rho[x];
        if (expected != delta[c]) {
          throw std::logic_error("incremental delta diverged");
        }
        if (active[c] && IsNegative(delta[c])) {
          throw std::logic_error("surviving chain has negative slack");
        }
      }
    }
  }
  return solution;
}

SubsetDistribution LiftToDistribution(const SubsetDistribution& sigma,
                                      const Rational& total) {
  if (total > 1) {
    throw Error(ErrorCode::kTotalExceedsOne,
                "total weight " + ToString(total) + " exceeds 1");
  }
  SubsetDistribution lifted = sigma;
  const Rational rest = Rational(1) - total;
  if (IsPositive(rest)) lifted[{}] += rest;
  return lifted;
}

}  // namespace posetgame
