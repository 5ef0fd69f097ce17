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

#include "posetgame/oracle.h"

#include <bit>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <utility>

#include "posetgame/errors.h"
#include "posetgame/lp.h"

namespace posetgame {
namespace {

uint32_t MaskOf(const std::vector<int>& elements) {
  uint32_t mask = 0;
  for (int x : elements) mask |= uint32_t{1} << x;
  return mask;
}

std::vector<int> ElementsOf(uint32_t mask) {
  std::vector<int> elements;
  for (int x = 0; mask != 0; ++x, mask >>= 1) {
    if (mask & 1) elements.push_back(x);
  }
  return elements;
}

// Independent feasibility check of a subset weighting against the exact
// marginals and the chain overlap budgets.
void CheckQWitness(int n, const std::vector<Rational>& rho,
                   const std::vector<uint32_t>& chain_masks,
                   const std::vector<Rational>& delta,
                   const SubsetDistribution& witness) {
  std::vector<Rational> marginal(n);
  std::vector<Rational> overlap(chain_masks.size());
  for (const auto& [subset, weight] : witness) {
    if (IsNegative(weight)) throw std::logic_error("negative oracle weight");
    const uint32_t mask = MaskOf(subset);
    for (int x : subset) marginal[x] += weight;
    for (size_t c = 0; c < chain_masks.size(); ++c) {
      const int hits = std::popcount(mask & chain_masks[c]);
      if (hits >= 2) overlap[c] += weight * (hits - 1);
    }
  }
  for (int x = 0; x < n; ++x) {
    if (marginal[x] != rho[x]) throw std::logic_error("oracle marginal");
  }
  for (size_t c = 0; c < chain_masks.size(); ++c) {
    if (overlap[c] > delta[c]) throw std::logic_error("oracle overlap");
  }
}

template <typename Int>
std::pair<Int, uint32_t> BestSubset(int num_edges,
                                    const std::vector<uint32_t>& path_masks,
                                    const std::vector<Int>& path_values,
                                    const std::vector<Int>& edge_costs,
                                    bool serial) {
  const int64_t count = int64_t{1} << num_edges;
  Int best = 0;
  uint32_t best_mask = 0;
#pragma omp parallel if (!serial)
  {
    Int local_best = 0;
    uint32_t local_mask = 0;
    Int value;
#pragma omp for schedule(static) nowait
    for (int64_t raw = 1; raw < count; ++raw) {
      const uint32_t mask = static_cast<uint32_t>(raw);
      value = 0;
      for (size_t p = 0; p < path_masks.size(); ++p) {
        if (path_masks[p] & mask) value += path_values[p];
      }
      for (uint32_t rest = mask; rest != 0; rest &= rest - 1) {
        value -= edge_costs[std::countr_zero(rest)];
      }
      if (value > local_best) {
        local_best = value;
        local_mask = mask;
      }
    }
#pragma omp critical
    {
      if (local_best > best || (local_best == best && local_mask < best_mask)) {
        best = local_best;
        best_mask = local_mask;
      }
    }
  }
  return {best, best_mask};
}

// P2's best subset against a fixed routing, over integers scaled by the
// common denominator. Ties go to the smallest bitmask.
std::pair<Rational, uint32_t> BestInterdiction(const FlowNetwork& network,
                                               const PathFlow& routing,
                                               bool serial) {
  const int m = network.num_edges();
  std::vector<uint32_t> path_masks;
  std::vector<Rational> path_values;
  for (const auto& [path, value] : routing) {
    path_masks.push_back(MaskOf(path));
    path_values.push_back(network.p2() * value);
  }
  std::vector<Rational> edge_costs;
  for (const NetworkEdge& edge : network.edges()) edge_costs.push_back(edge.d);

  mpz_class scale = 1;
  for (const Rational& v : path_values) {
    mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), v.get_den_mpz_t());
  }
  for (const Rational& v : edge_costs) {
    mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), v.get_den_mpz_t());
  }
  auto scaled = [&](const std::vector<Rational>& values) {
    std::vector<mpz_class> out;
    for (const Rational& v : values) {
      out.push_back(v.get_num() * (scale / v.get_den()));
    }
    return out;
  };
  const std::vector<mpz_class> big_paths = scaled(path_values);
  const std::vector<mpz_class> big_edges = scaled(edge_costs);

  mpz_class magnitude = 0;
  for (const mpz_class& v : big_paths) magnitude += abs(v);
  for (const mpz_class& v : big_edges) magnitude += abs(v);
  if (magnitude <= std::numeric_limits<int64_t>::max() / 2) {
    std::vector<int64_t> small_paths;
    std::vector<int64_t> small_edges;
    for (const mpz_class& v : big_paths) small_paths.push_back(v.get_si());
    for (const mpz_class& v : big_edges) small_edges.push_back(v.get_si());
    const auto [best, mask] =
        BestSubset<int64_t>(m, path_masks, small_paths, small_edges, serial);
    Rational value(mpz_class(static_cast<long>(best)), scale);
    value.canonicalize();
    return {value, mask};
  }
  const auto [best, mask] =
      BestSubset<mpz_class>(m, path_masks, big_paths, big_edges, serial);
  Rational value(best, scale);
  value.canonicalize();
  return {value, mask};
}

}  // namespace

OracleResult BruteForceQ(const ChainConstraintProblem& problem) {
  const int n = problem.poset().size();
  if (n > kMaxOracleElements) {
    throw Error(ErrorCode::kTooLarge,
                std::to_string(n) + " elements exceed the oracle limit of " +
                    std::to_string(kMaxOracleElements));
  }
  const ChainConstraintProblem expanded = problem.ToExplicit();
  const std::vector<Rational>& rho = expanded.rho();
  std::vector<uint32_t> chain_masks;
  std::vector<Rational> delta;
  for (size_t c = 0; c < expanded.chains().size(); ++c) {
    chain_masks.push_back(MaskOf(expanded.chains()[c]));
    Rational sum = 0;
    for (int x : expanded.chains()[c]) sum += rho[x];
    delta.push_back(sum - expanded.pi_values()[c]);
  }

  const uint32_t count = uint32_t{1} << n;
  LinearProgram lp;
  for (uint32_t mask = 1; mask < count; ++mask) lp.AddVariable(Rational(-1));
  auto var = [](uint32_t mask) { return static_cast<int>(mask) - 1; };
  for (int x = 0; x < n; ++x) {
    std::vector<std::pair<int, Rational>> terms;
    for (uint32_t mask = 1; mask < count; ++mask) {
      if (mask >> x & 1) terms.emplace_back(var(mask), Rational(1));
    }
    lp.AddRow(std::move(terms), RowSense::kEqual, rho[x]);
  }
  for (size_t c = 0; c < chain_masks.size(); ++c) {
    std::vector<std::pair<int, Rational>> terms;
    for (uint32_t mask = 1; mask < count; ++mask) {
      const int hits = std::popcount(mask & chain_masks[c]);
      if (hits >= 2) terms.emplace_back(var(mask), Rational(hits - 1));
    }
    lp.AddRow(std::move(terms), RowSense::kLessEqual, delta[c]);
  }
  const LpSolution solution = SolveLp(lp);
  if (solution.status != LpStatus::kOptimal) {
    throw Error(ErrorCode::kConditionsViolated,
                "the subset program has no feasible solution");
  }

  OracleResult result;
  result.optimum = -solution.objective;
  for (uint32_t mask = 1; mask < count; ++mask) {
    if (IsPositive(solution.x[var(mask)])) {
      result.witness[ElementsOf(mask)] = solution.x[var(mask)];
    }
  }
  CheckQWitness(n, rho, chain_masks, delta, result.witness);
  result.method = "exact simplex over " + std::to_string(count - 1) +
                  " subset variables";
  return result;
}

BestResponses BruteForceBestResponses(const FlowNetwork& network,
                                      const StrategyProfile& profile,
                                      const BestResponseOptions& options) {
  const int m = network.num_edges();
  if (m > options.max_subset_edges) {
    throw Error(ErrorCode::kEnumerationLimitExceeded,
                std::to_string(m) + " edges exceed the subset limit of " +
                    std::to_string(options.max_subset_edges));
  }
  BestResponses result;

  // P1: each unit on a path earns p1 when it survives and always pays b.
  const std::vector<Path> paths = EnumeratePaths(network, options.path_cap);
  LinearProgram lp;
  std::vector<std::vector<std::pair<int, Rational>>> load(m);
  for (size_t p = 0; p < paths.size(); ++p) {
    Rational hit = 0;
    const uint32_t path_mask = MaskOf(paths[p]);
    for (const auto& [subset, weight] : profile.interdiction) {
      if (MaskOf(subset) & path_mask) hit += weight;
    }
    lp.AddVariable(network.p1() * (1 - hit) - network.PathCost(paths[p]));
    for (int e : paths[p]) load[e].emplace_back(static_cast<int>(p), 1);
  }
  for (int e = 0; e < m; ++e) {
    lp.AddRow(std::move(load[e]), RowSense::kLessEqual, network.edge(e).c);
  }
  const LpSolution solution = SolveLp(lp);
  if (solution.status != LpStatus::kOptimal) {
    throw std::logic_error("P1 best-response program not optimal");
  }
  result.p1_best = solution.objective;
  for (size_t p = 0; p < paths.size(); ++p) {
    if (IsPositive(solution.x[p])) result.p1_witness[paths[p]] = solution.x[p];
  }

  const auto [best, mask] =
      BestInterdiction(network, profile.routing, options.serial);
  result.p2_best = best;
  result.p2_witness = ElementsOf(mask);
  return result;
}

}  // namespace posetgame
