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

#include "posetgame/game.h"

#include <algorithm>

#include "posetgame/affine_solver.h"
#include "posetgame/errors.h"
#include "posetgame/greedy_solver.h"
#include "posetgame/oracle.h"
#include "posetgame/poset.h"

namespace posetgame {
namespace {

void CheckEdges(const FlowNetwork& network, const std::vector<int>& subset) {
  for (int e : subset) {
    if (e < 0 || e >= network.num_edges()) {
      throw Error(ErrorCode::kUnknownEdge,
                  "edge index " + std::to_string(e) + " out of range");
    }
  }
}

bool Meets(const Path& path, const std::vector<int>& subset) {
  for (int e : path) {
    if (std::find(subset.begin(), subset.end(), e) != subset.end()) {
      return true;
    }
  }
  return false;
}

// F(f^S).
Rational SurvivingFlow(const PathFlow& flow, const std::vector<int>& subset) {
  Rational total = 0;
  for (const auto& [path, value] : flow) {
    if (!Meets(path, subset)) total += value;
  }
  return total;
}

bool IsSTPath(const FlowNetwork& network, const Path& path) {
  int node = network.s();
  for (int e : path) {
    if (e < 0 || e >= network.num_edges() || network.edge(e).from != node) {
      return false;
    }
    node = network.edge(e).to;
  }
  return !path.empty() && node == network.t();
}

}  // namespace

Rational FlowValue(const PathFlow& flow) {
  Rational total = 0;
  for (const auto& [path, value] : flow) total += value;
  return total;
}

Rational TransportCost(const FlowNetwork& network, const PathFlow& flow) {
  Rational total = 0;
  for (const auto& [path, value] : flow) {
    total += network.PathCost(path) * value;
  }
  return total;
}

Rational InterdictionCost(const FlowNetwork& network,
                          const std::vector<int>& subset) {
  CheckEdges(network, subset);
  Rational total = 0;
  for (int e : subset) total += network.edge(e).d;
  return total;
}

Payoffs ComputePayoffs(const FlowNetwork& network, const PathFlow& flow,
                       const std::vector<int>& subset) {
  const Rational cost = InterdictionCost(network, subset);
  const Rational surviving = SurvivingFlow(flow, subset);
  return {network.p1() * surviving - TransportCost(network, flow),
          network.p2() * (FlowValue(flow) - surviving) - cost};
}

Payoffs ExpectedPayoffs(const FlowNetwork& network,
                        const StrategyProfile& profile) {
  Payoffs expected{0, 0};
  for (const auto& [subset, weight] : profile.interdiction) {
    const Payoffs payoffs = ComputePayoffs(network, profile.routing, subset);
    expected.u1 += weight * payoffs.u1;
    expected.u2 += weight * payoffs.u2;
  }
  return expected;
}

Rational ZeroSumPayoff(const FlowNetwork& network, const PathFlow& flow,
                       const std::vector<int>& subset) {
  return SurvivingFlow(flow, subset) -
         TransportCost(network, flow) / network.p1() +
         InterdictionCost(network, subset) / network.p2();
}

Rational HitProbability(const SubsetDistribution& interdiction,
                        const Path& path) {
  Rational total = 0;
  for (const auto& [subset, weight] : interdiction) {
    if (Meets(path, subset)) total += weight;
  }
  return total;
}

void ValidateProfile(const FlowNetwork& network,
                     const StrategyProfile& profile) {
  for (const auto& [path, value] : profile.routing) {
    if (!IsSTPath(network, path)) {
      throw Error(ErrorCode::kMalformedInput, "routing uses a non s-t path");
    }
    if (IsNegative(value)) {
      throw Error(ErrorCode::kMalformedInput,
                  "negative flow on " + network.PathKey(path));
    }
  }
  const EdgeFlow load = InducedEdgeFlow(network, profile.routing);
  for (int e = 0; e < network.num_edges(); ++e) {
    if (load[e] > network.edge(e).c) {
      throw Error(ErrorCode::kMalformedInput,
                  "routing exceeds the capacity of " + network.EdgeLabel(e));
    }
  }
  Rational total = 0;
  for (const auto& [subset, weight] : profile.interdiction) {
    CheckEdges(network, subset);
    if (!std::is_sorted(subset.begin(), subset.end()) ||
        std::adjacent_find(subset.begin(), subset.end()) != subset.end()) {
      throw Error(ErrorCode::kMalformedInput,
                  "interdiction subset not sorted or has duplicates");
    }
    if (IsNegative(weight)) {
      throw Error(ErrorCode::kMalformedInput, "negative interdiction weight");
    }
    total += weight;
  }
  if (total != 1) {
    throw Error(ErrorCode::kMalformedInput,
                "interdiction weights sum to " + ToString(total));
  }
}

EquilibriumProfile ComputeNe(const FlowNetwork& network,
                             const GameOptions& options) {
  EquilibriumProfile equilibrium;
  if (network.HasZeroTransportCost()) {
    equilibrium.warnings.push_back(
        "some edge has zero transportation cost; the profile is an "
        "equilibrium but equilibria of other shapes may exist");
  }
  const CirculationSolution circulation = SolveCirculation(network);
  equilibrium.primal = DecomposeFlow(network, circulation.flow);
  equilibrium.dual = circulation.dual;
  // Above one, rho only buys coverage of paths that are already covered;
  // an optimal dual can exceed one there only at zero interdiction cost.
  for (Rational& rho : equilibrium.dual.rho) rho = std::min<Rational>(rho, 1);

  const int m = network.num_edges();
  std::vector<Rational> beta(m);
  for (int e = 0; e < m; ++e) {
    beta[e] = network.edge(e).b / network.p1() + equilibrium.dual.mu[e];
  }
  for (const Path& path : EnumeratePaths(network, options.path_cap)) {
    Rational pi = 1;
    for (int e : path) pi -= beta[e];
    equilibrium.pi_star[path] = pi;
  }

  const AffineSolution interdiction =
      SolveQAffine(EdgePosetFromNetwork(network), equilibrium.dual.rho,
                   Rational(1), beta, {.serial = options.serial});
  equilibrium.profile.routing = equilibrium.primal;
  equilibrium.profile.interdiction =
      LiftToDistribution(interdiction.sigma, interdiction.total);
  const Payoffs payoffs = ExpectedPayoffs(network, equilibrium.profile);
  equilibrium.u1 = payoffs.u1;
  equilibrium.u2 = payoffs.u2;
  return equilibrium;
}

NeReport VerifyNe(const FlowNetwork& network, const StrategyProfile& profile,
                  const GameOptions& options) {
  ValidateProfile(network, profile);
  const BestResponses best = BruteForceBestResponses(
      network, profile,
      {.path_cap = options.path_cap,
       .max_subset_edges = options.max_subset_edges,
       .serial = options.serial});
  const Payoffs value = ExpectedPayoffs(network, profile);
  NeReport report;
  report.p1_value = value.u1;
  report.p2_value = value.u2;
  report.p1_best = best.p1_best;
  report.p2_best = best.p2_best;
  report.p1_gap = best.p1_best - value.u1;
  report.p2_gap = best.p2_best - value.u2;
  report.p1_witness = best.p1_witness;
  report.p2_witness = best.p2_witness;
  report.is_ne = report.p1_gap == 0 && report.p2_gap == 0;
  return report;
}

EquilibriumQuantities ComputeEquilibriumQuantities(
    const FlowNetwork& network, const EquilibriumProfile& equilibrium) {
  EquilibriumQuantities quantities;
  quantities.flow_value = FlowValue(equilibrium.primal);
  quantities.transport_cost = TransportCost(network, equilibrium.primal);
  quantities.interdiction_cost = 0;
  quantities.interdicted_flow = 0;
  for (int e = 0; e < network.num_edges(); ++e) {
    const NetworkEdge& edge = network.edge(e);
    quantities.interdiction_cost += edge.d * equilibrium.dual.rho[e];
    quantities.interdicted_flow +=
        edge.d / network.p2() * equilibrium.dual.rho[e];
  }
  quantities.effective_flow =
      quantities.flow_value - quantities.interdicted_flow;
  return quantities;
}

CriticalComponents ComputeCriticalComponents(const FlowNetwork& network,
                                             const GameOptions& options) {
  const ComplementaryPair pair = StrictlyComplementaryPair(
      network, {.path_cap = options.path_cap, .serial = options.serial});
  CriticalComponents components;
  for (const auto& [path, value] : pair.flow) components.paths.push_back(path);
  for (int e = 0; e < network.num_edges(); ++e) {
    if (IsPositive(pair.dual.rho[e])) components.edges.push_back(e);
  }
  return components;
}

std::optional<StrategyProfile> PureNeCheck(const FlowNetwork& network,
                                           const GameOptions& options) {
  const ComplementaryPair pair = StrictlyComplementaryPair(
      network, {.path_cap = options.path_cap, .serial = options.serial});
  for (const Rational& rho : pair.dual.rho) {
    if (IsPositive(rho)) return std::nullopt;
  }
  return StrategyProfile{pair.flow, {{std::vector<int>{}, Rational(1)}}};
}

}  // namespace posetgame
