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

#include "posetgame/circulation.h"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "posetgame/errors.h"
#include "posetgame/lp.h"

namespace posetgame {
namespace {

Rational Cap(const NetworkEdge& edge, const Rational& p2) {
  return edge.d / p2;
}

// Maximizes `target` over the optimal face; the face is nonempty and
// bounded, so the program has an optimal vertex.
std::vector<Rational> FaceVertex(const LinearProgram& face,
                                 const std::vector<Rational>& target) {
  LinearProgram lp = face;
  lp.objective = target;
  const LpSolution solution = SolveLp(lp);
  if (solution.status != LpStatus::kOptimal) {
    throw std::logic_error("secondary program on the optimal face failed");
  }
  return solution.x;
}

// Solves every target over the face and returns the average of the vertices.
std::vector<Rational> AverageVertex(
    const LinearProgram& face, const std::vector<std::vector<Rational>>& targets,
    bool serial) {
  const int count = static_cast<int>(targets.size());
  std::vector<std::vector<Rational>> vertices(count);
  if (serial) {
    for (int i = 0; i < count; ++i) vertices[i] = FaceVertex(face, targets[i]);
  } else {
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < count; ++i) vertices[i] = FaceVertex(face, targets[i]);
  }
  std::vector<Rational> average(face.num_vars);
  for (const auto& vertex : vertices) {
    for (int j = 0; j < face.num_vars; ++j) average[j] += vertex[j];
  }
  if (count > 0) {
    for (Rational& value : average) value /= count;
  }
  return average;
}

}  // namespace

CirculationSolution SolveCirculation(const FlowNetwork& network) {
  const int m = network.num_edges();
  LinearProgram lp;
  for (int e = 0; e < m; ++e) {
    const NetworkEdge& edge = network.edge(e);
    Rational cost = -edge.b / network.p1();
    if (edge.from == network.s()) cost += 1;
    lp.AddVariable(cost);
  }
  for (int e = 0; e < m; ++e) {
    lp.AddRow({{e, Rational(1)}}, RowSense::kLessEqual,
              Cap(network.edge(e), network.p2()));
    lp.AddRow({{e, Rational(1)}}, RowSense::kLessEqual, network.edge(e).c);
  }
  for (int v = 0; v < network.num_nodes(); ++v) {
    if (v == network.s() || v == network.t()) continue;
    std::vector<std::pair<int, Rational>> terms;
    for (int e : network.in_edges(v)) terms.emplace_back(e, Rational(1));
    for (int e : network.out_edges(v)) terms.emplace_back(e, Rational(-1));
    lp.AddRow(std::move(terms), RowSense::kEqual, Rational(0));
  }
  const LpSolution solution = SolveLp(lp);
  if (solution.status != LpStatus::kOptimal) {
    throw std::logic_error("circulation program not optimal");
  }
  CirculationSolution result;
  result.flow = solution.x;
  result.objective = solution.objective;
  result.dual.rho.resize(m);
  result.dual.mu.resize(m);
  for (int e = 0; e < m; ++e) {
    result.dual.rho[e] = solution.duals[2 * e];
    result.dual.mu[e] = solution.duals[2 * e + 1];
  }
  return result;
}

EdgeFlow InducedEdgeFlow(const FlowNetwork& network, const PathFlow& flow) {
  EdgeFlow edge_flow(network.num_edges());
  for (const auto& [path, value] : flow) {
    for (int e : path) edge_flow[e] += value;
  }
  return edge_flow;
}

Rational EdgeObjective(const FlowNetwork& network, const EdgeFlow& flow) {
  Rational value = 0;
  for (int e = 0; e < network.num_edges(); ++e) {
    const NetworkEdge& edge = network.edge(e);
    if (edge.from == network.s()) value += flow[e];
    value -= edge.b * flow[e] / network.p1();
  }
  return value;
}

Rational PathObjective(const FlowNetwork& network, const PathFlow& flow) {
  Rational value = 0;
  for (const auto& [path, f] : flow) value += network.PathThreshold(path) * f;
  return value;
}

PathFlow DecomposeFlow(const FlowNetwork& network, const EdgeFlow& flow) {
  const int m = network.num_edges();
  if (static_cast<int>(flow.size()) != m) {
    throw Error(ErrorCode::kMalformedInput, "flow size does not match edges");
  }
  for (int e = 0; e < m; ++e) {
    if (IsNegative(flow[e])) {
      throw Error(ErrorCode::kNonConserving,
                  "negative flow on " + network.EdgeLabel(e));
    }
  }
  for (int v = 0; v < network.num_nodes(); ++v) {
    if (v == network.s() || v == network.t()) continue;
    Rational balance = 0;
    for (int e : network.in_edges(v)) balance += flow[e];
    for (int e : network.out_edges(v)) balance -= flow[e];
    if (!IsZero(balance)) {
      throw Error(ErrorCode::kNonConserving,
                  "flow not conserved at node " + network.nodes()[v].text());
    }
  }
  EdgeFlow remaining = flow;
  PathFlow result;
  auto smallest_positive_out = [&](int node) {
    int best = -1;
    for (int e : network.out_edges(node)) {
      if (IsPositive(remaining[e]) && (best < 0 || e < best)) best = e;
    }
    return best;
  };
  while (true) {
    int e = smallest_positive_out(network.s());
    if (e < 0) break;
    Path path;
    Rational bottleneck = remaining[e];
    while (true) {
      path.push_back(e);
      bottleneck = std::min(bottleneck, remaining[e]);
      const int head = network.edge(e).to;
      if (head == network.t()) break;
      e = smallest_positive_out(head);
      if (e < 0) throw std::logic_error("conserving flow stalled");
    }
    for (int edge : path) remaining[edge] -= bottleneck;
    result[path] += bottleneck;
  }
  for (int edge = 0; edge < m; ++edge) {
    if (!IsZero(remaining[edge])) {
      throw Error(ErrorCode::kNonConserving,
                  "flow on " + network.EdgeLabel(edge) +
                      " is not on any s-t path");
    }
  }
  return result;
}

ComplementaryPair StrictlyComplementaryPair(
    const FlowNetwork& network, const ComplementaryOptions& options) {
  const int m = network.num_edges();
  ComplementaryPair pair;
  pair.paths = EnumeratePaths(network, options.path_cap);
  const std::vector<Path>& paths = pair.paths;
  const int n = static_cast<int>(paths.size());
  std::vector<Rational> threshold(n);
  for (int p = 0; p < n; ++p) threshold[p] = network.PathThreshold(paths[p]);

  // Primal: max threshold . f, edge loads within d/p2 and c.
  LinearProgram primal;
  for (int p = 0; p < n; ++p) primal.AddVariable(threshold[p]);
  std::vector<std::vector<std::pair<int, Rational>>> load(m);
  for (int p = 0; p < n; ++p) {
    for (int e : paths[p]) load[e].emplace_back(p, Rational(1));
  }
  for (int e = 0; e < m; ++e) {
    primal.AddRow(load[e], RowSense::kLessEqual,
                  Cap(network.edge(e), network.p2()));
    primal.AddRow(load[e], RowSense::kLessEqual, network.edge(e).c);
  }
  const LpSolution optimum = SolveLp(primal);
  if (optimum.status != LpStatus::kOptimal) {
    throw std::logic_error("path program not optimal");
  }
  pair.objective = optimum.objective;

  LinearProgram primal_face = primal;
  {
    std::vector<std::pair<int, Rational>> terms;
    for (int p = 0; p < n; ++p) terms.emplace_back(p, threshold[p]);
    primal_face.AddRow(std::move(terms), RowSense::kEqual, optimum.objective);
  }
  std::vector<std::vector<Rational>> primal_targets;
  for (int p = 0; p < n; ++p) {
    std::vector<Rational> target(n);
    target[p] = 1;
    primal_targets.push_back(std::move(target));
  }
  // Each edge slack shares the load row of both caps, so one target per
  // edge covers both.
  for (int e = 0; e < m; ++e) {
    std::vector<Rational> target(n);
    for (const auto& [p, coefficient] : load[e]) target[p] = -coefficient;
    primal_targets.push_back(std::move(target));
  }
  const std::vector<Rational> f =
      AverageVertex(primal_face, primal_targets, options.serial);
  for (int p = 0; p < n; ++p) {
    if (IsPositive(f[p])) pair.flow[paths[p]] = f[p];
  }

  // Dual: variables rho_e = 2e and mu_e = 2e + 1; max of the negated cost.
  LinearProgram dual;
  for (int e = 0; e < m; ++e) {
    dual.AddVariable(-Cap(network.edge(e), network.p2()));
    dual.AddVariable(-network.edge(e).c);
  }
  for (int p = 0; p < n; ++p) {
    std::vector<std::pair<int, Rational>> terms;
    for (int e : paths[p]) {
      terms.emplace_back(2 * e, Rational(1));
      terms.emplace_back(2 * e + 1, Rational(1));
    }
    dual.AddRow(std::move(terms), RowSense::kGreaterEqual, threshold[p]);
  }
  LinearProgram dual_face = dual;
  {
    std::vector<std::pair<int, Rational>> terms;
    for (int v = 0; v < 2 * m; ++v) terms.emplace_back(v, -dual.objective[v]);
    dual_face.AddRow(std::move(terms), RowSense::kEqual, optimum.objective);
  }
  std::vector<std::vector<Rational>> dual_targets;
  for (int v = 0; v < 2 * m; ++v) {
    std::vector<Rational> target(2 * m);
    target[v] = 1;
    dual_targets.push_back(std::move(target));
  }
  for (int p = 0; p < n; ++p) {
    std::vector<Rational> target(2 * m);
    for (int e : paths[p]) {
      target[2 * e] = 1;
      target[2 * e + 1] = 1;
    }
    dual_targets.push_back(std::move(target));
  }
  const std::vector<Rational> y =
      AverageVertex(dual_face, dual_targets, options.serial);
  pair.dual.rho.resize(m);
  pair.dual.mu.resize(m);
  for (int e = 0; e < m; ++e) {
    pair.dual.rho[e] = y[2 * e];
    pair.dual.mu[e] = y[2 * e + 1];
  }
  return pair;
}

std::vector<std::string> AuditStrictComplementarity(
    const FlowNetwork& network, const ComplementaryPair& pair) {
  std::vector<std::string> failures;
  const int m = network.num_edges();
  const EdgeFlow load = InducedEdgeFlow(network, pair.flow);
  Rational dual_objective = 0;
  for (int e = 0; e < m; ++e) {
    const NetworkEdge& edge = network.edge(e);
    const std::string label = network.EdgeLabel(e);
    const Rational cap = Cap(edge, network.p2());
    const Rational& rho = pair.dual.rho[e];
    const Rational& mu = pair.dual.mu[e];
    if (load[e] > cap || load[e] > edge.c) {
      failures.push_back(label + ": load exceeds a cap");
    }
    if (IsNegative(rho) || IsNegative(mu)) {
      failures.push_back(label + ": negative multiplier");
    }
    if (IsPositive(rho) == (load[e] < cap)) {
      failures.push_back(label + ": rho and the d/p2 slack are not strictly "
                                 "complementary");
    }
    if (IsPositive(mu) == (load[e] < edge.c)) {
      failures.push_back(label + ": mu and the capacity slack are not "
                                 "strictly complementary");
    }
    dual_objective += cap * rho + edge.c * mu;
  }
  for (const Path& path : pair.paths) {
    Rational covered = 0;
    for (int e : path) covered += pair.dual.rho[e] + pair.dual.mu[e];
    const Rational threshold = network.PathThreshold(path);
    const auto it = pair.flow.find(path);
    const bool used = it != pair.flow.end() && IsPositive(it->second);
    if (covered < threshold) {
      failures.push_back(network.PathKey(path) + ": dual constraint violated");
    }
    if (used == (covered > threshold)) {
      failures.push_back(network.PathKey(path) +
                         ": flow and dual slack are not strictly "
                         "complementary");
    }
  }
  for (const auto& [path, value] : pair.flow) {
    if (IsNegative(value)) {
      failures.push_back(network.PathKey(path) + ": negative flow");
    }
  }
  if (PathObjective(network, pair.flow) != dual_objective) {
    failures.push_back("primal and dual objectives differ");
  }
  return failures;
}

}  // namespace posetgame
