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

#include "posetgame/affine_solver.h"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "posetgame/errors.h"

namespace posetgame {
namespace {

using Int128 = __int128;

mpz_class ToMpz(Int128 v) {
  const bool negative = v < 0;
  unsigned __int128 magnitude =
      negative ? -static_cast<unsigned __int128>(v)
               : static_cast<unsigned __int128>(v);
  mpz_class result(static_cast<unsigned long>(magnitude >> 64));
  result <<= 64;
  result += static_cast<unsigned long>(magnitude & ~uint64_t{0});
  return negative ? mpz_class(-result) : result;
}

mpz_class ToMpz(const mpz_class& v) { return v; }

template <class Value>
Rational Unscale(const Value& v, const mpz_class& denominator) {
  Rational r(ToMpz(v), denominator);
  r.canonicalize();
  return r;
}

// Minimum over maximal chains of the sum of `weight`.
Rational MinChainSum(const Poset& poset, const std::vector<Rational>& weight) {
  std::vector<Rational> best(poset.size());
  std::optional<Rational> result;
  for (int x : poset.topological_order()) {
    std::optional<Rational> below;
    for (int y : poset.lower_covers(x)) {
      if (!below || best[y] < *below) below = best[y];
    }
    best[x] = weight[x] + (below ? *below : Rational(0));
    if (poset.upper_covers(x).empty() && (!result || best[x] < *result)) {
      result = best[x];
    }
  }
  return *result;
}

// Structure shared by every iteration: the augmented cover graph as a
// forward-star DAG whose arc lengths are refreshed per iteration.
template <class Value>
kernels::Dag<Value> BuildKernelDag(const AugmentedCoverGraph& graph) {
  const int nodes = graph.num_nodes();
  std::vector<std::vector<int>> out(nodes);
  for (const auto& [x, y] : graph.arcs) out[x].push_back(y);
  for (auto& heads : out) std::sort(heads.begin(), heads.end());
  kernels::Dag<Value> dag;
  dag.num_nodes = nodes;
  dag.topological_order = DagTopologicalOrder(nodes, out);
  dag.position.resize(nodes);
  for (int p = 0; p < nodes; ++p) dag.position[dag.topological_order[p]] = p;
  dag.offsets.assign(nodes + 1, 0);
  for (int u = 0; u < nodes; ++u) {
    dag.offsets[u + 1] = dag.offsets[u] + static_cast<int>(out[u].size());
    dag.heads.insert(dag.heads.end(), out[u].begin(), out[u].end());
  }
  dag.lengths.resize(dag.heads.size());
  return dag;
}

struct IterationResult {
  std::vector<int> selected;
  std::vector<std::optional<Rational>> hop_lengths;
};

template <class Value>
struct Workspace {
  kernels::Dag<Value> dag;
  kernels::DistanceTable<Value> table;
  bool ready = false;
};

// One pass of the shortest-path machinery on scaled node weights: returns
// the minimal elements of the tight-chain order and the hop-constrained
// sink distances through them.
template <class Value>
IterationResult RunIteration(const Poset& poset,
                             const AugmentedCoverGraph& graph,
                             const std::vector<Value>& node_weight,
                             const mpz_class& denominator,
                             const std::vector<int>& surviving, bool serial,
                             Workspace<Value>& ws) {
  if (!ws.ready) {
    ws.dag = BuildKernelDag<Value>(graph);
    ws.table.Resize(graph.num_nodes());
    ws.ready = true;
  }
  kernels::Dag<Value>& dag = ws.dag;
  for (size_t a = 0; a < dag.heads.size(); ++a) {
    dag.lengths[a] = node_weight[dag.heads[a]];
  }
  const int s = graph.source();
  const int t = graph.sink();
  std::vector<int> sources;
  sources.reserve(surviving.size() + 1);
  sources.push_back(s);
  sources.insert(sources.end(), surviving.begin(), surviving.end());
  if (serial) {
    kernels::ShortestFromSourcesSerial(dag, std::span<const int>(sources),
                                       ws.table);
  } else {
    kernels::ShortestFromSourcesParallel(dag, std::span<const int>(sources),
                                         ws.table);
  }
  const kernels::DistanceTable<Value>& m = ws.table;

  IterationResult result;
  Value sum;
  for (int y : surviving) {
    bool minimal = true;
    for (int x : surviving) {
      if (x == y || !poset.Less(x, y)) continue;
      sum = m.at(s, x) + m.at(x, y);
      sum = sum + m.at(y, t);
      if (sum == 0) {
        minimal = false;
        break;
      }
    }
    if (minimal) result.selected.push_back(y);
  }
  const std::vector<int>& selected = result.selected;
  const int count = static_cast<int>(selected.size());

  // Layered relaxation over the whole augmented cover graph; best[q][v] is
  // the shortest source-to-v distance through q selected elements, v
  // included. Restricting the graph to the selection would miss chains that
  // skip a selected element lying between two others they contain.
  const int nodes = dag.num_nodes;
  std::vector<char> is_selected(nodes, 0);
  for (int x : selected) is_selected[x] = 1;
  std::vector<Value> best(static_cast<size_t>(count + 1) * nodes);
  std::vector<char> reached(best.size(), 0);
  auto cell = [nodes](int q, int v) {
    return static_cast<size_t>(q) * nodes + v;
  };
  best[cell(0, s)] = Value(0);
  reached[cell(0, s)] = 1;
  Value candidate;
  for (int u : dag.topological_order) {
    for (int q = 0; q <= count; ++q) {
      if (!reached[cell(q, u)]) continue;
      for (int a = dag.offsets[u]; a < dag.offsets[u + 1]; ++a) {
        const int v = dag.heads[a];
        const int next = q + is_selected[v];
        if (next > count) continue;
        candidate = best[cell(q, u)] + dag.lengths[a];
        if (!reached[cell(next, v)] || candidate < best[cell(next, v)]) {
          best[cell(next, v)] = candidate;
          reached[cell(next, v)] = 1;
        }
      }
    }
  }
  result.hop_lengths.resize(count + 1);
  for (int q = 1; q <= count; ++q) {
    if (reached[cell(q, t)]) {
      result.hop_lengths[q] = Unscale(best[cell(q, t)], denominator);
    }
  }
  return result;
}

}  // namespace

AugmentedCoverGraph AugmentCoverGraph(const Poset& poset) {
  AugmentedCoverGraph graph;
  graph.num_elements = poset.size();
  for (int x = 0; x < poset.size(); ++x) {
    if (poset.lower_covers(x).empty()) graph.arcs.emplace_back(graph.source(), x);
  }
  for (const auto& edge : poset.cover_edges()) graph.arcs.push_back(edge);
  for (int x = 0; x < poset.size(); ++x) {
    if (poset.upper_covers(x).empty()) graph.arcs.emplace_back(x, graph.sink());
  }
  return graph;
}

std::vector<WeightedArc> WeightArcs(const AugmentedCoverGraph& graph,
                                    const std::vector<Rational>& rho,
                                    const std::vector<Rational>& beta,
                                    const Rational& sink_weight) {
  std::vector<WeightedArc> arcs;
  arcs.reserve(graph.arcs.size());
  for (const auto& [x, y] : graph.arcs) {
    arcs.push_back({x, y,
                    y == graph.sink() ? sink_weight : rho[y] + beta[y]});
  }
  return arcs;
}

AffineSolution SolveQAffine(const Poset& poset,
                            const std::vector<Rational>& rho,
                            const Rational& alpha,
                            const std::vector<Rational>& beta,
                            const AffineSolveOptions& options) {
  const int n = poset.size();
  if (static_cast<int>(rho.size()) != n ||
      static_cast<int>(beta.size()) != n) {
    throw Error(ErrorCode::kMalformedInput,
                "rho and beta must cover every element");
  }
  for (int x = 0; x < n; ++x) {
    if (IsNegative(rho[x]) || rho[x] > 1) {
      throw Error(ErrorCode::kMalformedInput,
                  "rho of " + poset.label(x).text() + " is outside [0,1]");
    }
  }
  std::vector<Rational> combined(n);
  for (int x = 0; x < n; ++x) combined[x] = rho[x] + beta[x];
  if (MinChainSum(poset, combined) < alpha) {
    throw Error(ErrorCode::kNecessaryConditionViolated,
                "the shortest source-sink distance is negative");
  }
  if (MinChainSum(poset, beta) < alpha - 1) {
    throw Error(ErrorCode::kPiAboveOne, "some chain value exceeds 1");
  }

  const AugmentedCoverGraph graph = AugmentCoverGraph(poset);
  const int nodes = graph.num_nodes();
  std::vector<Rational> r = rho;
  Rational beta_t = -alpha;
  std::vector<char> in_x(n, 0);
  for (int x = 0; x < n; ++x) in_x[x] = IsPositive(r[x]);

  AffineSolution solution;
  const int iteration_bound = n + static_cast<int>(poset.cover_edges().size());
  Workspace<Int128> fast;
  Workspace<mpz_class> big;
  std::vector<Rational> weight(nodes);
  std::vector<mpz_class> scaled(nodes);
  std::vector<Int128> fast_weight(nodes);

  while (true) {
    std::vector<int> surviving;
    for (int x = 0; x < n; ++x) {
      if (in_x[x]) surviving.push_back(x);
    }
    if (surviving.empty()) break;
    if (solution.iterations >= iteration_bound) {
      throw std::logic_error("affine solver exceeded its iteration bound");
    }
    ++solution.iterations;

    for (int y = 0; y < n; ++y) weight[y] = r[y] + beta[y];
    weight[graph.source()] = 0;
    weight[graph.sink()] = beta_t;
    mpz_class denominator = 1;
    for (const Rational& w : weight) {
      mpz_lcm(denominator.get_mpz_t(), denominator.get_mpz_t(),
              w.get_den_mpz_t());
    }
    bool fits = !options.force_big_integers;
    for (int v = 0; v < nodes; ++v) {
      scaled[v] = weight[v].get_num() * (denominator / weight[v].get_den());
      if (!scaled[v].fits_slong_p()) fits = false;
    }
    IterationResult step;
    if (fits) {
      for (int v = 0; v < nodes; ++v) fast_weight[v] = scaled[v].get_si();
      step = RunIteration<Int128>(poset, graph, fast_weight, denominator,
                                  surviving, options.serial, fast);
    } else {
      step = RunIteration<mpz_class>(poset, graph, scaled, denominator,
                                     surviving, options.serial, big);
    }

    Rational w = r[step.selected.front()];
    for (int x : step.selected) {
      if (r[x] < w) w = r[x];
    }
    for (size_t q = 2; q < step.hop_lengths.size(); ++q) {
      if (!step.hop_lengths[q]) continue;
      const Rational bound = *step.hop_lengths[q] / static_cast<long>(q - 1);
      if (bound < w) w = bound;
    }
    if (!IsPositive(w)) {
      throw std::logic_error("affine solver produced a nonpositive weight");
    }

    if (options.trace) {
      AffineIterationState state;
      state.k = solution.iterations;
      state.surviving_elements = surviving;
      state.rho = r;
      state.beta_t = beta_t;
      state.selected = step.selected;
      state.hop_lengths = step.hop_lengths;
      state.weight = w;
      solution.trace.push_back(std::move(state));
    }

    solution.sigma[step.selected] += w;
    solution.total += w;
    for (int x : step.selected) {
      r[x] -= w;
      in_x[x] = IsPositive(r[x]);
    }
    beta_t += w;
  }
  return solution;
}

}  // namespace posetgame
