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

#include "posetgame/dag_shortest_path.h"

#include <numeric>
#include <queue>
#include <vector>

#include "posetgame/errors.h"

namespace posetgame {
namespace {

kernels::Dag<Rational> BuildDag(int num_nodes,
                                const std::vector<WeightedArc>& arcs) {
  std::vector<std::vector<int>> out(num_nodes);
  for (size_t a = 0; a < arcs.size(); ++a) {
    if (arcs[a].from < 0 || arcs[a].from >= num_nodes || arcs[a].to < 0 ||
        arcs[a].to >= num_nodes) {
      throw Error(ErrorCode::kMalformedInput, "arc endpoint out of range");
    }
    out[arcs[a].from].push_back(static_cast<int>(a));
  }
  std::vector<std::vector<int>> succ(num_nodes);
  for (int u = 0; u < num_nodes; ++u) {
    for (int a : out[u]) succ[u].push_back(arcs[a].to);
  }
  kernels::Dag<Rational> dag;
  dag.num_nodes = num_nodes;
  dag.topological_order = DagTopologicalOrder(num_nodes, succ);
  if (static_cast<int>(dag.topological_order.size()) != num_nodes) {
    throw Error(ErrorCode::kNotAcyclic, "graph contains a directed cycle");
  }
  dag.position.resize(num_nodes);
  for (int p = 0; p < num_nodes; ++p) {
    dag.position[dag.topological_order[p]] = p;
  }
  dag.offsets.assign(num_nodes + 1, 0);
  for (int u = 0; u < num_nodes; ++u) {
    dag.offsets[u + 1] = dag.offsets[u] + static_cast<int>(out[u].size());
    for (int a : out[u]) {
      dag.heads.push_back(arcs[a].to);
      dag.lengths.push_back(arcs[a].length);
    }
  }
  return dag;
}

DistanceMatrix ToMatrix(const kernels::DistanceTable<Rational>& table) {
  DistanceMatrix matrix(table.num_nodes);
  for (int u = 0; u < table.num_nodes; ++u) {
    for (int v = 0; v < table.num_nodes; ++v) {
      if (table.finite(u, v)) matrix.at(u, v) = table.at(u, v);
    }
  }
  return matrix;
}

}  // namespace

std::vector<int> DagTopologicalOrder(int num_nodes,
                                     const std::vector<std::vector<int>>& out) {
  std::vector<int> indegree(num_nodes, 0);
  for (const auto& heads : out) {
    for (int v : heads) ++indegree[v];
  }
  std::priority_queue<int, std::vector<int>, std::greater<int>> ready;
  for (int u = 0; u < num_nodes; ++u) {
    if (indegree[u] == 0) ready.push(u);
  }
  std::vector<int> order;
  order.reserve(num_nodes);
  while (!ready.empty()) {
    const int u = ready.top();
    ready.pop();
    order.push_back(u);
    for (int v : out[u]) {
      if (--indegree[v] == 0) ready.push(v);
    }
  }
  return order;
}

DistanceMatrix AllPairsDagShortest(int num_nodes,
                                   const std::vector<WeightedArc>& arcs) {
  const kernels::Dag<Rational> dag = BuildDag(num_nodes, arcs);
  std::vector<int> sources(num_nodes);
  std::iota(sources.begin(), sources.end(), 0);
  kernels::DistanceTable<Rational> table;
  table.Resize(num_nodes);
  kernels::ShortestFromSourcesParallel(dag, std::span<const int>(sources),
                                       table);
  return ToMatrix(table);
}

DistanceMatrix AllPairsDagShortestSerial(int num_nodes,
                                         const std::vector<WeightedArc>& arcs) {
  const kernels::Dag<Rational> dag = BuildDag(num_nodes, arcs);
  std::vector<int> sources(num_nodes);
  std::iota(sources.begin(), sources.end(), 0);
  kernels::DistanceTable<Rational> table;
  table.Resize(num_nodes);
  kernels::ShortestFromSourcesSerial(dag, std::span<const int>(sources),
                                     table);
  return ToMatrix(table);
}

std::vector<std::optional<Rational>> ConstrainedHopShortest(
    int num_nodes, const std::vector<WeightedArc>& arcs, int source,
    int sink) {
  const kernels::Dag<Rational> dag = BuildDag(num_nodes, arcs);
  const int max_hops = num_nodes >= 2 ? num_nodes - 2 : 0;
  // best[v][q]: paths from source to v through q counted nodes, counting v
  // itself unless it is the sink.
  std::vector<std::vector<std::optional<Rational>>> best(
      num_nodes, std::vector<std::optional<Rational>>(max_hops + 1));
  best[source][0] = Rational(0);
  for (int p = dag.position[source]; p < num_nodes; ++p) {
    const int u = dag.topological_order[p];
    for (int a = dag.offsets[u]; a < dag.offsets[u + 1]; ++a) {
      const int v = dag.heads[a];
      const int step = v == sink ? 0 : 1;
      for (int q = 0; q + step <= max_hops; ++q) {
        if (!best[u][q]) continue;
        Rational candidate = *best[u][q] + dag.lengths[a];
        auto& slot = best[v][q + step];
        if (!slot || candidate < *slot) slot = std::move(candidate);
      }
    }
  }
  return best[sink];
}

}  // namespace posetgame
