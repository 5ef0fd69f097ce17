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

#ifndef POSETGAME_DAG_SHORTEST_PATH_H_
#define POSETGAME_DAG_SHORTEST_PATH_H_

#include <algorithm>
#include <optional>
#include <span>
#include <vector>

#include "posetgame/rational.h"

namespace posetgame {

struct WeightedArc {
  int from = 0;
  int to = 0;
  Rational length;
};

// Shortest distances between all node pairs; nullopt for +infinity.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  explicit DistanceMatrix(int num_nodes)
      : num_nodes_(num_nodes),
        values_(static_cast<size_t>(num_nodes) * num_nodes) {}

  int num_nodes() const { return num_nodes_; }
  const std::optional<Rational>& at(int from, int to) const {
    return values_[static_cast<size_t>(from) * num_nodes_ + to];
  }
  std::optional<Rational>& at(int from, int to) {
    return values_[static_cast<size_t>(from) * num_nodes_ + to];
  }

 private:
  int num_nodes_ = 0;
  std::vector<std::optional<Rational>> values_;
};

// Topological sort plus one relaxation pass per source. Throws
// Error(kNotAcyclic).
DistanceMatrix AllPairsDagShortest(int num_nodes,
                                   const std::vector<WeightedArc>& arcs);

// Same result computed with the single-threaded kernel.
DistanceMatrix AllPairsDagShortestSerial(int num_nodes,
                                         const std::vector<WeightedArc>& arcs);

// Minimum source-to-sink length over paths through exactly q nodes other
// than source and sink, for q = 0..num_nodes-2; nullopt where no such path
// exists. `arcs` must form a DAG.
std::vector<std::optional<Rational>> ConstrainedHopShortest(
    int num_nodes, const std::vector<WeightedArc>& arcs, int source, int sink);

// Kahn order with the smallest ready node first; empty when cyclic.
std::vector<int> DagTopologicalOrder(int num_nodes,
                                     const std::vector<std::vector<int>>& out);

namespace kernels {

// Forward-star DAG with per-arc lengths of an exact numeric type (a
// rational, a big integer or a 128-bit integer holding scaled values).
template <class Value>
struct Dag {
  int num_nodes = 0;
  std::vector<int> offsets;  // size num_nodes + 1
  std::vector<int> heads;
  std::vector<Value> lengths;
  std::vector<int> topological_order;
  std::vector<int> position;  // inverse of topological_order
};

// Row-major distance table; rows are indexed by node id and only rows of
// requested sources are written.
template <class Value>
struct DistanceTable {
  int num_nodes = 0;
  std::vector<Value> value;
  std::vector<char> reached;

  void Resize(int n) {
    num_nodes = n;
    value.resize(static_cast<size_t>(n) * n);
    reached.assign(static_cast<size_t>(n) * n, 0);
  }
  const Value& at(int from, int to) const {
    return value[static_cast<size_t>(from) * num_nodes + to];
  }
  bool finite(int from, int to) const {
    return reached[static_cast<size_t>(from) * num_nodes + to];
  }
};

template <class Value>
void RelaxFromSource(const Dag<Value>& dag, int source,
                     DistanceTable<Value>& table) {
  const size_t row = static_cast<size_t>(source) * dag.num_nodes;
  Value* dist = table.value.data() + row;
  char* reached = table.reached.data() + row;
  std::fill(reached, reached + dag.num_nodes, 0);
  dist[source] = Value(0);
  reached[source] = 1;
  Value candidate;
  for (int p = dag.position[source]; p < dag.num_nodes; ++p) {
    const int u = dag.topological_order[p];
    if (!reached[u]) continue;
    for (int a = dag.offsets[u]; a < dag.offsets[u + 1]; ++a) {
      const int v = dag.heads[a];
      candidate = dist[u] + dag.lengths[a];
      if (!reached[v] || candidate < dist[v]) {
        dist[v] = candidate;
        reached[v] = 1;
      }
    }
  }
}

// Reference implementation kept for testing and benchmarking.
template <class Value>
void ShortestFromSourcesSerial(const Dag<Value>& dag,
                               std::span<const int> sources,
                               DistanceTable<Value>& table) {
  for (int source : sources) RelaxFromSource(dag, source, table);
}

template <class Value>
void ShortestFromSourcesParallel(const Dag<Value>& dag,
                                 std::span<const int> sources,
                                 DistanceTable<Value>& table) {
  const int count = static_cast<int>(sources.size());
#pragma omp parallel for schedule(dynamic, 4)
  for (int i = 0; i < count; ++i) RelaxFromSource(dag, sources[i], table);
}

}  // namespace kernels
}  // namespace posetgame

#endif  // POSETGAME_DAG_SHORTEST_PATH_H_
