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

#ifndef POSETGAME_NETWORK_H_
#define POSETGAME_NETWORK_H_

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "posetgame/label.h"
#include "posetgame/rational.h"

namespace posetgame {

struct EdgeSpec {
  Label from;
  Label to;
  Rational c;  // capacity
  Rational b;  // transportation cost per unit
  Rational d;  // interdiction cost
};

struct NetworkEdge {
  int from = 0;
  int to = 0;
  Rational c;
  Rational b;
  Rational d;
};

// An s-t path, as the sequence of edge indices from s to t.
using Path = std::vector<int>;

inline constexpr int64_t kDefaultPathCap = 10000;

// Simple acyclic s-t network in which every node and edge lies on an s-t
// path. Nodes are sorted by label. Edges are sorted by EdgeLabel() text,
// which makes edge indices coincide with the element indices of the edge
// poset.
class FlowNetwork {
 public:
  // Validates and normalizes. Throws Error with kUnknownElement,
  // kMalformedInput, kNotAcyclic or kDisconnected.
  static FlowNetwork Create(std::vector<Label> nodes, const Label& s,
                            const Label& t, const std::vector<EdgeSpec>& edges,
                            const Rational& p1, const Rational& p2);

  int num_nodes() const { return static_cast<int>(nodes_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  const std::vector<Label>& nodes() const { return nodes_; }
  const std::vector<NetworkEdge>& edges() const { return edges_; }
  const NetworkEdge& edge(int e) const { return edges_[e]; }
  int s() const { return s_; }
  int t() const { return t_; }
  const Rational& p1() const { return p1_; }
  const Rational& p2() const { return p2_; }

  const std::vector<int>& out_edges(int node) const { return out_[node]; }
  const std::vector<int>& in_edges(int node) const { return in_[node]; }
  const std::vector<int>& topological_order() const { return topo_; }

  // -1 when absent.
  int NodeIndex(const Label& label) const;
  int EdgeIndex(int from, int to) const;
  // -1 when no edge carries this label.
  int EdgeIndexByLabel(const std::string& label) const;

  // "(i,j)".
  std::string EdgeLabel(int e) const;
  // Arrow-joined node ids, "s->1->t".
  std::string PathKey(const Path& path) const;
  // Parses PathKey output back into edge indices; throws kUnknownEdge.
  Path ParsePathKey(const std::string& key) const;

  // b_lambda, the transportation cost of a path.
  Rational PathCost(const Path& path) const;
  // 1 - b_lambda / p1.
  Rational PathThreshold(const Path& path) const;

  bool HasZeroTransportCost() const;

 private:
  std::vector<Label> nodes_;
  std::vector<NetworkEdge> edges_;
  std::vector<std::vector<int>> out_;
  std::vector<std::vector<int>> in_;
  std::vector<int> topo_;
  std::map<std::string, int> edge_by_label_;
  int s_ = 0;
  int t_ = 0;
  Rational p1_;
  Rational p2_;
};

// All s-t paths in lexicographic order of edge indices. Throws
// Error(kPathLimitExceeded) when more than `cap` paths exist.
std::vector<Path> EnumeratePaths(const FlowNetwork& network,
                                 int64_t cap = kDefaultPathCap);

}  // namespace posetgame

#endif  // POSETGAME_NETWORK_H_
