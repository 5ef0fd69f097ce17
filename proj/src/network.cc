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

#include "posetgame/network.h"

#include <algorithm>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "posetgame/errors.h"

namespace posetgame {

FlowNetwork FlowNetwork::Create(std::vector<Label> nodes, const Label& s,
                                const Label& t,
                                const std::vector<EdgeSpec>& edges,
                                const Rational& p1, const Rational& p2) {
  std::sort(nodes.begin(), nodes.end());
  if (std::adjacent_find(nodes.begin(), nodes.end()) != nodes.end()) {
    throw Error(ErrorCode::kMalformedInput, "duplicate node id");
  }
  std::set<std::string> texts;
  for (const Label& n : nodes) {
    if (!texts.insert(n.text()).second) {
      throw Error(ErrorCode::kMalformedInput,
                  "node ids must be distinct as text: " + n.text());
    }
  }
  if (!IsPositive(p1) || !IsPositive(p2)) {
    throw Error(ErrorCode::kMalformedInput, "p1 and p2 must be positive");
  }

  FlowNetwork net;
  net.nodes_ = std::move(nodes);
  net.p1_ = p1;
  net.p2_ = p2;
  auto index_of = [&](const Label& l) {
    const int i = net.NodeIndex(l);
    if (i < 0) {
      throw Error(ErrorCode::kUnknownElement, "unknown node " + l.text());
    }
    return i;
  };
  net.s_ = index_of(s);
  net.t_ = index_of(t);
  if (net.s_ == net.t_) {
    throw Error(ErrorCode::kMalformedInput, "s and t must differ");
  }
  if (edges.empty()) {
    throw Error(ErrorCode::kDisconnected, "network has no edges");
  }

  std::set<std::pair<int, int>> seen;
  for (const EdgeSpec& spec : edges) {
    NetworkEdge e{index_of(spec.from), index_of(spec.to), spec.c, spec.b,
                  spec.d};
    if (e.from == e.to) {
      throw Error(ErrorCode::kNotAcyclic, "self-loop at " + spec.from.text());
    }
    if (!seen.insert({e.from, e.to}).second) {
      throw Error(ErrorCode::kMalformedInput, "parallel edge (" +
                                                  spec.from.text() + "," +
                                                  spec.to.text() + ")");
    }
    if (!IsPositive(e.c) || !IsPositive(e.d) || IsNegative(e.b)) {
      throw Error(ErrorCode::kMalformedInput,
                  "edge (" + spec.from.text() + "," + spec.to.text() +
                      ") needs c > 0, d > 0 and b >= 0");
    }
    net.edges_.push_back(std::move(e));
  }
  std::vector<std::pair<std::string, NetworkEdge>> keyed;
  for (NetworkEdge& e : net.edges_) {
    keyed.emplace_back("(" + net.nodes_[e.from].text() + "," +
                           net.nodes_[e.to].text() + ")",
                       std::move(e));
  }
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  net.edges_.clear();
  for (auto& [key, e] : keyed) {
    net.edge_by_label_[key] = static_cast<int>(net.edges_.size());
    net.edges_.push_back(std::move(e));
  }

  const int n = net.num_nodes();
  net.out_.assign(n, {});
  net.in_.assign(n, {});
  for (int e = 0; e < net.num_edges(); ++e) {
    net.out_[net.edges_[e].from].push_back(e);
    net.in_[net.edges_[e].to].push_back(e);
  }

  // Kahn's algorithm, smallest node index first.
  std::vector<int> indegree(n, 0);
  for (const NetworkEdge& e : net.edges_) ++indegree[e.to];
  std::set<int> ready;
  for (int v = 0; v < n; ++v) {
    if (indegree[v] == 0) ready.insert(v);
  }
  while (!ready.empty()) {
    const int v = *ready.begin();
    ready.erase(ready.begin());
    net.topo_.push_back(v);
    for (int e : net.out_[v]) {
      if (--indegree[net.edges_[e].to] == 0) ready.insert(net.edges_[e].to);
    }
  }
  if (static_cast<int>(net.topo_.size()) != n) {
    throw Error(ErrorCode::kNotAcyclic, "network contains a directed cycle");
  }

  std::vector<char> from_s(n, 0), to_t(n, 0);
  from_s[net.s_] = 1;
  for (int v : net.topo_) {
    if (!from_s[v]) continue;
    for (int e : net.out_[v]) from_s[net.edges_[e].to] = 1;
  }
  to_t[net.t_] = 1;
  for (auto it = net.topo_.rbegin(); it != net.topo_.rend(); ++it) {
    for (int e : net.out_[*it]) {
      if (to_t[net.edges_[e].to]) to_t[*it] = 1;
    }
  }
  for (int v = 0; v < n; ++v) {
    if (!from_s[v] || !to_t[v]) {
      throw Error(ErrorCode::kDisconnected,
                  "node " + net.nodes_[v].text() + " is not on an s-t path");
    }
  }
  return net;
}

int FlowNetwork::NodeIndex(const Label& label) const {
  auto it = std::lower_bound(nodes_.begin(), nodes_.end(), label);
  if (it == nodes_.end() || !(*it == label)) return -1;
  return static_cast<int>(it - nodes_.begin());
}

int FlowNetwork::EdgeIndex(int from, int to) const {
  for (int e : out_[from]) {
    if (edges_[e].to == to) return e;
  }
  return -1;
}

int FlowNetwork::EdgeIndexByLabel(const std::string& label) const {
  auto it = edge_by_label_.find(label);
  return it == edge_by_label_.end() ? -1 : it->second;
}

std::string FlowNetwork::EdgeLabel(int e) const {
  return "(" + nodes_[edges_[e].from].text() + "," +
         nodes_[edges_[e].to].text() + ")";
}

std::string FlowNetwork::PathKey(const Path& path) const {
  if (path.empty()) return "";
  std::string key = nodes_[edges_[path.front()].from].text();
  for (int e : path) key += "->" + nodes_[edges_[e].to].text();
  return key;
}

Path FlowNetwork::ParsePathKey(const std::string& key) const {
  std::vector<int> node_seq;
  size_t start = 0;
  while (true) {
    const size_t arrow = key.find("->", start);
    const std::string part = key.substr(
        start, arrow == std::string::npos ? std::string::npos : arrow - start);
    int found = -1;
    for (int v = 0; v < num_nodes(); ++v) {
      if (nodes_[v].text() == part) found = v;
    }
    if (found < 0) {
      throw Error(ErrorCode::kUnknownEdge, "unknown node in path " + key);
    }
    node_seq.push_back(found);
    if (arrow == std::string::npos) break;
    start = arrow + 2;
  }
  if (node_seq.size() < 2 || node_seq.front() != s_ || node_seq.back() != t_) {
    throw Error(ErrorCode::kUnknownEdge, "not an s-t path: " + key);
  }
  Path path;
  for (size_t i = 0; i + 1 < node_seq.size(); ++i) {
    const int e = EdgeIndex(node_seq[i], node_seq[i + 1]);
    if (e < 0) throw Error(ErrorCode::kUnknownEdge, "no edge in path " + key);
    path.push_back(e);
  }
  return path;
}

Rational FlowNetwork::PathCost(const Path& path) const {
  Rational cost = 0;
  for (int e : path) cost += edges_[e].b;
  return cost;
}

Rational FlowNetwork::PathThreshold(const Path& path) const {
  return Rational(1) - PathCost(path) / p1_;
}

bool FlowNetwork::HasZeroTransportCost() const {
  for (const NetworkEdge& e : edges_) {
    if (IsZero(e.b)) return true;
  }
  return false;
}

std::vector<Path> EnumeratePaths(const FlowNetwork& network, int64_t cap) {
  std::vector<Path> paths;
  Path current;
  // Iterative DFS over (node, next out-edge position).
  std::vector<std::pair<int, size_t>> stack = {{network.s(), 0}};
  while (!stack.empty()) {
    auto& [node, pos] = stack.back();
    if (node == network.t()) {
      if (static_cast<int64_t>(paths.size()) >= cap) {
        throw Error(ErrorCode::kPathLimitExceeded,
                    "more than " + std::to_string(cap) + " s-t paths");
      }
      paths.push_back(current);
      stack.pop_back();
      if (!current.empty()) current.pop_back();
      continue;
    }
    const std::vector<int>& out = network.out_edges(node);
    if (pos == out.size()) {
      stack.pop_back();
      if (!current.empty()) current.pop_back();
      continue;
    }
    const int e = out[pos++];
    current.push_back(e);
    stack.push_back({network.edge(e).to, 0});
  }
  return paths;
}

}  // namespace posetgame
