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

#include "posetgame/poset.h"

#include <algorithm>
#include <queue>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "posetgame/errors.h"

namespace posetgame {
namespace {

// Kahn's algorithm taking the smallest ready index first. Returns fewer than
// n indices when the graph has a cycle.
std::vector<int> TopologicalOrder(const std::vector<std::vector<int>>& succ) {
  const int n = static_cast<int>(succ.size());
  std::vector<int> indegree(n, 0);
  for (const auto& out : succ) {
    for (int y : out) ++indegree[y];
  }
  std::priority_queue<int, std::vector<int>, std::greater<int>> ready;
  for (int x = 0; x < n; ++x) {
    if (indegree[x] == 0) ready.push(x);
  }
  std::vector<int> order;
  order.reserve(n);
  while (!ready.empty()) {
    const int x = ready.top();
    ready.pop();
    order.push_back(x);
    for (int y : succ[x]) {
      if (--indegree[y] == 0) ready.push(y);
    }
  }
  return order;
}

}  // namespace

int Poset::IndexOf(const Label& label) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
  if (it == labels_.end() || !(*it == label)) return -1;
  return static_cast<int>(it - labels_.begin());
}

int Poset::IndexOfText(const std::string& text) const {
  for (int x = 0; x < size(); ++x) {
    if (labels_[x].text() == text) return x;
  }
  return -1;
}

std::string Poset::Key(const std::vector<int>& elements) const {
  std::string key;
  for (size_t i = 0; i < elements.size(); ++i) {
    if (i > 0) key += '-';
    key += labels_[elements[i]].text();
  }
  return key;
}

Poset BuildPosetFromIndices(std::vector<Label> labels,
                            const std::vector<std::pair<int, int>>& relations) {
  const int n = static_cast<int>(labels.size());
  if (n == 0) throw Error(ErrorCode::kEmptyPoset, "poset has no elements");

  std::vector<std::vector<int>> succ(n);
  for (const auto& [x, y] : relations) {
    if (x < 0 || y < 0 || x >= n || y >= n) {
      throw Error(ErrorCode::kUnknownElement, "relation index out of range");
    }
    if (x != y) succ[x].push_back(y);
  }
  for (auto& out : succ) {
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
  }
  const std::vector<int> order = TopologicalOrder(succ);
  if (static_cast<int>(order.size()) != n) {
    throw Error(ErrorCode::kCycleDetected,
                "relations contain a cycle, violating antisymmetry");
  }

  const int words = (n + 63) / 64;
  std::vector<std::vector<uint64_t>> reach(n,
                                           std::vector<uint64_t>(words, 0));
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const int x = *it;
    for (int y : succ[x]) {
      reach[x][y >> 6] |= uint64_t{1} << (y & 63);
      for (int w = 0; w < words; ++w) reach[x][w] |= reach[y][w];
    }
  }

  Poset poset;
  poset.labels_ = std::move(labels);
  poset.up_.assign(n, {});
  poset.down_.assign(n, {});
  std::vector<uint64_t> implied(words);
  for (int x = 0; x < n; ++x) {
    std::fill(implied.begin(), implied.end(), 0);
    for (int w = 0; w < words; ++w) {
      uint64_t bits = reach[x][w];
      while (bits) {
        const int z = w * 64 + __builtin_ctzll(bits);
        bits &= bits - 1;
        for (int v = 0; v < words; ++v) implied[v] |= reach[z][v];
      }
    }
    for (int w = 0; w < words; ++w) {
      uint64_t bits = reach[x][w] & ~implied[w];
      while (bits) {
        const int y = w * 64 + __builtin_ctzll(bits);
        bits &= bits - 1;
        poset.up_[x].push_back(y);
        poset.down_[y].push_back(x);
        poset.cover_edges_.emplace_back(x, y);
      }
    }
  }
  poset.reach_ = std::move(reach);
  poset.topo_ = TopologicalOrder(poset.up_);
  return poset;
}

Poset BuildPoset(std::vector<Label> elements,
                 const std::vector<std::pair<Label, Label>>& relations) {
  if (elements.empty()) {
    throw Error(ErrorCode::kEmptyPoset, "poset has no elements");
  }
  std::sort(elements.begin(), elements.end());
  if (std::adjacent_find(elements.begin(), elements.end()) !=
      elements.end()) {
    throw Error(ErrorCode::kMalformedInput, "duplicate element id");
  }
  std::set<std::string> texts;
  for (const Label& l : elements) {
    if (!texts.insert(l.text()).second) {
      throw Error(ErrorCode::kMalformedInput,
                  "element ids must be distinct as text: " + l.text());
    }
  }
  auto index_of = [&](const Label& l) {
    auto it = std::lower_bound(elements.begin(), elements.end(), l);
    if (it == elements.end() || !(*it == l)) {
      throw Error(ErrorCode::kUnknownElement, "unknown element " + l.text());
    }
    return static_cast<int>(it - elements.begin());
  };
  std::vector<std::pair<int, int>> indexed;
  indexed.reserve(relations.size());
  for (const auto& [a, b] : relations) {
    indexed.emplace_back(index_of(a), index_of(b));
  }
  return BuildPosetFromIndices(std::move(elements), indexed);
}

std::vector<int> MinimalElements(const Poset& poset) {
  std::vector<int> result;
  for (int x = 0; x < poset.size(); ++x) {
    if (poset.lower_covers(x).empty()) result.push_back(x);
  }
  return result;
}

std::vector<MaximalChain> EnumerateMaximalChains(const Poset& poset,
                                                 int64_t cap) {
  std::vector<MaximalChain> chains;
  MaximalChain current;
  std::vector<std::pair<int, size_t>> stack;
  for (int root : MinimalElements(poset)) {
    current.assign(1, root);
    stack.assign(1, {root, 0});
    while (!stack.empty()) {
      auto& [x, pos] = stack.back();
      const std::vector<int>& up = poset.upper_covers(x);
      if (up.empty()) {
        if (static_cast<int64_t>(chains.size()) >= cap) {
          throw Error(ErrorCode::kChainLimitExceeded,
                      "more than " + std::to_string(cap) + " maximal chains");
        }
        chains.push_back(current);
      }
      if (pos == up.size()) {
        stack.pop_back();
        current.pop_back();
        continue;
      }
      const int y = up[pos++];
      current.push_back(y);
      stack.push_back({y, 0});
    }
  }
  return chains;
}

Poset SubposetFromChains(const Poset& poset, std::vector<int> restricted,
                         const std::vector<MaximalChain>& chains) {
  std::sort(restricted.begin(), restricted.end());
  restricted.erase(std::unique(restricted.begin(), restricted.end()),
                   restricted.end());
  std::vector<int> local(poset.size(), -1);
  std::vector<Label> labels;
  labels.reserve(restricted.size());
  for (size_t i = 0; i < restricted.size(); ++i) {
    local[restricted[i]] = static_cast<int>(i);
    labels.push_back(poset.label(restricted[i]));
  }
  std::vector<std::pair<int, int>> relations;
  for (const MaximalChain& chain : chains) {
    int previous = -1;
    for (int x : chain) {
      if (local[x] < 0) continue;
      if (previous >= 0) relations.emplace_back(previous, local[x]);
      previous = local[x];
    }
  }
  return BuildPosetFromIndices(std::move(labels), relations);
}

Poset EdgePosetFromNetwork(const FlowNetwork& network) {
  std::vector<Label> labels;
  for (int e = 0; e < network.num_edges(); ++e) {
    labels.push_back(Label::String(network.EdgeLabel(e)));
  }
  std::vector<std::pair<int, int>> relations;
  for (int e = 0; e < network.num_edges(); ++e) {
    for (int next : network.out_edges(network.edge(e).to)) {
      relations.emplace_back(e, next);
    }
  }
  return BuildPosetFromIndices(std::move(labels), relations);
}

}  // namespace posetgame
