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

#ifndef POSETGAME_POSET_H_
#define POSETGAME_POSET_H_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "posetgame/label.h"
#include "posetgame/network.h"

namespace posetgame {

// Element indices refer to positions in Poset::labels(), which are sorted.
// A maximal chain is stored as its element indices from bottom to top.
using MaximalChain = std::vector<int>;

inline constexpr int64_t kDefaultChainCap = 1000000;

// Finite poset stored as its Hasse diagram plus a reachability matrix.
class Poset {
 public:
  int size() const { return static_cast<int>(labels_.size()); }
  const std::vector<Label>& labels() const { return labels_; }
  const Label& label(int x) const { return labels_[x]; }
  // -1 when absent.
  int IndexOf(const Label& label) const;
  // -1 when no element has this text.
  int IndexOfText(const std::string& text) const;

  // Sorted (x, y) pairs with y covering x.
  const std::vector<std::pair<int, int>>& cover_edges() const {
    return cover_edges_;
  }
  const std::vector<int>& upper_covers(int x) const { return up_[x]; }
  const std::vector<int>& lower_covers(int x) const { return down_[x]; }
  // Strict order x < y.
  bool Less(int x, int y) const {
    return (reach_[x][y >> 6] >> (y & 63)) & 1;
  }
  bool LessOrEqual(int x, int y) const { return x == y || Less(x, y); }
  // Topological order of the Hasse diagram, smallest index first among
  // ready elements.
  const std::vector<int>& topological_order() const { return topo_; }
  // Strict up-set of x as a bit row of size() bits.
  const std::vector<uint64_t>& up_set(int x) const { return reach_[x]; }

  // Dash-joined labels of a sorted index set or a chain, e.g. "1-3-4".
  std::string Key(const std::vector<int>& elements) const;

  friend Poset BuildPosetFromIndices(
      std::vector<Label> labels,
      const std::vector<std::pair<int, int>>& relations);

 private:
  std::vector<Label> labels_;
  std::vector<std::pair<int, int>> cover_edges_;
  std::vector<std::vector<int>> up_;
  std::vector<std::vector<int>> down_;
  std::vector<std::vector<uint64_t>> reach_;
  std::vector<int> topo_;
};

// Order closure then transitive reduction of `relations`. Throws Error with
// kEmptyPoset, kUnknownElement or kCycleDetected. Pairs (x, x) are accepted
// as reflexive assertions.
Poset BuildPoset(std::vector<Label> elements,
                 const std::vector<std::pair<Label, Label>>& relations);

// Same as BuildPoset with relations given as indices into `labels`, which
// must be sorted and unique.
Poset BuildPosetFromIndices(std::vector<Label> labels,
                            const std::vector<std::pair<int, int>>& relations);

// Elements without a lower cover, in increasing index order.
std::vector<int> MinimalElements(const Poset& poset);

// Every maximal chain once, in lexicographic order of index sequences.
// Throws Error(kChainLimitExceeded) when more than `cap` chains exist.
std::vector<MaximalChain> EnumerateMaximalChains(
    const Poset& poset, int64_t cap = kDefaultChainCap);

// The poset on `restricted` (indices of `poset`) ordered by x < y iff some
// chain of `chains` contains both with x below y. Element i of the result
// is the i-th smallest index of `restricted`.
Poset SubposetFromChains(const Poset& poset, std::vector<int> restricted,
                         const std::vector<MaximalChain>& chains);

// Poset on the network's edges where u precedes v iff some s-t path
// traverses u then v. Element e of the result is network edge e.
Poset EdgePosetFromNetwork(const FlowNetwork& network);

}  // namespace posetgame

#endif  // POSETGAME_POSET_H_
