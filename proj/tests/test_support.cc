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

#include "test_support.h"

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>

namespace posetgame::testing {
namespace {

// Minimum over maximal chains of the sum of `weight`, by dynamic
// programming over the Hasse diagram.
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

std::vector<Rational> RandomRho(std::mt19937_64& rng, int n,
                                int denominator = 10) {
  std::vector<Rational> rho(n);
  std::uniform_int_distribution<int> coin(0, 4);
  for (int x = 0; x < n; ++x) {
    rho[x] = coin(rng) == 0 ? Rational(0)
                            : RandomRational(rng, 1, denominator, denominator);
  }
  return rho;
}

}  // namespace

Poset IntPoset(const std::vector<int>& elements,
               const std::vector<std::pair<int, int>>& relations) {
  std::vector<Label> labels;
  for (int e : elements) labels.push_back(Label::Integer(e));
  std::vector<std::pair<Label, Label>> rel;
  for (const auto& [a, b] : relations) {
    rel.emplace_back(Label::Integer(a), Label::Integer(b));
  }
  return BuildPoset(labels, rel);
}

std::vector<int> Indices(const Poset& poset, const std::vector<int>& labels) {
  std::vector<int> result;
  for (int l : labels) result.push_back(poset.IndexOf(Label::Integer(l)));
  return result;
}

std::vector<Rational> ByLabel(const Poset& poset,
                              const std::map<int, const char*>& values) {
  std::vector<Rational> result(poset.size());
  for (const auto& [label, text] : values) {
    result[poset.IndexOf(Label::Integer(label))] = Q(text);
  }
  return result;
}

ChainConstraintProblem WorkedExampleProblem() {
  Poset poset = IntPoset({1, 2, 3, 4, 5}, {{1, 3}, {2, 3}, {3, 4}, {3, 5}});
  std::vector<Rational> rho = ByLabel(
      poset, {{1, "0.4"}, {2, "0.3"}, {3, "0.5"}, {4, "0.5"}, {5, "0.7"}});
  std::map<MaximalChain, Rational> pi = {
      {Indices(poset, {1, 3, 4}), Q("0.8")},
      {Indices(poset, {1, 3, 5}), Q("0.8")},
      {Indices(poset, {2, 3, 4}), Q("0.6")},
      {Indices(poset, {2, 3, 5}), Q("0.6")},
  };
  return ChainConstraintProblem::Explicit(std::move(poset), rho, pi);
}

ChainConstraintProblem WorkedExampleAffineProblem() {
  Poset poset = IntPoset({1, 2, 3, 4, 5}, {{1, 3}, {2, 3}, {3, 4}, {3, 5}});
  std::vector<Rational> rho = ByLabel(
      poset, {{1, "0.4"}, {2, "0.3"}, {3, "0.5"}, {4, "0.5"}, {5, "0.7"}});
  std::vector<Rational> beta = ByLabel(poset, {{1, "0.2"}, {2, "0.4"}});
  return ChainConstraintProblem::Affine(std::move(poset), rho, Rational(1),
                                        beta);
}

ChainConstraintProblem CrossingProblem() {
  Poset poset = IntPoset({1, 2, 3, 4, 5, 6},
                         {{1, 3}, {1, 4}, {2, 4}, {3, 5}, {4, 5}, {4, 6}});
  std::vector<Rational> rho =
      ByLabel(poset, {{1, "0.4"}, {4, "0.4"}, {5, "0.4"}});
  std::map<MaximalChain, Rational> pi = {
      {Indices(poset, {1, 3, 5}), Q("0.8")},
      {Indices(poset, {1, 4, 5}), Q("0.8")},
      {Indices(poset, {1, 4, 6}), Q("0.8")},
      {Indices(poset, {2, 4, 5}), Q("0.8")},
      {Indices(poset, {2, 4, 6}), Q("0.4")},
  };
  return ChainConstraintProblem::Explicit(std::move(poset), rho, pi);
}

FlowNetwork TwoPathNetwork() {
  const Label s = Label::String("s"), t = Label::String("t");
  const Label one = Label::Integer(1), two = Label::Integer(2);
  std::vector<EdgeSpec> edges = {
      {s, one, Q("2"), Q("1"), Q("1")},
      {s, two, Q("2"), Q("1"), Q("2")},
      {two, one, Q("2"), Q("1"), Q("2")},
      {one, t, Q("3"), Q("1"), Q("2")},
  };
  return FlowNetwork::Create({s, one, two, t}, s, t, edges, Q("10"), Q("1"));
}

FlowNetwork SingleEdgeNetwork(const Rational& c, const Rational& b,
                              const Rational& d, const Rational& p1,
                              const Rational& p2) {
  const Label s = Label::String("s"), t = Label::String("t");
  return FlowNetwork::Create({s, t}, s, t, {{s, t, c, b, d}}, p1, p2);
}

Rational RandomRational(std::mt19937_64& rng, int lo, int hi, int den) {
  std::uniform_int_distribution<int> dist(lo, hi);
  Rational r(dist(rng), den);
  r.canonicalize();
  return r;
}

Poset RandomPoset(std::mt19937_64& rng, int n, double p) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::bernoulli_distribution related(p);
  std::vector<std::pair<int, int>> relations;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (related(rng)) relations.emplace_back(perm[i], perm[j]);
    }
  }
  std::vector<int> elements(n);
  std::iota(elements.begin(), elements.end(), 1);
  return IntPoset(elements, relations);
}

ChainConstraintProblem RandomExplicitProblem(std::mt19937_64& rng,
                                             int max_elements) {
  std::uniform_int_distribution<int> size(1, max_elements);
  std::uniform_real_distribution<double> density(0.15, 0.7);
  Poset poset = RandomPoset(rng, size(rng), density(rng));
  const int n = poset.size();
  std::vector<Rational> rho = RandomRho(rng, n);

  // Arc values on the augmented Hasse diagram: source arcs, cover arcs and
  // sink arcs.
  std::vector<Rational> from_source(n), to_sink(n);
  std::map<std::pair<int, int>, Rational> cover;
  for (int x = 0; x < n; ++x) {
    from_source[x] = RandomRational(rng, -5, 5, 10);
    to_sink[x] = RandomRational(rng, -5, 5, 10);
  }
  for (const auto& edge : poset.cover_edges()) {
    cover[edge] = RandomRational(rng, -5, 5, 10);
  }
  const std::vector<MaximalChain> chains = EnumerateMaximalChains(poset);
  std::vector<Rational> raw(chains.size());
  std::optional<Rational> shift;
  for (size_t c = 0; c < chains.size(); ++c) {
    const MaximalChain& chain = chains[c];
    raw[c] = from_source[chain.front()] + to_sink[chain.back()];
    Rational mass = 0;
    for (size_t i = 0; i < chain.size(); ++i) {
      mass += rho[chain[i]];
      if (i + 1 < chain.size()) raw[c] += cover[{chain[i], chain[i + 1]}];
    }
    const Rational need = std::max(Rational(raw[c] - mass),
                                   Rational(raw[c] - 1));
    if (!shift || need > *shift) shift = need;
  }
  std::bernoulli_distribution loose(0.5);
  if (loose(rng)) *shift += RandomRational(rng, 1, 5, 10);
  std::map<MaximalChain, Rational> pi;
  for (size_t c = 0; c < chains.size(); ++c) pi[chains[c]] = raw[c] - *shift;
  return ChainConstraintProblem::Explicit(std::move(poset), rho, pi);
}

ChainConstraintProblem RandomAffineProblemOn(std::mt19937_64& rng,
                                             Poset poset,
                                             int rho_denominator) {
  const int n = poset.size();
  std::vector<Rational> rho = RandomRho(rng, n, rho_denominator);
  std::vector<Rational> beta(n);
  for (int x = 0; x < n; ++x) beta[x] = RandomRational(rng, -3, 5, 10);
  std::vector<Rational> combined(n);
  for (int x = 0; x < n; ++x) combined[x] = rho[x] + beta[x];
  Rational alpha = std::min(MinChainSum(poset, combined),
                            Rational(MinChainSum(poset, beta) + 1));
  std::bernoulli_distribution loose(0.5);
  if (loose(rng)) alpha -= RandomRational(rng, 1, 5, 10);
  return ChainConstraintProblem::Affine(std::move(poset), rho, alpha, beta);
}

ChainConstraintProblem RandomAffineProblem(std::mt19937_64& rng,
                                           int max_elements) {
  std::uniform_int_distribution<int> size(1, max_elements);
  std::uniform_real_distribution<double> density(0.15, 0.7);
  return RandomAffineProblemOn(rng, RandomPoset(rng, size(rng), density(rng)));
}

Poset LayeredPoset(std::mt19937_64& rng, int layers, int width, int degree) {
  std::vector<int> elements(layers * width);
  std::iota(elements.begin(), elements.end(), 1);
  std::vector<std::pair<int, int>> relations;
  std::vector<int> next(width);
  for (int layer = 0; layer + 1 < layers; ++layer) {
    for (int i = 0; i < width; ++i) {
      std::iota(next.begin(), next.end(), 0);
      std::shuffle(next.begin(), next.end(), rng);
      for (int j = 0; j < degree && j < width; ++j) {
        relations.emplace_back(layer * width + i + 1,
                               (layer + 1) * width + next[j] + 1);
      }
    }
  }
  return IntPoset(elements, relations);
}

FlowNetwork RandomNetwork(std::mt19937_64& rng, int max_edges) {
  std::uniform_int_distribution<int> interior_count(0, 4);
  std::uniform_real_distribution<double> density(0.4, 0.9);
  // Rejection sampling up to an edge count drawn uniformly, so that large
  // networks are as common as small ones.
  const int target = std::uniform_int_distribution<int>(1, max_edges)(rng);
  while (true) {
    const int interior = interior_count(rng);
    const int n = interior + 2;  // 0 is s, n-1 is t
    std::bernoulli_distribution keep(density(rng));
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (keep(rng)) edges.emplace_back(i, j);
      }
    }
    std::vector<char> from_s(n, 0), to_t(n, 0);
    from_s[0] = 1;
    for (int i = 0; i < n; ++i) {
      for (const auto& [a, b] : edges) {
        if (a == i && from_s[a]) from_s[b] = 1;
      }
    }
    to_t[n - 1] = 1;
    for (int i = n - 1; i >= 0; --i) {
      for (const auto& [a, b] : edges) {
        if (a == i && to_t[b]) to_t[a] = 1;
      }
    }
    std::vector<std::pair<int, int>> kept;
    std::set<int> used = {0, n - 1};
    for (const auto& [a, b] : edges) {
      if (from_s[a] && to_t[b]) {
        kept.emplace_back(a, b);
        used.insert(a);
        used.insert(b);
      }
    }
    if (static_cast<int>(kept.size()) != target) continue;
    auto label = [&](int v) {
      if (v == 0) return Label::String("s");
      if (v == n - 1) return Label::String("t");
      return Label::Integer(v);
    };
    std::vector<Label> nodes;
    for (int v : used) nodes.push_back(label(v));
    std::vector<EdgeSpec> specs;
    for (const auto& [a, b] : kept) {
      specs.push_back({label(a), label(b), RandomRational(rng, 1, 6, 2),
                       RandomRational(rng, 1, 6, 4),
                       RandomRational(rng, 1, 8, 2)});
    }
    return FlowNetwork::Create(nodes, label(0), label(n - 1), specs,
                               RandomRational(rng, 2, 12, 1),
                               RandomRational(rng, 1, 3, 1));
  }
}

std::optional<std::vector<Rational>> SolveLinearSystem(
    std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
  const int n = static_cast<int>(b.size());
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    while (pivot < n && IsZero(a[pivot][col])) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(a[pivot], a[col]);
    std::swap(b[pivot], b[col]);
    for (int r = 0; r < n; ++r) {
      if (r == col || IsZero(a[r][col])) continue;
      const Rational factor = a[r][col] / a[col][col];
      for (int c = col; c < n; ++c) a[r][c] -= factor * a[col][c];
      b[r] -= factor * b[col];
    }
  }
  for (int r = 0; r < n; ++r) b[r] /= a[r][r];
  return b;
}

std::optional<Rational> VertexEnumerationOptimum(const LinearProgram& lp) {
  const int n = lp.num_vars;
  const int m = static_cast<int>(lp.rows.size());
  // Constraint i < m is row i; constraint m + j is x_j >= 0.
  auto coefficients = [&](int i) {
    std::vector<Rational> row(n);
    if (i < m) {
      for (const auto& [j, v] : lp.rows[i].terms) row[j] += v;
    } else {
      row[i - m] = 1;
    }
    return row;
  };
  auto feasible = [&](const std::vector<Rational>& x) {
    for (int j = 0; j < n; ++j) {
      if (IsNegative(x[j])) return false;
    }
    for (const LinearProgram::Row& row : lp.rows) {
      Rational lhs = 0;
      for (const auto& [j, v] : row.terms) lhs += v * x[j];
      if (row.sense == RowSense::kLessEqual && lhs > row.rhs) return false;
      if (row.sense == RowSense::kGreaterEqual && lhs < row.rhs) return false;
      if (row.sense == RowSense::kEqual && lhs != row.rhs) return false;
    }
    return true;
  };
  std::optional<Rational> best;
  std::vector<int> pick(n);
  // Enumerate n-subsets of the m + n constraints in lexicographic order.
  const int total = m + n;
  if (n == 0) return Rational(0);
  for (int i = 0; i < n; ++i) pick[i] = i;
  while (true) {
    std::vector<std::vector<Rational>> a;
    std::vector<Rational> b;
    for (int i : pick) {
      a.push_back(coefficients(i));
      b.push_back(i < m ? lp.rows[i].rhs : Rational(0));
    }
    if (auto x = SolveLinearSystem(a, b); x && feasible(*x)) {
      Rational value = 0;
      for (int j = 0; j < n; ++j) value += lp.objective[j] * (*x)[j];
      if (!best || value > *best) best = value;
    }
    int i = n - 1;
    while (i >= 0 && pick[i] == total - n + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int k = i + 1; k < n; ++k) pick[k] = pick[k - 1] + 1;
  }
  return best;
}

}  // namespace posetgame::testing
