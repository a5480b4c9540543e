// Copyright 2026 The mycsym Authors
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

#include "mycsym/aut_search.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

namespace mycsym {

void Coloring::validate(int n) const {
  if (static_cast<int>(color.size()) != n) {
    throw GraphError("coloring length does not match vertex count");
  }
  for (int c : color) {
    if (c < 1 || c > d) throw GraphError("color outside [1, d]");
  }
}

namespace {

// Maps arbitrary keys to dense ranks 0..k-1 preserving key order.
template <typename Key>
std::vector<int> rank_keys(const std::vector<Key>& keys) {
  std::vector<int> order(keys.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return keys[a] < keys[b]; });
  std::vector<int> rank(keys.size());
  int next = -1;
  for (std::size_t k = 0; k < order.size(); ++k) {
    if (k == 0 || keys[order[k - 1]] < keys[order[k]]) ++next;
    rank[order[k]] = next;
  }
  return rank;
}

int count_labels(const std::vector<int>& labels) {
  int k = 0;
  for (int c : labels) k = std::max(k, c + 1);
  return k;
}

std::vector<int> individualize(const std::vector<int>& labels, int v) {
  std::vector<int> out(labels.size());
  for (std::size_t x = 0; x < labels.size(); ++x) {
    out[x] = 2 * labels[x] + (static_cast<int>(x) == v ? 0 : 1);
  }
  return out;
}

// Cell sizes followed by the quotient matrix of an equitable partition.
std::vector<int> partition_signature(const Graph& g,
                                     const std::vector<int>& labels) {
  const int k = count_labels(labels);
  std::vector<int> sig(static_cast<std::size_t>(k) * (k + 1), 0);
  std::vector<bool> seen(k, false);
  for (int v = 0; v < g.order(); ++v) {
    const int c = labels[v];
    ++sig[c];
    if (seen[c]) continue;
    seen[c] = true;
    for (int u : g.neighbors(v)) {
      ++sig[k + static_cast<std::size_t>(c) * k + labels[u]];
    }
  }
  return sig;
}

class Searcher {
 public:
  using Visitor = std::function<bool(const Perm&)>;

  Searcher(const Graph& g, const Graph& h, bool exclude_identity,
           Visitor visit)
      : g_(g), h_(h), exclude_identity_(exclude_identity),
        visit_(std::move(visit)) {}

  // Returns true when the visitor asked to stop.
  bool run(std::vector<int> left, std::vector<int> right,
           std::optional<std::pair<int, int>> forced) {
    if (g_.order() != h_.order() || g_.size() != h_.size()) return false;
    left = refine_labels(g_, std::move(left));
    right = refine_labels(h_, std::move(right));
    if (!compatible(left, right)) return false;
    if (forced) {
      if (left[forced->first] != right[forced->second]) return false;
      left = refine_labels(g_, individualize(left, forced->first));
      right = refine_labels(h_, individualize(right, forced->second));
      if (!compatible(left, right)) return false;
    }
    return dfs(left, right);
  }

 private:
  bool compatible(const std::vector<int>& left,
                  const std::vector<int>& right) const {
    return partition_signature(g_, left) == partition_signature(h_, right);
  }

  bool dfs(const std::vector<int>& left, const std::vector<int>& right) {
    const int n = g_.order();
    const int k = count_labels(left);
    if (k == n) return leaf(left, right);

    std::vector<int> size(k, 0);
    for (int c : left) ++size[c];
    int target = 0;
    while (size[target] == 1) ++target;
    int v = 0;
    while (left[v] != target) ++v;

    const auto next_left = refine_labels(g_, individualize(left, v));
    for (int u = 0; u < n; ++u) {
      if (right[u] != target) continue;
      auto next_right = refine_labels(h_, individualize(right, u));
      if (!compatible(next_left, next_right)) continue;
      if (dfs(next_left, next_right)) return true;
    }
    return false;
  }

  bool leaf(const std::vector<int>& left, const std::vector<int>& right) {
    const int n = g_.order();
    std::vector<int> by_label(n);
    for (int u = 0; u < n; ++u) by_label[right[u]] = u;
    std::vector<int> image(n);
    for (int v = 0; v < n; ++v) image[v] = by_label[left[v]];
    for (const auto& [a, b] : g_.edges()) {
      if (!h_.adjacent(image[a], image[b])) return false;
    }
    Perm p(std::move(image));
    if (exclude_identity_ && p.is_identity()) return false;
    return visit_(p);
  }

  const Graph& g_;
  const Graph& h_;
  bool exclude_identity_;
  Visitor visit_;
};

std::vector<int> constraint_labels(const Graph& g,
                                   const SearchConstraint& constraint) {
  const int n = g.order();
  if (constraint.coloring) constraint.coloring->validate(n);
  std::vector<int> fixed_id(n, 0);
  for (int v : constraint.fixed) {
    if (v < 0 || v >= n) throw GraphError("fixed vertex out of range");
    fixed_id[v] = v + 1;
  }
  std::vector<std::tuple<int, int, int>> keys(n);
  for (int v = 0; v < n; ++v) {
    const int color = constraint.coloring ? constraint.coloring->color[v] : 0;
    keys[v] = {g.degree(v), color, fixed_id[v]};
  }
  return rank_keys(keys);
}

}  // namespace

std::vector<int> refine_labels(const Graph& g, std::vector<int> labels) {
  labels = rank_keys(labels);
  const int n = g.order();
  int cells = count_labels(labels);
  std::vector<std::pair<int, std::vector<int>>> keys(n);
  while (cells < n) {
    for (int v = 0; v < n; ++v) {
      auto& [own, around] = keys[v];
      own = labels[v];
      around.clear();
      for (int u : g.neighbors(v)) around.push_back(labels[u]);
      std::sort(around.begin(), around.end());
    }
    labels = rank_keys(keys);
    const int next = count_labels(labels);
    if (next == cells) break;
    cells = next;
  }
  return labels;
}

std::optional<Perm> find_automorphism(const Graph& g,
                                      const SearchConstraint& constraint) {
  auto labels = constraint_labels(g, constraint);
  std::optional<Perm> found;
  Searcher searcher(g, g, constraint.exclude_identity, [&](const Perm& p) {
    found = p;
    return true;
  });
  searcher.run(labels, labels, std::nullopt);
  return found;
}

std::optional<Perm> find_automorphism_mapping(const Graph& g,
                                              const SearchConstraint& constraint,
                                              int from, int to) {
  if (from < 0 || to < 0 || from >= g.order() || to >= g.order()) {
    throw GraphError("vertex out of range");
  }
  auto labels = constraint_labels(g, constraint);
  std::optional<Perm> found;
  Searcher searcher(g, g, constraint.exclude_identity, [&](const Perm& p) {
    found = p;
    return true;
  });
  searcher.run(labels, labels, std::make_pair(from, to));
  return found;
}

bool is_automorphism(const Graph& g, const Perm& p) {
  if (p.size() != g.order()) throw GraphError("permutation length mismatch");
  for (const auto& [a, b] : g.edges()) {
    if (!g.adjacent(p(a), p(b))) return false;
  }
  return true;
}

std::optional<Perm> find_isomorphism(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.size() != h.size()) return std::nullopt;
  if (degree_sequence(g) != degree_sequence(h)) return std::nullopt;
  std::vector<int> left(g.order());
  std::vector<int> right(h.order());
  for (int v = 0; v < g.order(); ++v) {
    left[v] = g.degree(v);
    right[v] = h.degree(v);
  }
  std::optional<Perm> found;
  Searcher searcher(g, h, false, [&](const Perm& p) {
    found = p;
    return true;
  });
  searcher.run(left, right, std::nullopt);
  return found;
}

bool are_isomorphic(const Graph& g, const Graph& h) {
  return find_isomorphism(g, h).has_value();
}

AutomorphismList enumerate_automorphisms(const Graph& g, std::size_t cap,
                                         const SearchConstraint& constraint) {
  if (cap < 1) throw GraphError("automorphism cap must be at least 1");
  AutomorphismList result;
  auto labels = constraint_labels(g, constraint);
  Searcher searcher(g, g, constraint.exclude_identity, [&](const Perm& p) {
    if (result.perms.size() == cap) {
      result.saturated = true;
      return true;
    }
    result.perms.push_back(p);
    return false;
  });
  searcher.run(labels, labels, std::nullopt);
  return result;
}

std::vector<VertexSet> orbits(const Graph& g, const VertexSet& fixed) {
  SearchConstraint constraint;
  constraint.fixed = fixed;
  return orbits(g, constraint);
}

std::vector<VertexSet> orbits(const Graph& g,
                              const SearchConstraint& constraint) {
  const int n = g.order();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  };

  SearchConstraint base = constraint;
  base.exclude_identity = false;
  const auto cells = refine_labels(g, constraint_labels(g, base));
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      if (cells[x] != cells[y] || find(x) == find(y)) continue;
      if (auto p = find_automorphism_mapping(g, base, x, y)) {
        for (int v = 0; v < n; ++v) unite(v, (*p)(v));
      }
    }
  }
  std::vector<VertexSet> out;
  std::vector<int> slot(n, -1);
  for (int v = 0; v < n; ++v) {
    const int root = find(v);
    if (slot[root] < 0) {
      slot[root] = static_cast<int>(out.size());
      out.emplace_back();
    }
    out[slot[root]].push_back(v);
  }
  return out;
}

}  // namespace mycsym
