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

#include "mycsym/twin_quotient.hpp"

#include <algorithm>
#include <map>

#include "mycsym/aut_search.hpp"
#include "mycsym/mycielskian.hpp"

namespace mycsym {

bool are_twins(const Graph& g, int u, int v) {
  if (u < 0 || v < 0 || u >= g.order() || v >= g.order()) {
    throw GraphError("vertex out of range");
  }
  return u != v && g.neighbors(u) == g.neighbors(v);
}

TwinPartition twin_partition(const Graph& g) {
  TwinPartition out;
  out.class_of.assign(g.order(), -1);
  std::map<std::vector<int>, int> by_neighborhood;
  for (int v = 0; v < g.order(); ++v) {
    auto [it, inserted] = by_neighborhood.try_emplace(
        g.neighbors(v), static_cast<int>(out.classes.size()));
    if (inserted) out.classes.emplace_back();
    out.classes[it->second].push_back(v);
    out.class_of[v] = it->second;
  }
  return out;
}

bool is_twin_free(const Graph& g) {
  return static_cast<int>(twin_partition(g).classes.size()) == g.order();
}

TwinCover minimum_twin_cover(const Graph& g) {
  TwinCover out;
  for (const auto& cls : twin_partition(g).classes) {
    out.excluded.push_back(cls.front());
    out.members.insert(out.members.end(), cls.begin() + 1, cls.end());
  }
  std::sort(out.members.begin(), out.members.end());
  return out;
}

bool is_minimum_twin_cover(const Graph& g, const VertexSet& cover) {
  std::vector<bool> in_cover(g.order(), false);
  for (int v : cover) {
    if (v < 0 || v >= g.order() || in_cover[v]) return false;
    in_cover[v] = true;
  }
  for (const auto& cls : twin_partition(g).classes) {
    const auto outside = std::count_if(cls.begin(), cls.end(),
                                       [&](int v) { return !in_cover[v]; });
    if (outside != 1) return false;
  }
  return true;
}

QuotientGraph quotient_graph(const Graph& g) {
  const auto part = twin_partition(g);
  QuotientGraph out;
  out.class_of = part.class_of;
  for (const auto& cls : part.classes) out.rep_of.push_back(cls.front());
  std::vector<Edge> edges;
  for (const auto& [u, v] : g.edges()) {
    edges.emplace_back(part.class_of[u], part.class_of[v]);
  }
  out.graph = Graph(static_cast<int>(part.classes.size()), edges);
  return out;
}

VertexSet quotient_image(const QuotientGraph& q, const VertexSet& s) {
  VertexSet out;
  for (int v : s) out.push_back(q.class_of[v]);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

VertexSet lifted_cover(const Graph& g, const TwinCover& cover, int t) {
  if (!is_minimum_twin_cover(g, cover.members)) {
    throw GraphError("lifted_cover: not a minimum twin cover");
  }
  const int n = g.order();
  VertexSet out;
  for (int s = 0; s <= t; ++s) {
    for (int v : cover.members) out.push_back(s * n + v);
  }
  for (int u : isolated_vertices(g)) {
    if (std::binary_search(cover.members.begin(), cover.members.end(), u)) {
      continue;
    }
    for (int s = 1; s <= t - 1; ++s) out.push_back(s * n + u);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool quotient_commutes_check(const Graph& g, int t) {
  const Graph lhs = generalized_mycielskian(quotient_graph(g).graph, t).graph();
  Graph rhs = quotient_graph(generalized_mycielskian(g, t).graph()).graph;
  if (!isolated_vertices(g).empty()) rhs = disjoint_union(rhs, empty_graph(t - 1));
  return are_isomorphic(lhs, rhs);
}

}  // namespace mycsym
