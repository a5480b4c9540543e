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

#include "mycsym/mycielskian.hpp"

#include <algorithm>
#include <string>

namespace mycsym {

VertexRole MycGraph::role(int v) const {
  if (v < 0 || v > root()) {
    throw GraphError("vertex " + std::to_string(v) + " out of range");
  }
  if (v == root()) return {RoleKind::kRoot, t_ + 1, -1};
  const int level = v / base_n_;
  const int index = v % base_n_;
  return {level == 0 ? RoleKind::kOriginal : RoleKind::kShadow, level, index};
}

VertexSet MycGraph::level(int s) const {
  VertexSet out(base_n_);
  for (int i = 0; i < base_n_; ++i) out[i] = vertex(s, i);
  return out;
}

MycGraph generalized_mycielskian(const Graph& g, int t) {
  if (t < 1) throw GraphError("generalized Mycielskian requires t >= 1");
  const int n = g.order();
  if (n == 0) throw GraphError("generalized Mycielskian of the empty graph");
  const auto at = [n](int s, int i) { return s * n + i; };
  const int root = n * (t + 1);
  std::vector<Edge> edges;
  for (const auto& [i, j] : g.edges()) {
    edges.emplace_back(at(0, i), at(0, j));
    for (int s = 0; s < t; ++s) {
      edges.emplace_back(at(s, i), at(s + 1, j));
      edges.emplace_back(at(s, j), at(s + 1, i));
    }
  }
  for (int i = 0; i < n; ++i) edges.emplace_back(at(t, i), root);
  return MycGraph(Graph(root + 1, edges), n, t);
}

MycGraph mycielskian(const Graph& g) { return generalized_mycielskian(g, 1); }

MycGraph iterated_mycielskian(const Graph& g, int k) {
  if (k < 1) throw GraphError("iterated Mycielskian requires k >= 1");
  MycGraph m = mycielskian(g);
  for (int step = 1; step < k; ++step) m = mycielskian(m.graph());
  return m;
}

Graph classical_mycielski(int k) {
  return iterated_mycielskian(complete_graph(2), k).graph();
}

VertexRole vertex_role(const MycGraph& m, int v) { return m.role(v); }

RootComponent root_component(const MycGraph& m) {
  const Graph& g = m.graph();
  RootComponent out;
  for (const auto& comp : connected_components(g)) {
    if (std::binary_search(comp.begin(), comp.end(), m.root())) {
      out.vertices = comp;
      break;
    }
  }
  out.graph = g.induced(out.vertices);
  out.root = static_cast<int>(out.vertices.size()) - 1;
  bool base_has_edge = false;
  for (int i = 0; i < m.base_n(); ++i) {
    if (g.degree(m.vertex(0, i)) > 0) base_has_edge = true;
  }
  out.edgeless_base = !base_has_edge;
  for (int k = 0; k < out.root; ++k) {
    if (out.graph.degree(k) == 1 && out.graph.adjacent(k, out.root) &&
        m.role(out.vertices[k]).level == m.t() &&
        g.degree(m.vertex(0, m.role(out.vertices[k]).index)) == 0) {
      out.pendants.push_back(k);
    }
  }
  return out;
}

}  // namespace mycsym
