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

#ifndef MYCSYM_MYCIELSKIAN_HPP_
#define MYCSYM_MYCIELSKIAN_HPP_

#include <vector>

#include "mycsym/graph.hpp"

namespace mycsym {

enum class RoleKind { kOriginal, kShadow, kRoot };

// Role of a vertex of mu_t(G). Originals have level 0; the root has
// level t + 1 and index -1.
struct VertexRole {
  RoleKind kind;
  int level;
  int index;

  friend bool operator==(const VertexRole&, const VertexRole&) = default;
};

// mu_t(G) together with the layout of its vertices: u_i^s sits at index
// s * base_n + i and the root w is the last vertex.
class MycGraph {
 public:
  MycGraph(Graph graph, int base_n, int t)
      : graph_(std::move(graph)), base_n_(base_n), t_(t) {}

  const Graph& graph() const { return graph_; }
  int base_n() const { return base_n_; }
  int t() const { return t_; }

  int vertex(int level, int i) const { return level * base_n_ + i; }
  int root() const { return base_n_ * (t_ + 1); }
  // Throws GraphError when v is out of range.
  VertexRole role(int v) const;
  // Vertices u_0^s .. u_{n-1}^s.
  VertexSet level(int s) const;

 private:
  Graph graph_;
  int base_n_;
  int t_;
};

// Throws GraphError if t < 1 or g has no vertices.
MycGraph generalized_mycielskian(const Graph& g, int t);
MycGraph mycielskian(const Graph& g);
// mu^k(G); the roles are those of the outermost application.
MycGraph iterated_mycielskian(const Graph& g, int k);
// M_k = mu^k(K_2).
Graph classical_mycielski(int k);

VertexRole vertex_role(const MycGraph& m, int v);

// The component of mu_t(G) containing the root. `vertices[k]` is the index in
// mu_t(G) of vertex k of `graph`; `pendants` are the top-level shadows of
// isolated base vertices, in component indices.
struct RootComponent {
  Graph graph;
  VertexSet vertices;
  int root = 0;
  VertexSet pendants;
  // Set when the base graph has no edges; the component is then a star.
  bool edgeless_base = false;
};

RootComponent root_component(const MycGraph& m);

}  // namespace mycsym

#endif  // MYCSYM_MYCIELSKIAN_HPP_
