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

#ifndef MYCSYM_GRAPH_HPP_
#define MYCSYM_GRAPH_HPP_

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace mycsym {

// Sorted, duplicate-free list of vertex indices.
using VertexSet = std::vector<int>;
using Edge = std::pair<int, int>;

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Finite simple undirected graph on vertices 0..n-1. Immutable once built.
class Graph {
 public:
  Graph() = default;
  // Throws GraphError on loops or out-of-range endpoints. Duplicate edges
  // are merged.
  Graph(int n, const std::vector<Edge>& edges);

  int order() const { return n_; }
  std::size_t size() const { return num_edges_; }

  bool adjacent(int u, int v) const {
    return matrix_[static_cast<std::size_t>(u) * n_ + v] != 0;
  }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }

  // Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  // Subgraph induced on `vertices` (sorted); vertex k of the result is
  // vertices[k].
  Graph induced(const VertexSet& vertices) const;

  // Same graph with vertex v renamed to image[v].
  Graph relabeled(const std::vector<int>& image) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.matrix_ == b.matrix_;
  }

 private:
  int n_ = 0;
  std::size_t num_edges_ = 0;
  std::vector<std::vector<int>> adj_;
  std::vector<std::uint8_t> matrix_;
};

// A bijection on [0, n).
class Perm {
 public:
  Perm() = default;
  // Throws GraphError if `image` is not a permutation.
  explicit Perm(std::vector<int> image);
  static Perm identity(int n);

  int size() const { return static_cast<int>(image_.size()); }
  int operator()(int v) const { return image_[v]; }
  const std::vector<int>& image() const { return image_; }
  bool is_identity() const;
  Perm inverse() const;

  friend bool operator==(const Perm&, const Perm&) = default;

 private:
  std::vector<int> image_;
};

// Plain edge-list text: lines "u v" (blank lines and '#' comments ignored).
Graph parse_edge_list(std::string_view text, int n);
// Edge-list file body: first line "n", then "u v" lines.
Graph parse_edge_list_file(std::string_view text);
std::string to_edge_list(const Graph& g);

Graph complete_graph(int n);
Graph cycle_graph(int n);
// K_{1,m}; the center is vertex 0.
Graph star_graph(int m);
Graph empty_graph(int n);
Graph path_graph(int n);

// G + H: the vertices of H are shifted by |G|.
Graph disjoint_union(const Graph& g, const Graph& h);

VertexSet open_neighborhood(const Graph& g, int v);
VertexSet isolated_vertices(const Graph& g);
// True iff g is K_{1,m} for some m >= 0 (K_1 and K_2 included).
bool is_star(const Graph& g);
std::vector<int> degree_sequence(const Graph& g);
// Connected components, each sorted, ordered by smallest member.
std::vector<VertexSet> connected_components(const Graph& g);

}  // namespace mycsym

#endif  // MYCSYM_GRAPH_HPP_
