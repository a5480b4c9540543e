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

#ifndef MYCSYM_TWIN_QUOTIENT_HPP_
#define MYCSYM_TWIN_QUOTIENT_HPP_

#include <vector>

#include "mycsym/graph.hpp"

namespace mycsym {

// Open-neighborhood twin classes. Classes are sorted and ordered by their
// lowest member.
struct TwinPartition {
  std::vector<VertexSet> classes;
  std::vector<int> class_of;
};

// All vertices except the lowest-index member of each twin class.
struct TwinCover {
  VertexSet members;
  VertexSet excluded;
};

struct QuotientGraph {
  Graph graph;
  std::vector<int> class_of;
  std::vector<int> rep_of;
};

// Distinct vertices with equal open neighborhoods.
bool are_twins(const Graph& g, int u, int v);
bool is_twin_free(const Graph& g);

TwinPartition twin_partition(const Graph& g);
TwinCover minimum_twin_cover(const Graph& g);
// True iff `cover` omits exactly one vertex of every twin class.
bool is_minimum_twin_cover(const Graph& g, const VertexSet& cover);

QuotientGraph quotient_graph(const Graph& g);
// The set {[x] : x in s} as quotient vertex indices.
VertexSet quotient_image(const QuotientGraph& q, const VertexSet& s);

// Twin cover of mu_t(G) obtained from a minimum twin cover of G: every
// member with all its shadows, plus u^1..u^{t-1} for the isolated vertex u
// left out of the cover (when G has isolated vertices). Throws GraphError if
// `cover` is not a minimum twin cover of g.
VertexSet lifted_cover(const Graph& g, const TwinCover& cover, int t);

// Compares mu_t(quotient(G)) with quotient(mu_t(G)) up to isomorphism, adding
// (t-1) isolated vertices to the right-hand side when G has isolated vertices.
bool quotient_commutes_check(const Graph& g, int t);

}  // namespace mycsym

#endif  // MYCSYM_TWIN_QUOTIENT_HPP_
