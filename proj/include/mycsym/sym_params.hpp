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

#ifndef MYCSYM_SYM_PARAMS_HPP_
#define MYCSYM_SYM_PARAMS_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "mycsym/aut_search.hpp"
#include "mycsym/graph.hpp"

namespace mycsym {

// Default cap on colorings (partial or complete) examined per color count.
inline constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 22;

bool is_determining_set(const Graph& g, const VertexSet& s);

struct DeterminingResult {
  int value = 0;
  VertexSet witness;
};

// det(G). Subsets are tried by increasing size, lexicographically within a
// size, always containing all but the lowest-index member of each twin class.
DeterminingResult determining_number(const Graph& g);

// Smallest determining set containing `required`; same search order.
DeterminingResult minimum_determining_superset(const Graph& g,
                                               const VertexSet& required);

// Every determining set of size det(G), in lexicographic order. Exponential;
// meant for small base graphs.
std::vector<VertexSet> minimum_determining_sets(const Graph& g);

bool is_distinguishing_coloring(const Graph& g, const Coloring& c);

enum class SearchStatus { kFound, kNone, kBudgetExceeded };

struct ColoringSearchResult {
  SearchStatus status = SearchStatus::kNone;
  Coloring coloring;
  std::uint64_t examined = 0;
};

// Depth-first search for a distinguishing d-coloring. Colors are assigned in
// restricted-growth order and a branch is cut as soon as some nontrivial
// automorphism preserves the partial coloring while fixing every uncolored
// vertex.
ColoringSearchResult find_distinguishing_coloring(
    const Graph& g, int d, std::uint64_t budget = kDefaultBudget);

struct DistinguishingResult {
  bool exact = false;
  // Exact value, or lo <= dist <= hi when the budget ran out.
  int value = 0;
  int lo = 0;
  int hi = 0;
  std::optional<Coloring> witness;
};

DistinguishingResult distinguishing_number(
    const Graph& g, std::uint64_t budget = kDefaultBudget);

enum class CostStatus { kExact, kNotTwoDistinguishable, kBudgetExceeded };

struct CostResult {
  CostStatus status = CostStatus::kExact;
  int value = 0;
  // The smaller color class of a 2-distinguishing coloring.
  VertexSet witness;
};

// rho(G): minimum size of a color class over 2-distinguishing colorings.
CostResult cost_2_distinguishing(const Graph& g,
                                 std::uint64_t budget = kDefaultBudget);

struct EdgeColoring {
  std::vector<Edge> edges;
  std::vector<int> color;
  int d = 0;
};

bool is_distinguishing_edge_coloring(const Graph& g, const EdgeColoring& c);

enum class IndexStatus { kExact, kUndefined, kBounds };

struct IndexResult {
  IndexStatus status = IndexStatus::kExact;
  int value = 0;
  int lo = 0;
  int hi = 0;
  std::optional<EdgeColoring> witness;
};

// Undefined when g has a K_2 component or two or more isolated vertices.
IndexResult distinguishing_index(const Graph& g,
                                 std::uint64_t budget = kDefaultBudget);

struct ParamRequest {
  bool det = true;
  bool dist = true;
  bool rho = true;
  bool dist_prime = false;
  std::uint64_t budget = kDefaultBudget;
};

struct ParamReport {
  int order = 0;
  std::optional<DeterminingResult> det;
  std::optional<DistinguishingResult> dist;
  std::optional<CostResult> rho;
  std::optional<IndexResult> dist_prime;
};

ParamReport compute_params(const Graph& g, const ParamRequest& request);

}  // namespace mycsym

#endif  // MYCSYM_SYM_PARAMS_HPP_
