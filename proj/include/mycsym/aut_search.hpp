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

#ifndef MYCSYM_AUT_SEARCH_HPP_
#define MYCSYM_AUT_SEARCH_HPP_

#include <cstddef>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "mycsym/graph.hpp"

namespace mycsym {

// Vertex coloring with colors 1..d.
struct Coloring {
  std::vector<int> color;
  int d = 0;

  // Throws GraphError if some entry lies outside [1, d].
  void validate(int n) const;
  friend bool operator==(const Coloring&, const Coloring&) = default;
};

// Restricts the automorphisms a search may return. `fixed` vertices must map
// to themselves; when `coloring` is set, every color class must map onto
// itself.
struct SearchConstraint {
  VertexSet fixed;
  std::optional<Coloring> coloring;
  bool exclude_identity = false;
};

// First automorphism in search order satisfying the constraint. Search is
// individualization-refinement backtracking over ordered partitions; the
// target cell is the first non-singleton cell and branches are tried in
// increasing vertex order, so results are reproducible.
std::optional<Perm> find_automorphism(const Graph& g,
                                      const SearchConstraint& constraint);

// As above, additionally requiring the automorphism to send `from` to `to`.
std::optional<Perm> find_automorphism_mapping(const Graph& g,
                                              const SearchConstraint& constraint,
                                              int from, int to);

// Throws GraphError if p.size() != g.order().
bool is_automorphism(const Graph& g, const Perm& p);

std::optional<Perm> find_isomorphism(const Graph& g, const Graph& h);
bool are_isomorphic(const Graph& g, const Graph& h);

inline constexpr std::size_t kDefaultAutomorphismCap = 1'000'000;

struct AutomorphismList {
  std::vector<Perm> perms;
  // True when the group has more than `cap` elements; perms then holds the
  // first `cap` found.
  bool saturated = false;
};

AutomorphismList enumerate_automorphisms(
    const Graph& g, std::size_t cap = kDefaultAutomorphismCap,
    const SearchConstraint& constraint = {});

// Orbits of the pointwise stabilizer of `fixed` in Aut(g), each sorted and
// ordered by smallest member.
std::vector<VertexSet> orbits(const Graph& g, const VertexSet& fixed = {});
std::vector<VertexSet> orbits(const Graph& g, const SearchConstraint& constraint);

// Stable label-invariant refinement of an initial vertex labeling (1-dim
// Weisfeiler-Leman). Labels in the result are dense, starting at 0, and
// ordered consistently with the input labels.
std::vector<int> refine_labels(const Graph& g, std::vector<int> labels);

}  // namespace mycsym

#endif  // MYCSYM_AUT_SEARCH_HPP_
