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

#include "mycsym/sym_params.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "mycsym/twin_quotient.hpp"

namespace mycsym {

namespace {

bool has_nontrivial_automorphism(const Graph& g, const SearchConstraint& c) {
  SearchConstraint constraint = c;
  constraint.exclude_identity = true;
  return find_automorphism(g, constraint).has_value();
}

// Calls visit on every k-subset of `pool` in lexicographic order until it
// returns true. Returns whether some call returned true.
bool for_each_combination(const std::vector<int>& pool, int k,
                          const std::function<bool(const VertexSet&)>& visit) {
  const int n = static_cast<int>(pool.size());
  if (k < 0 || k > n) return false;
  std::vector<int> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  VertexSet chosen(k);
  while (true) {
    for (int i = 0; i < k; ++i) chosen[i] = pool[idx[i]];
    if (visit(chosen)) return true;
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

VertexSet merged(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Coloring search over the `free` vertices of g; pinned vertices keep their
// label (>= 0) and free vertices carry -1 in `pinned`.
class ColoringSearch {
 public:
  ColoringSearch(const Graph& g, std::vector<int> pinned,
                 std::vector<int> order, int d, std::uint64_t budget)
      : g_(g), pinned_(std::move(pinned)), order_(std::move(order)), d_(d),
        budget_(budget), color_(g.order(), 0) {
    for (int label : pinned_) pinned_labels_ = std::max(pinned_labels_, label + 1);
  }

  SearchStatus run() {
    if (d_ < 1) return SearchStatus::kNone;
    return dfs(0, 0);
  }

  const std::vector<int>& colors() const { return color_; }
  std::uint64_t examined() const { return examined_; }

 private:
  // Some nontrivial automorphism preserves the colors assigned so far and
  // fixes every uncolored free vertex.
  bool preserved(std::size_t assigned) {
    const int n = g_.order();
    Coloring c;
    c.color.assign(n, 0);
    const int free_base = 1 + pinned_labels_;
    int unique = free_base + d_;
    for (int v = 0; v < n; ++v) {
      if (pinned_[v] >= 0) c.color[v] = 1 + pinned_[v];
    }
    for (std::size_t k = 0; k < order_.size(); ++k) {
      const int v = order_[k];
      c.color[v] = k < assigned ? free_base + color_[v] - 1 : unique++;
    }
    c.d = unique;
    SearchConstraint constraint;
    constraint.coloring = std::move(c);
    return has_nontrivial_automorphism(g_, constraint);
  }

  SearchStatus dfs(std::size_t pos, int max_used) {
    if (++examined_ > budget_) return SearchStatus::kBudgetExceeded;
    if (preserved(pos)) return SearchStatus::kNone;
    if (pos == order_.size()) return SearchStatus::kFound;
    const int v = order_[pos];
    const int limit = std::min(d_, max_used + 1);
    for (int c = 1; c <= limit; ++c) {
      color_[v] = c;
      const auto status = dfs(pos + 1, std::max(max_used, c));
      if (status != SearchStatus::kNone) return status;
    }
    color_[v] = 0;
    return SearchStatus::kNone;
  }

  const Graph& g_;
  std::vector<int> pinned_;
  std::vector<int> order_;
  int d_;
  std::uint64_t budget_;
  std::vector<int> color_;
  int pinned_labels_ = 0;
  std::uint64_t examined_ = 0;
};

// Members of nontrivial twin classes first (class by class), then the rest.
std::vector<int> twin_first_order(const Graph& g) {
  std::vector<int> order;
  const auto part = twin_partition(g);
  for (const auto& cls : part.classes) {
    if (cls.size() > 1) order.insert(order.end(), cls.begin(), cls.end());
  }
  for (const auto& cls : part.classes) {
    if (cls.size() == 1) order.push_back(cls.front());
  }
  return order;
}

std::size_t largest_twin_class(const Graph& g) {
  std::size_t best = 0;
  for (const auto& cls : twin_partition(g).classes) best = std::max(best, cls.size());
  return best;
}

Coloring rainbow(int n) {
  Coloring c;
  c.d = std::max(n, 1);
  c.color.resize(n);
  std::iota(c.color.begin(), c.color.end(), 1);
  return c;
}

DistinguishingResult distinguishing_number_no_isolated(const Graph& g,
                                                       std::uint64_t budget) {
  const int n = g.order();
  DistinguishingResult out;
  if (!has_nontrivial_automorphism(g, {})) {
    out.exact = true;
    out.value = out.lo = out.hi = 1;
    out.witness = Coloring{std::vector<int>(n, 1), 1};
    return out;
  }
  int lower = std::max<int>(2, static_cast<int>(largest_twin_class(g)));
  const auto order = twin_first_order(g);
  for (int d = lower; d <= n; ++d) {
    std::optional<Coloring> found;
    SearchStatus status = SearchStatus::kNone;
    if (d == n) {
      found = rainbow(n);
      status = SearchStatus::kFound;
    } else {
      ColoringSearch search(g, std::vector<int>(n, -1), order, d, budget);
      status = search.run();
      if (status == SearchStatus::kFound) found = Coloring{search.colors(), d};
    }
    if (status == SearchStatus::kFound) {
      out.exact = lower == d;
      out.value = d;
      out.lo = lower;
      out.hi = d;
      out.witness = std::move(found);
      return out;
    }
    if (status == SearchStatus::kNone && lower == d) lower = d + 1;
  }
  return out;  // unreachable: the rainbow coloring always distinguishes
}

}  // namespace

bool is_determining_set(const Graph& g, const VertexSet& s) {
  SearchConstraint constraint;
  constraint.fixed = s;
  return !has_nontrivial_automorphism(g, constraint);
}

DeterminingResult minimum_determining_superset(const Graph& g,
                                               const VertexSet& required) {
  // Two twins outside a set are swapped by a transposition fixing the set,
  // so all but one non-required member of each twin class is forced.
  std::vector<bool> in_required(g.order(), false);
  for (int v : required) {
    if (v < 0 || v >= g.order()) throw GraphError("vertex out of range");
    in_required[v] = true;
  }
  VertexSet forced = required;
  for (const auto& cls : twin_partition(g).classes) {
    bool skipped = false;
    for (int v : cls) {
      if (in_required[v]) continue;
      if (!skipped) {
        skipped = true;
        continue;
      }
      forced.push_back(v);
    }
  }
  std::sort(forced.begin(), forced.end());
  forced.erase(std::unique(forced.begin(), forced.end()), forced.end());

  std::vector<int> pool;
  for (int v = 0; v < g.order(); ++v) {
    if (!std::binary_search(forced.begin(), forced.end(), v)) pool.push_back(v);
  }
  DeterminingResult out;
  for (int k = 0; k <= static_cast<int>(pool.size()); ++k) {
    const bool found = for_each_combination(pool, k, [&](const VertexSet& extra) {
      auto candidate = merged(forced, extra);
      if (!is_determining_set(g, candidate)) return false;
      out.witness = std::move(candidate);
      return true;
    });
    if (found) break;
  }
  out.value = static_cast<int>(out.witness.size());
  return out;
}

DeterminingResult determining_number(const Graph& g) {
  return minimum_determining_superset(g, {});
}

std::vector<VertexSet> minimum_determining_sets(const Graph& g) {
  const int k = determining_number(g).value;
  std::vector<int> all(g.order());
  std::iota(all.begin(), all.end(), 0);
  std::vector<VertexSet> out;
  for_each_combination(all, k, [&](const VertexSet& s) {
    if (is_determining_set(g, s)) out.push_back(s);
    return false;
  });
  return out;
}

bool is_distinguishing_coloring(const Graph& g, const Coloring& c) {
  SearchConstraint constraint;
  constraint.coloring = c;
  return !has_nontrivial_automorphism(g, constraint);
}

ColoringSearchResult find_distinguishing_coloring(const Graph& g, int d,
                                                  std::uint64_t budget) {
  ColoringSearch search(g, std::vector<int>(g.order(), -1), twin_first_order(g),
                        d, budget);
  ColoringSearchResult out;
  out.status = search.run();
  out.examined = search.examined();
  if (out.status == SearchStatus::kFound) out.coloring = Coloring{search.colors(), d};
  return out;
}

DistinguishingResult distinguishing_number(const Graph& g,
                                           std::uint64_t budget) {
  const int n = g.order();
  DistinguishingResult out;
  if (n == 0) {
    out.exact = true;
    out.value = out.lo = out.hi = 1;
    out.witness = Coloring{{}, 1};
    return out;
  }
  const VertexSet isolated = isolated_vertices(g);
  const int ell = static_cast<int>(isolated.size());
  if (ell == n) {
    out.exact = true;
    out.value = out.lo = out.hi = n;
    out.witness = rainbow(n);
    return out;
  }
  if (ell == 0) return distinguishing_number_no_isolated(g, budget);

  // G = C + ell K_1: isolated vertices are mutual twins and need distinct
  // colors; automorphisms of C never touch them.
  VertexSet rest;
  for (int v = 0; v < n; ++v) {
    if (g.degree(v) > 0) rest.push_back(v);
  }
  const auto inner = distinguishing_number_no_isolated(g.induced(rest), budget);
  out.exact = inner.exact;
  out.value = std::max(inner.value, ell);
  out.lo = std::max(inner.lo, ell);
  out.hi = std::max(inner.hi, ell);
  if (inner.witness) {
    Coloring c;
    c.d = out.hi;
    c.color.assign(n, 0);
    for (std::size_t k = 0; k < rest.size(); ++k) {
      c.color[rest[k]] = inner.witness->color[k];
    }
    for (int k = 0; k < ell; ++k) c.color[isolated[k]] = k + 1;
    out.witness = std::move(c);
  }
  return out;
}

CostResult cost_2_distinguishing(const Graph& g, std::uint64_t budget) {
  const int n = g.order();
  CostResult out;
  if (!has_nontrivial_automorphism(g, {})) {
    out.status = CostStatus::kExact;
    out.value = 0;
    return out;
  }
  if (largest_twin_class(g) > 2) {
    out.status = CostStatus::kNotTwoDistinguishable;
    return out;
  }
  const auto probe = find_distinguishing_coloring(g, 2, budget);
  if (probe.status == SearchStatus::kNone) {
    out.status = CostStatus::kNotTwoDistinguishable;
    return out;
  }
  if (probe.status == SearchStatus::kBudgetExceeded) {
    out.status = CostStatus::kBudgetExceeded;
    return out;
  }
  const int ones = static_cast<int>(
      std::count(probe.coloring.color.begin(), probe.coloring.color.end(), 1));
  const int upper = std::min(ones, n - ones);

  // Each twin pair must be split between the two classes.
  const auto part = twin_partition(g);
  std::vector<int> all(n);
  std::iota(all.begin(), all.end(), 0);
  std::uint64_t examined = 0;
  bool exceeded = false;
  for (int k = determining_number(g).value; k <= upper; ++k) {
    const bool found = for_each_combination(all, k, [&](const VertexSet& s) {
      std::vector<int> hits(part.classes.size(), 0);
      for (int v : s) ++hits[part.class_of[v]];
      for (std::size_t c = 0; c < part.classes.size(); ++c) {
        if (part.classes[c].size() == 2 && hits[c] != 1) return false;
      }
      if (++examined > budget) {
        exceeded = true;
        return true;
      }
      Coloring c{std::vector<int>(n, 1), 2};
      for (int v : s) c.color[v] = 2;
      if (!is_distinguishing_coloring(g, c)) return false;
      out.witness = s;
      return true;
    });
    if (exceeded) {
      out.status = CostStatus::kBudgetExceeded;
      out.witness.clear();
      return out;
    }
    if (found) {
      out.status = CostStatus::kExact;
      out.value = k;
      return out;
    }
  }
  // Unreachable when the probe succeeded; kept as a guard.
  out.status = CostStatus::kBudgetExceeded;
  return out;
}

namespace {

// Vertices of g followed by one vertex per edge joined to its endpoints.
Graph subdivision(const Graph& g, const std::vector<Edge>& edges) {
  std::vector<Edge> out;
  const int n = g.order();
  for (std::size_t k = 0; k < edges.size(); ++k) {
    out.emplace_back(edges[k].first, n + static_cast<int>(k));
    out.emplace_back(edges[k].second, n + static_cast<int>(k));
  }
  return Graph(n + static_cast<int>(edges.size()), out);
}

}  // namespace

bool is_distinguishing_edge_coloring(const Graph& g, const EdgeColoring& c) {
  const int n = g.order();
  const Graph s = subdivision(g, c.edges);
  Coloring labels{std::vector<int>(s.order(), 1), c.d + 1};
  for (std::size_t k = 0; k < c.edges.size(); ++k) labels.color[n + k] = 1 + c.color[k];
  SearchConstraint constraint;
  constraint.coloring = std::move(labels);
  // Automorphisms of the subdivision that keep original vertices in place as
  // a class are exactly the vertex automorphisms of g acting on edges.
  return !has_nontrivial_automorphism(s, constraint);
}

IndexResult distinguishing_index(const Graph& g, std::uint64_t budget) {
  IndexResult out;
  if (isolated_vertices(g).size() >= 2) {
    out.status = IndexStatus::kUndefined;
    return out;
  }
  for (const auto& comp : connected_components(g)) {
    if (comp.size() == 2) {
      out.status = IndexStatus::kUndefined;
      return out;
    }
  }
  const int n = g.order();
  const auto edges = g.edges();
  const int m = static_cast<int>(edges.size());
  const Graph s = subdivision(g, edges);
  std::vector<int> pinned(s.order(), -1);
  for (int v = 0; v < n; ++v) pinned[v] = 0;
  std::vector<int> order(m);
  std::iota(order.begin(), order.end(), n);

  auto edge_coloring = [&](const std::vector<int>& colors, int d) {
    EdgeColoring c{edges, std::vector<int>(m), d};
    for (int k = 0; k < m; ++k) c.color[k] = colors[n + k];
    return c;
  };

  if (!has_nontrivial_automorphism(g, {})) {
    out.status = IndexStatus::kExact;
    out.value = out.lo = out.hi = 1;
    out.witness = EdgeColoring{edges, std::vector<int>(m, 1), 1};
    return out;
  }
  int lower = 2;
  for (int d = 2; d <= m; ++d) {
    ColoringSearch search(s, pinned, order, d, budget);
    const auto status = search.run();
    if (status == SearchStatus::kFound) {
      out.status = lower == d ? IndexStatus::kExact : IndexStatus::kBounds;
      out.value = d;
      out.lo = lower;
      out.hi = d;
      out.witness = edge_coloring(search.colors(), d);
      return out;
    }
    if (status == SearchStatus::kNone && lower == d) lower = d + 1;
  }
  // Not reached for graphs where the index is defined.
  out.status = IndexStatus::kUndefined;
  return out;
}

ParamReport compute_params(const Graph& g, const ParamRequest& request) {
  ParamReport report;
  report.order = g.order();
  if (request.det) report.det = determining_number(g);
  if (request.dist) report.dist = distinguishing_number(g, request.budget);
  if (request.rho) report.rho = cost_2_distinguishing(g, request.budget);
  if (request.dist_prime) report.dist_prime = distinguishing_index(g, request.budget);
  return report;
}

}  // namespace mycsym
