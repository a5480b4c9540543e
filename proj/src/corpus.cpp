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

#include "mycsym/corpus.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "mycsym/aut_search.hpp"
#include "mycsym/twin_quotient.hpp"

namespace mycsym {

CorpusFilter parse_corpus_filter(const std::string& name) {
  static const std::map<std::string, CorpusFilter> kNames = {
      {"twin-free", CorpusFilter::kTwinFree},
      {"has-isolated", CorpusFilter::kHasIsolated},
      {"non-star", CorpusFilter::kNonStar},
      {"not-k1", CorpusFilter::kNotK1},
      {"not-k2", CorpusFilter::kNotK2},
      {"has-twins", CorpusFilter::kHasTwins},
      {"not-quotient", CorpusFilter::kNotOwnQuotient},
  };
  auto it = kNames.find(name);
  if (it == kNames.end()) throw GraphError("unknown corpus filter: " + name);
  return it->second;
}

std::string to_string(CorpusFilter filter) {
  switch (filter) {
    case CorpusFilter::kTwinFree: return "twin-free";
    case CorpusFilter::kHasIsolated: return "has-isolated";
    case CorpusFilter::kNonStar: return "non-star";
    case CorpusFilter::kNotK1: return "not-k1";
    case CorpusFilter::kNotK2: return "not-k2";
    case CorpusFilter::kHasTwins: return "has-twins";
    case CorpusFilter::kNotOwnQuotient: return "not-quotient";
  }
  return "?";
}

bool passes_filters(const Graph& g, const std::vector<CorpusFilter>& filters) {
  for (auto filter : filters) {
    bool ok = true;
    switch (filter) {
      case CorpusFilter::kTwinFree: ok = is_twin_free(g); break;
      case CorpusFilter::kHasIsolated: ok = !isolated_vertices(g).empty(); break;
      case CorpusFilter::kNonStar: ok = !is_star(g); break;
      case CorpusFilter::kNotK1: ok = g.order() != 1; break;
      case CorpusFilter::kNotK2: ok = !(g.order() == 2 && g.size() == 1); break;
      case CorpusFilter::kHasTwins:
      case CorpusFilter::kNotOwnQuotient: ok = !is_twin_free(g); break;
    }
    if (!ok) return false;
  }
  return true;
}

namespace {

// Isomorphism invariant used to bucket graphs before exact comparison.
using Invariant = std::tuple<int, std::size_t, std::vector<std::vector<int>>>;

Invariant invariant_of(const Graph& g) {
  std::vector<std::vector<int>> profile(g.order());
  for (int v = 0; v < g.order(); ++v) {
    profile[v].push_back(g.degree(v));
    std::vector<int> around;
    for (int u : g.neighbors(v)) around.push_back(g.degree(u));
    std::sort(around.begin(), around.end());
    profile[v].insert(profile[v].end(), around.begin(), around.end());
  }
  std::sort(profile.begin(), profile.end());
  return {g.order(), g.size(), std::move(profile)};
}

class IsoClassSet {
 public:
  // Adds g unless an isomorphic graph is already present.
  bool insert(const Graph& g) {
    auto& bucket = buckets_[invariant_of(g)];
    for (const Graph& other : bucket) {
      if (are_isomorphic(g, other)) return false;
    }
    bucket.push_back(g);
    return true;
  }

 private:
  std::map<Invariant, std::vector<Graph>> buckets_;
};

}  // namespace

std::vector<Graph> dedupe_isomorphic(const std::vector<Graph>& graphs) {
  IsoClassSet seen;
  std::vector<Graph> out;
  for (const Graph& g : graphs) {
    if (seen.insert(g)) out.push_back(g);
  }
  return out;
}

std::vector<Graph> generate_corpus(const CorpusSpec& spec) {
  if (spec.n_max < 1) throw GraphError("n_max must be at least 1");
  if (spec.n_max > kMaxGeneratedOrder) {
    throw GraphError("corpora beyond " + std::to_string(kMaxGeneratedOrder) +
                     " vertices must be read from a graph6 file");
  }
  // Every graph on n vertices arises from one on n-1 vertices by adding a
  // vertex with some neighborhood.
  std::vector<Graph> level = {empty_graph(1)};
  std::vector<Graph> all = level;
  for (int n = 2; n <= spec.n_max; ++n) {
    IsoClassSet seen;
    std::vector<Graph> next;
    for (const Graph& g : level) {
      const auto base_edges = g.edges();
      for (int mask = 0; mask < (1 << (n - 1)); ++mask) {
        auto edges = base_edges;
        for (int u = 0; u < n - 1; ++u) {
          if (mask & (1 << u)) edges.emplace_back(u, n - 1);
        }
        Graph candidate(n, edges);
        if (seen.insert(candidate)) next.push_back(std::move(candidate));
      }
    }
    std::stable_sort(next.begin(), next.end(), [](const Graph& a, const Graph& b) {
      return a.size() < b.size();
    });
    all.insert(all.end(), next.begin(), next.end());
    level = std::move(next);
  }
  std::vector<Graph> out;
  for (auto& g : all) {
    if (passes_filters(g, spec.filters)) out.push_back(std::move(g));
  }
  return out;
}

}  // namespace mycsym
