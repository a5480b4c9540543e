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

#include <gtest/gtest.h>

#include <random>

#include "mycsym/aut_search.hpp"
#include "mycsym/corpus.hpp"
#include "mycsym/graph6.hpp"
#include "mycsym/mycielskian.hpp"
#include "mycsym/sym_params.hpp"
#include "mycsym/twin_quotient.hpp"
#include "oracle.hpp"

using namespace mycsym;

TEST(DeterminingSet, Examples) {
  const Graph c5 = cycle_graph(5);
  for (int a = 0; a < 5; ++a) {
    for (int b = a + 1; b < 5; ++b) EXPECT_TRUE(is_determining_set(c5, {a, b}));
  }
  EXPECT_TRUE(is_determining_set(c5, {0, 1, 2, 3, 4}));
  EXPECT_FALSE(is_determining_set(complete_graph(3), {0}));
}

TEST(DeterminingNumber, Examples) {
  EXPECT_EQ(determining_number(complete_graph(1)).value, 0);
  EXPECT_EQ(determining_number(complete_graph(2)).value, 1);
  const auto r = determining_number(disjoint_union(complete_graph(2), empty_graph(3)));
  EXPECT_EQ(r.value, 3);
  EXPECT_EQ(r.witness, (VertexSet{0, 3, 4}));
  EXPECT_EQ(determining_number(cycle_graph(5)).witness, (VertexSet{0, 1}));
}

TEST(DeterminingNumber, SupersetAndAllMinimumSets) {
  const Graph c5 = cycle_graph(5);
  EXPECT_EQ(minimum_determining_superset(c5, {3}).witness, (VertexSet{0, 3}));
  EXPECT_EQ(minimum_determining_sets(c5).size(), 10u);
  EXPECT_EQ(minimum_determining_sets(complete_graph(1)), (std::vector<VertexSet>{{}}));
}

TEST(DistinguishingColoring, Examples) {
  EXPECT_TRUE(is_distinguishing_coloring(complete_graph(4), {{1, 2, 3, 4}, 4}));
  EXPECT_FALSE(is_distinguishing_coloring(complete_graph(3), {{1, 1, 2}, 2}));
  EXPECT_TRUE(is_distinguishing_coloring(cycle_graph(5), {{1, 1, 1, 2, 3}, 3}));
  EXPECT_THROW(is_distinguishing_coloring(complete_graph(3), {{1, 1, 4}, 2}), GraphError);
}

TEST(DistinguishingNumber, Examples) {
  EXPECT_EQ(distinguishing_number(cycle_graph(5)).value, 3);
  for (int n = 1; n <= 5; ++n) EXPECT_EQ(distinguishing_number(complete_graph(n)).value, n);
  const auto m2 = distinguishing_number(classical_mycielski(2));
  EXPECT_TRUE(m2.exact);
  EXPECT_EQ(m2.value, 2);
  ASSERT_TRUE(m2.witness);
  EXPECT_TRUE(is_distinguishing_coloring(classical_mycielski(2), *m2.witness));
  EXPECT_EQ(distinguishing_number(Graph(0, {})).value, 1);
}

TEST(DistinguishingNumber, TriangleWithIsolatedVertices) {
  const Graph g = disjoint_union(complete_graph(3), empty_graph(3));
  EXPECT_EQ(distinguishing_number(g).value, 3);
  EXPECT_EQ(distinguishing_number(generalized_mycielskian(g, 2).graph()).value, 6);
}

TEST(DistinguishingNumber, TinyBudgetGivesBounds) {
  const Graph g = classical_mycielski(3);
  const auto r = distinguishing_number(g, 4);
  if (!r.exact) {
    EXPECT_LE(r.lo, 2);
    EXPECT_GE(r.hi, 2);
    EXPECT_LE(r.lo, r.hi);
  } else {
    EXPECT_EQ(r.value, 2);
  }
}

TEST(Cost, Examples) {
  EXPECT_EQ(cost_2_distinguishing(cycle_graph(5)).status, CostStatus::kNotTwoDistinguishable);
  // First asymmetric corpus graph.
  for (const Graph& g : generate_corpus({6, {1}, {}})) {
    if (g.order() > 1 && oracle::automorphisms(g).size() == 1) {
      const auto r = cost_2_distinguishing(g);
      EXPECT_EQ(r.status, CostStatus::kExact);
      EXPECT_EQ(r.value, 0);
      break;
    }
  }
  // Twin-free C5 has det 2 and t >= 1 gives rho = 2.
  const auto r = cost_2_distinguishing(generalized_mycielskian(cycle_graph(5), 1).graph());
  EXPECT_EQ(r.status, CostStatus::kExact);
  EXPECT_EQ(r.value, 2);
  EXPECT_EQ(cost_2_distinguishing(empty_graph(3)).status, CostStatus::kNotTwoDistinguishable);
}

TEST(Index, Examples) {
  EXPECT_EQ(distinguishing_index(complete_graph(2)).status, IndexStatus::kUndefined);
  EXPECT_EQ(distinguishing_index(disjoint_union(cycle_graph(4), empty_graph(2))).status,
            IndexStatus::kUndefined);
  const auto k3 = distinguishing_index(complete_graph(3));
  EXPECT_EQ(k3.status, IndexStatus::kExact);
  EXPECT_EQ(k3.value, 3);
  ASSERT_TRUE(k3.witness);
  EXPECT_TRUE(is_distinguishing_edge_coloring(complete_graph(3), *k3.witness));
  EXPECT_EQ(distinguishing_index(path_graph(4)).value, 2);
  EXPECT_EQ(distinguishing_index(disjoint_union(path_graph(3), empty_graph(1))).value, 2);
}

TEST(Index, MatchesBruteForceEdgeColorings) {
  for (const Graph& g : generate_corpus({5, {1}, {}})) {
    const auto r = distinguishing_index(g);
    if (r.status == IndexStatus::kUndefined) continue;
    ASSERT_EQ(r.status, IndexStatus::kExact);
    const auto auts = oracle::automorphisms(g);
    const auto edges = g.edges();
    const int m = static_cast<int>(edges.size());
    auto edge_id = [&](int a, int b) {
      if (a > b) std::swap(a, b);
      return static_cast<int>(std::find(edges.begin(), edges.end(), Edge{a, b}) - edges.begin());
    };
    int best = -1;
    for (int d = 1; best < 0; ++d) {
      std::vector<int> c(m, 0);
      while (true) {
        bool broken = true;
        for (const auto& p : auts) {
          if (oracle::is_identity(p)) continue;
          bool keeps = true;
          for (int e = 0; keeps && e < m; ++e) {
            keeps = c[edge_id(p[edges[e].first], p[edges[e].second])] == c[e];
          }
          if (keeps) { broken = false; break; }
        }
        if (broken) { best = d; break; }
        int i = 0;
        while (i < m && ++c[i] == d) c[i++] = 0;
        if (i == m) break;
      }
    }
    EXPECT_EQ(r.value, best) << encode_graph6(g);
  }
}

TEST(Params, Aggregate) {
  ParamRequest request;
  request.dist_prime = true;
  const auto report = compute_params(cycle_graph(5), request);
  EXPECT_EQ(report.order, 5);
  ASSERT_TRUE(report.det && report.dist && report.rho && report.dist_prime);
  EXPECT_EQ(report.det->value, 2);
  EXPECT_EQ(report.dist->value, 3);
  EXPECT_EQ(report.rho->status, CostStatus::kNotTwoDistinguishable);
  EXPECT_EQ(report.dist_prime->value, 3);
}

// Exhaustive agreement with unpruned enumeration.
TEST(Oracle, ParametersMatchBruteForceOnCorpus) {
  for (const Graph& g : generate_corpus({6, {1}, {}})) {
    const auto det = determining_number(g);
    EXPECT_EQ(det.value, oracle::determining_number(g)) << encode_graph6(g);
    EXPECT_TRUE(is_determining_set(g, det.witness));
    const auto dist = distinguishing_number(g);
    ASSERT_TRUE(dist.exact);
    EXPECT_EQ(dist.value, oracle::distinguishing_number(g)) << encode_graph6(g);
    ASSERT_TRUE(dist.witness);
    EXPECT_TRUE(is_distinguishing_coloring(g, *dist.witness));
    const auto rho = cost_2_distinguishing(g);
    const int expected_rho = oracle::cost_2_distinguishing(g);
    if (expected_rho < 0) {
      EXPECT_EQ(rho.status, CostStatus::kNotTwoDistinguishable) << encode_graph6(g);
    } else {
      ASSERT_EQ(rho.status, CostStatus::kExact) << encode_graph6(g);
      EXPECT_EQ(rho.value, expected_rho) << encode_graph6(g);
    }
  }
}

TEST(Oracle, ParametersMatchOnSmallMycielskians) {
  for (const Graph& g : generate_corpus({3, {1}, {}})) {
    const Graph mu = mycielskian(g).graph();
    if (mu.order() > 8) continue;
    EXPECT_EQ(determining_number(mu).value, oracle::determining_number(mu));
    EXPECT_EQ(distinguishing_number(mu).value, oracle::distinguishing_number(mu));
    const auto rho = cost_2_distinguishing(mu);
    const int expected = oracle::cost_2_distinguishing(mu);
    EXPECT_EQ(rho.status == CostStatus::kExact ? rho.value : -1, expected);
  }
}

TEST(Properties, WitnessesAndInequalities) {
  std::mt19937 rng(41);
  for (const Graph& g : generate_corpus({6, {1}, {}})) {
    const auto det = determining_number(g);
    const auto dist = distinguishing_number(g);
    EXPECT_LE(dist.value, det.value + 1);
    // Supersets of a determining set stay determining.
    VertexSet bigger = det.witness;
    for (int v : oracle::random_subset(rng, g.order(), 0.3)) bigger.push_back(v);
    std::sort(bigger.begin(), bigger.end());
    bigger.erase(std::unique(bigger.begin(), bigger.end()), bigger.end());
    EXPECT_TRUE(is_determining_set(g, bigger));
    // Every twin class loses at most one member.
    for (const auto& cls : twin_partition(g).classes) {
      std::size_t missing = 0;
      for (int v : cls) missing += !std::binary_search(det.witness.begin(), det.witness.end(), v);
      EXPECT_LE(missing, 1u);
    }
    const auto rho = cost_2_distinguishing(g);
    if (rho.status == CostStatus::kExact) {
      EXPECT_LE(det.value, rho.value);
      VertexSet rest;
      for (int v = 0; v < g.order(); ++v) {
        if (!std::binary_search(rho.witness.begin(), rho.witness.end(), v)) rest.push_back(v);
      }
      EXPECT_TRUE(is_determining_set(g, rho.witness));
      EXPECT_TRUE(is_determining_set(g, rest));
      EXPECT_EQ(static_cast<int>(rho.witness.size()), rho.value);
    }
  }
}

TEST(Properties, InvariantUnderRelabeling) {
  std::mt19937 rng(8);
  for (int round = 0; round < 150; ++round) {
    const int n = 2 + static_cast<int>(rng() % 6);
    const Graph g = oracle::random_graph(rng, n, 0.45);
    const Graph h = g.relabeled(oracle::random_permutation(rng, n));
    EXPECT_EQ(determining_number(g).value, determining_number(h).value);
    EXPECT_EQ(distinguishing_number(g).value, distinguishing_number(h).value);
    const auto a = cost_2_distinguishing(g);
    const auto b = cost_2_distinguishing(h);
    EXPECT_EQ(a.status, b.status);
    EXPECT_EQ(a.value, b.value);
  }
}
