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

#include "mycsym/aut_search.hpp"
#include "mycsym/corpus.hpp"
#include "mycsym/graph6.hpp"
#include "mycsym/mycielskian.hpp"
#include "mycsym/sym_params.hpp"
#include "mycsym/theorems.hpp"
#include "mycsym/twin_quotient.hpp"
#include "oracle.hpp"

using namespace mycsym;

namespace {

const Graph kK2Plus3K1 = disjoint_union(complete_graph(2), empty_graph(3));

}  // namespace

TEST(TwinPartition, Examples) {
  const auto p = twin_partition(kK2Plus3K1);
  EXPECT_EQ(p.classes, (std::vector<VertexSet>{{0}, {1}, {2, 3, 4}}));
  EXPECT_FALSE(are_twins(complete_graph(2), 0, 1));

  // u v w x y with x, y twins at u.
  const auto q = twin_partition(quotient_p4_graph());
  EXPECT_EQ(q.classes, (std::vector<VertexSet>{{0}, {1}, {2}, {3, 4}}));
  EXPECT_EQ(twin_partition(cycle_graph(5)).classes.size(), 5u);
  EXPECT_FALSE(are_twins(cycle_graph(5), 2, 2));
}

TEST(TwinPartition, MatchesNeighborhoodComparison) {
  for (const Graph& g : generate_corpus({6, {1}, {}})) {
    const auto p = twin_partition(g);
    for (int u = 0; u < g.order(); ++u) {
      for (int v = u + 1; v < g.order(); ++v) {
        EXPECT_EQ(are_twins(g, u, v), oracle::twins(g, u, v));
        EXPECT_EQ(p.class_of[u] == p.class_of[v], oracle::twins(g, u, v));
      }
    }
  }
}

TEST(TwinCover, Examples) {
  EXPECT_EQ(minimum_twin_cover(empty_graph(3)).members.size(), 2u);
  const auto cover = minimum_twin_cover(kK2Plus3K1);
  EXPECT_EQ(cover.members, (VertexSet{3, 4}));
  EXPECT_TRUE(is_minimum_twin_cover(kK2Plus3K1, {2, 4}));
  EXPECT_FALSE(is_minimum_twin_cover(kK2Plus3K1, {4}));
  EXPECT_FALSE(is_minimum_twin_cover(kK2Plus3K1, {2, 3, 4}));
  EXPECT_TRUE(minimum_twin_cover(cycle_graph(5)).members.empty());
}

TEST(Quotient, Examples) {
  EXPECT_TRUE(are_isomorphic(quotient_graph(quotient_p4_graph()).graph, path_graph(4)));
  for (int ell = 1; ell <= 4; ++ell) {
    EXPECT_EQ(quotient_graph(empty_graph(ell)).graph, complete_graph(1));
  }
  EXPECT_TRUE(are_isomorphic(quotient_graph(cycle_graph(5)).graph, cycle_graph(5)));
  const auto q = quotient_graph(quotient_p4_graph());
  EXPECT_EQ(quotient_image(q, {3, 4}), (VertexSet{3}));
  EXPECT_EQ(q.rep_of[q.class_of[4]], 3);
}

TEST(Quotient, CorpusInvariants) {
  for (const Graph& g : generate_corpus({6, {1}, {}})) {
    const auto q = quotient_graph(g);
    EXPECT_TRUE(is_twin_free(q.graph)) << encode_graph6(g);
    EXPECT_EQ(minimum_twin_cover(g).members.size(),
              static_cast<std::size_t>(g.order() - q.graph.order()));
    EXPECT_TRUE(is_minimum_twin_cover(g, minimum_twin_cover(g).members));
  }
}

TEST(LiftedCover, Sizes) {
  EXPECT_EQ(lifted_cover(kK2Plus3K1, minimum_twin_cover(kK2Plus3K1), 2).size(), 7u);
  EXPECT_TRUE(lifted_cover(cycle_graph(5), minimum_twin_cover(cycle_graph(5)), 3).empty());
  EXPECT_EQ(lifted_cover(empty_graph(3), minimum_twin_cover(empty_graph(3)), 1).size(), 4u);
  EXPECT_THROW(lifted_cover(kK2Plus3K1, TwinCover{{4}, {2, 3}}, 1), GraphError);
}

TEST(LiftedCover, IsMinimumTwinCoverOfConstruction) {
  for (const Graph& g : generate_corpus({6, {1}, {}})) {
    const auto cover = minimum_twin_cover(g);
    for (int t = 1; t <= 3; ++t) {
      const auto mu = generalized_mycielskian(g, t).graph();
      EXPECT_TRUE(is_minimum_twin_cover(mu, lifted_cover(g, cover, t))) << encode_graph6(g);
    }
  }
}

TEST(QuotientCommutes, Examples) {
  EXPECT_TRUE(quotient_commutes_check(kK2Plus3K1, 2));
  EXPECT_TRUE(quotient_commutes_check(cycle_graph(5), 2));
  EXPECT_TRUE(quotient_commutes_check(quotient_p4_graph(), 1));
}

TEST(QuotientCommutes, HoldsOnCorpus) {
  for (const Graph& g : generate_corpus({6, {1}, {}})) {
    const bool isolated = !isolated_vertices(g).empty();
    if (isolated && is_twin_free(g)) continue;
    for (int t = 1; t <= 2; ++t) EXPECT_TRUE(quotient_commutes_check(g, t)) << encode_graph6(g);
  }
}

TEST(TwinsLift, SameLevelPairsOnly) {
  for (const Graph& g : generate_corpus({5, {1}, {}})) {
    for (int t = 1; t <= 2; ++t) {
      const MycGraph m = generalized_mycielskian(g, t);
      for (int i = 0; i < g.order(); ++i) {
        for (int j = i + 1; j < g.order(); ++j) {
          for (int s = 0; s <= t; ++s) {
            EXPECT_EQ(are_twins(m.graph(), m.vertex(s, i), m.vertex(s, j)), are_twins(g, i, j));
          }
        }
      }
    }
  }
}

TEST(QuotientDeterminingSets, ImagesStayDetermining) {
  for (const Graph& g : generate_corpus({6, {1}, {}})) {
    const auto q = quotient_graph(g);
    for (const auto& s : minimum_determining_sets(g)) {
      EXPECT_TRUE(is_determining_set(q.graph, quotient_image(q, s))) << encode_graph6(g);
    }
  }
}

TEST(TwinBounds, HoldOnCorpus) {
  for (const Graph& g : generate_corpus({6, {1}, {}})) {
    const int cover = static_cast<int>(minimum_twin_cover(g).members.size());
    const int det = determining_number(g).value;
    EXPECT_LE(cover, det);
    EXPECT_LE(det, cover + determining_number(quotient_graph(g).graph).value);
  }
}

TEST(TwinFan, NoMinimumTwinCoverDetermines) {
  for (int k = 2; k <= 4; ++k) {
    const Graph g = twin_fan_graph(k);
    const auto cover = minimum_twin_cover(g);
    EXPECT_EQ(cover.members.size(), static_cast<std::size_t>(k - 1));
    EXPECT_FALSE(is_determining_set(g, cover.members));
    EXPECT_EQ(determining_number(g).value, k);
  }
}
