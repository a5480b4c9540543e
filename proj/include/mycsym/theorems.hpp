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

#ifndef MYCSYM_THEOREMS_HPP_
#define MYCSYM_THEOREMS_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mycsym/corpus.hpp"
#include "mycsym/graph.hpp"
#include "mycsym/sym_params.hpp"

namespace mycsym {

enum class Relation {
  kEqual,     // computed == expected
  kAtMost,    // computed <= expected
  kAtLeast,   // computed >= expected
  kBetween,   // expected <= computed <= expected_hi
  kAttained,  // some instance hit the bound (sharpness summaries)
};

std::string to_string(Relation relation);

enum class VerdictStatus { kPass, kFail, kInconclusive };

std::string to_string(VerdictStatus status);

struct TheoremVerdict {
  std::string theorem_id;
  std::string claim;   // short name of the checked quantity
  std::string graph6;  // "*" for run-wide summaries
  int t = 0;           // 0 when the claim does not involve t
  Relation relation = Relation::kEqual;
  long expected = 0;
  long expected_hi = 0;
  long computed = 0;
  VerdictStatus status = VerdictStatus::kPass;
  std::string note;
  VertexSet witness;

  bool pass() const { return status != VerdictStatus::kFail; }
};

// Data recorded outside a theorem's hypotheses or budget; never a verdict.
struct Observation {
  std::string theorem_id;
  std::string graph6;
  int t = 0;
  std::string text;
};

struct TheoremInfo {
  std::string id;
  std::string summary;
  bool per_graph = false;  // checked once per G rather than per (G, t)
};

const std::vector<TheoremInfo>& theorem_registry();
bool is_known_theorem(const std::string& id);

struct NamedGraph {
  std::string name;
  Graph graph;
};

// Hand-picked graphs added to every generated corpus: the bound-sharpness
// witnesses K_2 + l K_1, the graph whose twin quotient is P_4, and the
// C_4-with-twins family in which no minimum twin cover is determining.
std::vector<NamedGraph> seed_graphs();
// u-v, w-z and every x_i adjacent to both v and w.
Graph twin_fan_graph(int num_twins);
// u-v, v-w, u-x, u-y; its quotient is P_4.
Graph quotient_p4_graph();

struct VerifyOptions {
  CorpusSpec corpus;
  // Replaces generation when set (graphs larger than n_max are dropped).
  std::optional<std::vector<Graph>> corpus_graphs;
  bool include_seeds = true;
  int jobs = 1;
  // Moves every registry formula one unit in the direction that strengthens
  // its claim: equalities and lower bounds +delta, upper bounds -delta.
  int perturbation = 0;
  std::uint64_t budget = kDefaultBudget;
  std::size_t automorphism_cap = 10'000;
};

struct VerificationRun {
  std::vector<std::string> theorem_ids;
  std::vector<Graph> corpus;
  std::vector<TheoremVerdict> verdicts;
  std::vector<Observation> observations;
  std::vector<std::string> warnings;

  std::size_t failures() const;
};

std::vector<Graph> build_corpus(const VerifyOptions& options);

// `ids` may contain "all". Throws GraphError on an unknown id.
VerificationRun verify(const std::vector<std::string>& ids,
                       const VerifyOptions& options);
std::vector<TheoremVerdict> verify_theorem(const std::string& id,
                                           const VerifyOptions& options);

}  // namespace mycsym

#endif  // MYCSYM_THEOREMS_HPP_
