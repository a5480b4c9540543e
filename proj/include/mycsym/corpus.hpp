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

#ifndef MYCSYM_CORPUS_HPP_
#define MYCSYM_CORPUS_HPP_

#include <string>
#include <vector>

#include "mycsym/graph.hpp"

namespace mycsym {

enum class CorpusFilter {
  kTwinFree,
  kHasIsolated,
  kNonStar,
  kNotK1,
  kNotK2,
  kHasTwins,
  kNotOwnQuotient,  // G differs from its twin quotient
};

// Parses "twin-free", "has-isolated", "non-star", "not-k1", "not-k2",
// "has-twins", "not-quotient". Throws GraphError on anything else.
CorpusFilter parse_corpus_filter(const std::string& name);
std::string to_string(CorpusFilter filter);

struct CorpusSpec {
  int n_max = 6;
  std::vector<int> t_values = {1, 2};
  std::vector<CorpusFilter> filters;
};

inline constexpr int kMaxGeneratedOrder = 7;

bool passes_filters(const Graph& g, const std::vector<CorpusFilter>& filters);

// All pairwise non-isomorphic graphs on 1..n_max vertices that pass the
// filters, ordered by order, then edge count, then generation order. Throws
// GraphError for n_max < 1 or n_max > kMaxGeneratedOrder.
std::vector<Graph> generate_corpus(const CorpusSpec& spec);

// Keeps the first graph of every isomorphism class, preserving order.
std::vector<Graph> dedupe_isomorphic(const std::vector<Graph>& graphs);

}  // namespace mycsym

#endif  // MYCSYM_CORPUS_HPP_
