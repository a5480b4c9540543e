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

// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Time limits are wall-clock on a single worker.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>

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

struct Outcome {
  bool ok = true;
  std::string detail;
};

int failures = 0;

void criterion(int id, const char* name, double limit_s, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out = {false, std::string("exception: ") + e.what()};
  }
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (elapsed > limit_s) {
    out.ok = false;
    out.detail += " (time limit exceeded)";
  }
  if (!out.ok) ++failures;
  std::printf("%s  %d. %s: %s [%.2fs / %.0fs]\n", out.ok ? "PASS" : "FAIL", id, name,
              out.detail.c_str(), elapsed, limit_s);
  std::fflush(stdout);
}

std::vector<Graph> corpus_up_to(int n_max) { return generate_corpus({n_max, {1, 2}, {}}); }

Outcome construction_identities() {
  int checked = 0;
  int bad = 0;
  for (int t = 1; t <= 5; ++t) {
    bad += !are_isomorphic(generalized_mycielskian(complete_graph(2), t).graph(),
                           cycle_graph(2 * t + 3));
    bad += !are_isomorphic(generalized_mycielskian(complete_graph(1), t).graph(),
                           disjoint_union(complete_graph(2), empty_graph(t)));
    checked += 2;
  }
  for (int ell = 1; ell <= 4; ++ell) {
    for (int t = 1; t <= 3; ++t) {
      bad += !are_isomorphic(generalized_mycielskian(empty_graph(ell), t).graph(),
                             disjoint_union(star_graph(ell), empty_graph(t * ell)));
      ++checked;
    }
  }
  return {bad == 0, std::to_string(checked) + " identities, " + std::to_string(bad) + " mismatches"};
}

Outcome degree_laws() {
  long vertices = 0;
  long bad = 0;
  for (const Graph& g : corpus_up_to(6)) {
    for (int t = 1; t <= 2; ++t) {
      const MycGraph m = generalized_mycielskian(g, t);
      const Graph& h = m.graph();
      for (int v = 0; v < h.order(); ++v) {
        const VertexRole r = m.role(v);
        int expected = g.order();
        if (r.kind != RoleKind::kRoot) {
          expected = r.level < t ? 2 * g.degree(r.index) : g.degree(r.index) + 1;
        }
        bad += h.degree(v) != expected;
        ++vertices;
      }
    }
  }
  return {bad == 0, std::to_string(vertices) + " vertices, " + std::to_string(bad) + " violations"};
}

Outcome root_and_levels() {
  long perms = 0;
  long bad = 0;
  int instances = 0;
  for (const Graph& g : corpus_up_to(5)) {
    if (is_star(g) || !isolated_vertices(g).empty()) continue;
    for (int t = 1; t <= 2; ++t) {
      ++instances;
      const MycGraph m = generalized_mycielskian(g, t);
      for (const Perm& p : enumerate_automorphisms(m.graph(), 10'000).perms) {
        ++perms;
        bool ok = p(m.root()) == m.root();
        for (int v = 0; ok && v < m.root(); ++v) ok = m.role(p(v)).level == m.role(v).level;
        std::vector<int> base(g.order());
        for (int i = 0; ok && i < g.order(); ++i) base[i] = p(i);
        ok = ok && is_automorphism(g, Perm(base));
        bad += !ok;
      }
    }
  }
  return {bad == 0 && instances > 0, std::to_string(instances) + " instances, " +
                                         std::to_string(perms) + " automorphisms, " +
                                         std::to_string(bad) + " violations"};
}

Outcome registry_all_pass() {
  static const std::set<std::string> kGated = {
      "T-det-main",     "T-twinfree-det", "T-twinfree-iso", "T-twin-det",   "T-twin-iso",
      "T-combined",     "C-two-behaviors", "C-cover-is-det", "C-iso-bounds", "L-lift-cover",
      "L-commutes",     "O-twins-lift",   "C-quotient-det", "T-lift-S",     "C-twin-bounds",
      "L-pendant-det",  "I-global"};
  VerifyOptions options;
  options.corpus.n_max = 6;
  options.corpus.t_values = {1, 2};
  const auto run = verify({"all"}, options);
  std::size_t gated = 0;
  std::size_t gated_failures = 0;
  std::size_t other_failures = 0;
  for (const auto& v : run.verdicts) {
    if (kGated.count(v.theorem_id)) {
      ++gated;
      gated_failures += !v.pass();
    } else {
      other_failures += !v.pass();
    }
  }
  return {gated_failures == 0 && gated > 0,
          std::to_string(gated) + " gated instances, " + std::to_string(gated_failures) +
              " failures (" + std::to_string(run.verdicts.size()) + " total, " +
              std::to_string(other_failures) + " failures outside the gated list)"};
}

Outcome distinguishing_results() {
  SearchConstraint nontrivial;
  nontrivial.exclude_identity = true;

  const Graph m2 = classical_mycielski(2);
  const int n = m2.order();
  long distinguishing = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    Coloring c{std::vector<int>(n), 2};
    for (int v = 0; v < n; ++v) c.color[v] = 1 + (mask >> v & 1);
    distinguishing += is_distinguishing_coloring(m2, c);
  }
  const bool m2_ok = distinguishing > 0 && find_automorphism(m2, nontrivial).has_value() &&
                     distinguishing_number(m2).value == 2;

  const Graph m3 = classical_mycielski(3);
  const auto found = find_distinguishing_coloring(m3, 2);
  const bool m3_ok = found.status == SearchStatus::kFound &&
                     is_distinguishing_coloring(m3, found.coloring) &&
                     find_automorphism(m3, nontrivial).has_value();

  VerifyOptions options;
  options.corpus.n_max = 5;
  options.include_seeds = false;
  const auto run = verify({"T-dist-mu"}, options);
  const auto mu_failures = run.failures();
  return {m2_ok && m3_ok && mu_failures == 0 && !run.verdicts.empty(),
          "M2 has " + std::to_string(distinguishing) + " distinguishing 2-colorings, M3 " +
              (m3_ok ? "2-distinguished" : "not confirmed") + ", T-dist-mu " +
              std::to_string(run.verdicts.size()) + " instances, " +
              std::to_string(mu_failures) + " failures, " +
              std::to_string(run.observations.size()) + " skipped by budget"};
}

Outcome cost_results() {
  int instances = 0;
  int bad = 0;
  for (const Graph& g : corpus_up_to(6)) {
    if (!is_twin_free(g) || !isolated_vertices(g).empty()) continue;
    const int k = determining_number(g).value;
    if (k < 2 || k > 3) continue;
    const int log_term = static_cast<int>(std::ceil(std::log2(k + 1.0)));
    const int bound = (k + 1) * log_term / 2;
    for (int t : {k - 1, k}) {
      ++instances;
      const auto rho = cost_2_distinguishing(generalized_mycielskian(g, t).graph());
      const bool ok = rho.status == CostStatus::kExact && rho.value == k &&
                      (t < log_term - 1 || rho.value <= bound);
      bad += !ok;
    }
  }
  return {bad == 0 && instances > 0,
          std::to_string(instances) + " instances, " + std::to_string(bad) + " mismatches"};
}

Outcome oracle_equivalence() {
  std::vector<Graph> graphs = corpus_up_to(6);
  std::mt19937 rng(20261015);
  while (graphs.size() < 500) {
    const int n = 1 + static_cast<int>(rng() % 6);
    graphs.push_back(oracle::random_graph(rng, n, 0.2 + 0.6 * (rng() % 100) / 100.0));
  }
  long constraints = 0;
  long mismatches = 0;
  for (const Graph& g : graphs) {
    const int n = g.order();
    const auto auts = oracle::automorphisms(g);
    for (int round = 0; round < 100; ++round) {
      SearchConstraint c;
      c.fixed = oracle::random_subset(rng, n, 0.25);
      if (rng() % 2) {
        Coloring col{{}, 1 + static_cast<int>(rng() % 3)};
        for (int v = 0; v < n; ++v) col.color.push_back(1 + static_cast<int>(rng() % col.d));
        c.coloring = col;
      }
      c.exclude_identity = rng() % 4 != 0;
      const auto found = find_automorphism(g, c);
      const bool exists = oracle::constrained_exists(
          auts, c.fixed, c.coloring ? &c.coloring->color : nullptr, c.exclude_identity);
      mismatches += found.has_value() != exists;
      if (found) mismatches += !is_automorphism(g, *found);
      ++constraints;
    }
    mismatches += determining_number(g).value != oracle::determining_number(g);
    const auto dist = distinguishing_number(g);
    mismatches += !dist.exact || dist.value != oracle::distinguishing_number(g);
  }
  return {mismatches == 0, std::to_string(graphs.size()) + " graphs, " +
                               std::to_string(constraints) + " constraints, " +
                               std::to_string(mismatches) + " mismatches"};
}

Outcome fault_injection() {
  VerifyOptions options;
  options.corpus.n_max = 6;
  options.perturbation = 1;
  const auto run = verify({"all"}, options);
  std::string missed;
  for (const auto& info : theorem_registry()) {
    const bool caught = std::any_of(
        run.verdicts.begin(), run.verdicts.end(),
        [&](const TheoremVerdict& v) { return v.theorem_id == info.id && !v.pass(); });
    if (!caught) missed += " " + info.id;
  }
  return {missed.empty(), std::to_string(theorem_registry().size()) + " entries, " +
                              (missed.empty() ? "all caught" : "not caught:" + missed)};
}

}  // namespace

int main() {
  criterion(1, "construction identities", 1, construction_identities);
  criterion(2, "degree laws, n <= 6, t in {1,2}", 10, degree_laws);
  criterion(3, "automorphisms fix the root and levels, n <= 5", 300, root_and_levels);
  criterion(4, "registry all-pass, n <= 6, t in {1,2}", 1800, registry_all_pass);
  criterion(5, "distinguishing numbers of M2, M3 and T-dist-mu", 600, distinguishing_results);
  criterion(6, "cost of 2-distinguishing", 900, cost_results);
  criterion(7, "oracle equivalence on 500 graphs", 1200, oracle_equivalence);
  criterion(8, "fault injection", 300, fault_injection);
  std::printf("%d of 8 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
