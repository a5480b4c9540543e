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

#include "mycsym/theorems.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <map>
#include <mutex>
#include <set>
#include <thread>

#include "mycsym/aut_search.hpp"
#include "mycsym/graph6.hpp"
#include "mycsym/mycielskian.hpp"
#include "mycsym/twin_quotient.hpp"

namespace mycsym {

std::string to_string(Relation relation) {
  switch (relation) {
    case Relation::kEqual: return "eq";
    case Relation::kAtMost: return "le";
    case Relation::kAtLeast: return "ge";
    case Relation::kBetween: return "between";
    case Relation::kAttained: return "attained";
  }
  return "?";
}

std::string to_string(VerdictStatus status) {
  switch (status) {
    case VerdictStatus::kPass: return "pass";
    case VerdictStatus::kFail: return "fail";
    case VerdictStatus::kInconclusive: return "inconclusive";
  }
  return "?";
}

std::size_t VerificationRun::failures() const {
  return static_cast<std::size_t>(std::count_if(
      verdicts.begin(), verdicts.end(),
      [](const TheoremVerdict& v) { return !v.pass(); }));
}

Graph twin_fan_graph(int num_twins) {
  if (num_twins < 1) throw GraphError("twin_fan_graph needs at least one twin");
  // u = 0, v = 1, w = 2, z = 3, x_i = 3 + i.
  std::vector<Edge> edges = {{0, 1}, {2, 3}};
  for (int i = 1; i <= num_twins; ++i) {
    edges.emplace_back(1, 3 + i);
    edges.emplace_back(2, 3 + i);
  }
  return Graph(4 + num_twins, edges);
}

Graph quotient_p4_graph() {
  // u = 0, v = 1, w = 2, x = 3, y = 4.
  return Graph(5, {{0, 1}, {1, 2}, {0, 3}, {0, 4}});
}

std::vector<NamedGraph> seed_graphs() {
  return {
      {"K2+2K1", disjoint_union(complete_graph(2), empty_graph(2))},
      {"K2+3K1", disjoint_union(complete_graph(2), empty_graph(3))},
      {"quotient-P4", quotient_p4_graph()},
      {"twin-fan-2", twin_fan_graph(2)},
      {"twin-fan-3", twin_fan_graph(3)},
      {"twin-fan-2+K1", disjoint_union(twin_fan_graph(2), empty_graph(1))},
  };
}

namespace {

bool is_k1(const Graph& g) { return g.order() == 1; }
bool is_k2(const Graph& g) { return g.order() == 2 && g.size() == 1; }

int ceil_log2(int x) {
  int r = 0;
  while ((1 << r) < x) ++r;
  return r;
}

// Memoized parameters keyed by graph6; safe to share between workers.
class Facts {
 public:
  explicit Facts(std::uint64_t budget) : budget_(budget) {}

  DeterminingResult det(const Graph& g) {
    return memo(det_, g, [](const Graph& x) { return determining_number(x); });
  }
  DistinguishingResult dist(const Graph& g) {
    return memo(dist_, g, [this](const Graph& x) {
      return distinguishing_number(x, budget_);
    });
  }
  CostResult rho(const Graph& g) {
    return memo(rho_, g, [this](const Graph& x) {
      return cost_2_distinguishing(x, budget_);
    });
  }

 private:
  template <typename T, typename Compute>
  T memo(std::map<std::string, T>& table, const Graph& g, Compute compute) {
    const std::string key = encode_graph6(g);
    {
      std::lock_guard<std::mutex> lock(mutex_);
      if (auto it = table.find(key); it != table.end()) return it->second;
    }
    T value = compute(g);
    std::lock_guard<std::mutex> lock(mutex_);
    return table.try_emplace(key, std::move(value)).first->second;
  }

  std::uint64_t budget_;
  std::mutex mutex_;
  std::map<std::string, DeterminingResult> det_;
  std::map<std::string, DistinguishingResult> dist_;
  std::map<std::string, CostResult> rho_;
};

struct Instance {
  const Graph& g;
  std::string graph6;
  int t;
};

struct Context {
  Facts& facts;
  const VerifyOptions& options;
};

class Emitter {
 public:
  Emitter(std::string id, const Instance& instance, int delta)
      : id_(std::move(id)), instance_(instance), delta_(delta) {}

  void equal(const std::string& claim, long formula, long computed,
             bool side_ok = true, std::string note = {}, VertexSet witness = {}) {
    auto v = make(claim, Relation::kEqual, formula + delta_, computed,
                  std::move(note), std::move(witness));
    v.status = side_ok && computed == v.expected ? VerdictStatus::kPass
                                                 : VerdictStatus::kFail;
    verdicts.push_back(std::move(v));
  }

  void at_most(const std::string& claim, long bound, long computed,
               std::string note = {}) {
    auto v = make(claim, Relation::kAtMost, bound - delta_, computed,
                  std::move(note), {});
    v.status = computed <= v.expected ? VerdictStatus::kPass : VerdictStatus::kFail;
    verdicts.push_back(std::move(v));
  }

  void between(const std::string& claim, long lo, long hi, long computed) {
    auto v = make(claim, Relation::kBetween, lo + delta_, computed, {}, {});
    v.expected_hi = hi - delta_;
    v.status = v.expected <= computed && computed <= v.expected_hi
                   ? VerdictStatus::kPass
                   : VerdictStatus::kFail;
    verdicts.push_back(std::move(v));
  }

  void zero_failures(const std::string& claim, long failures,
                     std::string note = {}) {
    equal(claim, 0, failures, true, std::move(note));
  }

  void observe(std::string text) {
    observations.push_back({id_, instance_.graph6, instance_.t, std::move(text)});
  }

  void attained(const std::string& label) { attained_labels.insert(label); }

  std::vector<TheoremVerdict> verdicts;
  std::vector<Observation> observations;
  std::set<std::string> attained_labels;

 private:
  TheoremVerdict make(const std::string& claim, Relation relation, long expected,
                      long computed, std::string note, VertexSet witness) const {
    TheoremVerdict v;
    v.theorem_id = id_;
    v.claim = claim;
    v.graph6 = instance_.graph6;
    v.t = instance_.t;
    v.relation = relation;
    v.expected = expected;
    v.computed = computed;
    v.note = std::move(note);
    v.witness = std::move(witness);
    return v;
  }

  std::string id_;
  const Instance& instance_;
  int delta_;
};

using CheckFn = std::function<void(const Instance&, Context&, Emitter&)>;

struct Entry {
  TheoremInfo info;
  CheckFn check;
  std::vector<std::string> sharpness;  // labels that must be attained
};

// --- checks -------------------------------------------------------------

void check_dist_mu(const Instance& in, Context& ctx, Emitter& out) {
  if (is_k1(in.g) || is_k2(in.g)) return;
  const long ell = static_cast<long>(isolated_vertices(in.g).size());
  const auto dist_g = ctx.facts.dist(in.g);
  const auto mu = generalized_mycielskian(in.g, in.t).graph();
  const auto dist_mu = ctx.facts.dist(mu);
  if (!dist_g.exact || !dist_mu.exact) {
    out.observe("distinguishing number budget exceeded; bounds dist(G) in [" +
                std::to_string(dist_g.lo) + "," + std::to_string(dist_g.hi) +
                "], dist(mu) in [" + std::to_string(dist_mu.lo) + "," +
                std::to_string(dist_mu.hi) + "]");
    return;
  }
  if (in.t * ell > dist_g.value) {
    out.equal("dist(mu_t(G)) = t*l", in.t * ell, dist_mu.value);
  } else {
    out.at_most("dist(mu_t(G)) <= dist(G)", dist_g.value, dist_mu.value,
                dist_mu.value < dist_g.value ? "strict" : "");
  }
}

void check_twinfree_package(const Instance& in, Context& ctx, Emitter& out) {
  if (!is_twin_free(in.g) || !isolated_vertices(in.g).empty()) return;
  const int k = ctx.facts.det(in.g).value;
  if (k < 2 || in.t < k - 1) return;
  const auto mu = generalized_mycielskian(in.g, in.t).graph();
  const auto dist = ctx.facts.dist(mu);
  const auto rho = ctx.facts.rho(mu);
  out.equal("dist(mu_t(G)) = 2", 2, dist.exact ? dist.value : -1);
  out.equal("det(mu_t(G)) = det(G)", k, ctx.facts.det(mu).value);
  out.equal("rho(mu_t(G)) = det(G)", k,
            rho.status == CostStatus::kExact ? rho.value : -1, true, {}, rho.witness);
}

void check_det_main(const Instance& in, Context& ctx, Emitter& out) {
  if (!isolated_vertices(in.g).empty()) return;
  const auto mu = generalized_mycielskian(in.g, in.t).graph();
  const auto det_mu = ctx.facts.det(mu);
  if (is_k2(in.g)) {
    out.equal("det(K2) = 1", 1, ctx.facts.det(in.g).value);
    out.equal("det(mu_t(K2)) = 2", 2, det_mu.value, true, {}, det_mu.witness);
    return;
  }
  const long cover = static_cast<long>(minimum_twin_cover(in.g).members.size());
  out.equal("det(mu_t(G)) = t|T| + det(G)", in.t * cover + ctx.facts.det(in.g).value,
            det_mu.value, true, {}, det_mu.witness);
}

void check_pendant_det(const Instance& in, Context& ctx, Emitter& out) {
  const VertexSet isolated = isolated_vertices(in.g);
  if (isolated.empty() || in.g.size() == 0) return;
  const int ell = static_cast<int>(isolated.size());
  VertexSet h_vertices;
  for (int v = 0; v < in.g.order(); ++v) {
    if (in.g.degree(v) > 0) h_vertices.push_back(v);
  }
  const MycGraph mh = generalized_mycielskian(in.g.induced(h_vertices), in.t);
  const MycGraph mg = generalized_mycielskian(in.g, in.t);
  const RootComponent comp = root_component(mg);

  std::vector<int> in_comp(mg.graph().order(), -1);
  for (int k = 0; k < static_cast<int>(comp.vertices.size()); ++k) {
    in_comp[comp.vertices[k]] = k;
  }
  auto to_comp = [&](int x) {
    if (x == mh.root()) return comp.root;
    const auto role = mh.role(x);
    return in_comp[mg.vertex(role.level, h_vertices[role.index])];
  };

  const auto anchored = minimum_determining_superset(mh.graph(), {mh.root()});
  VertexSet candidate;
  for (int x : anchored.witness) {
    if (x != mh.root()) candidate.push_back(to_comp(x));
  }
  const long s_size = static_cast<long>(candidate.size());
  candidate.insert(candidate.end(), comp.pendants.begin() + 1, comp.pendants.end());
  std::sort(candidate.begin(), candidate.end());
  const bool determining = is_determining_set(comp.graph, candidate);
  out.equal("det(C) = |S| + l - 1", s_size + ell - 1,
            ctx.facts.det(comp.graph).value, determining,
            determining ? "" : "S + pendants is not determining for C", candidate);
}

void check_twinfree_det(const Instance& in, Context& ctx, Emitter& out) {
  if (!is_twin_free(in.g) || !isolated_vertices(in.g).empty()) return;
  const auto mu = generalized_mycielskian(in.g, in.t).graph();
  const auto det_mu = ctx.facts.det(mu);
  if (is_k2(in.g)) {
    out.equal("det(mu_t(K2)) = 2", 2, det_mu.value);
    return;
  }
  out.equal("det(mu_t(G)) = det(G)", ctx.facts.det(in.g).value, det_mu.value);
  long failures = 0;
  for (const auto& s : minimum_determining_sets(in.g)) {
    // Original vertex v_i keeps index i in mu_t(G).
    if (!is_determining_set(mu, s)) ++failures;
  }
  out.zero_failures("min det sets of G not determining for mu_t(G)", failures);
}

void check_twinfree_iso(const Instance& in, Context& ctx, Emitter& out) {
  if (!is_twin_free(in.g) || isolated_vertices(in.g).empty()) return;
  const auto mu = generalized_mycielskian(in.g, in.t).graph();
  if (is_k1(in.g)) {
    out.equal("det(mu_t(K1)) = t", in.t, ctx.facts.det(mu).value);
    return;
  }
  out.equal("det(mu_t(G)) = det(G) + t - 1", ctx.facts.det(in.g).value + in.t - 1,
            ctx.facts.det(mu).value);
}

void check_two_behaviors(const Instance& in, Context& ctx, Emitter& out) {
  if (!is_twin_free(in.g) || is_k1(in.g) || is_k2(in.g)) return;
  const bool has_isolated = !isolated_vertices(in.g).empty();
  const auto mu = generalized_mycielskian(in.g, in.t).graph();
  const long det_g = ctx.facts.det(in.g).value;
  out.equal(has_isolated ? "det(mu_t(G)) = det(G) + t - 1" : "det(mu_t(G)) = det(G)",
            has_isolated ? det_g + in.t - 1 : det_g, ctx.facts.det(mu).value);
}

void check_rho_log(const Instance& in, Context& ctx, Emitter& out) {
  if (!is_twin_free(in.g) || !isolated_vertices(in.g).empty()) return;
  const int k = ctx.facts.det(in.g).value;
  if (k < 2) return;
  const int log_term = ceil_log2(k + 1);
  const bool part_one = in.t >= log_term - 1;
  const bool part_two = in.t >= k - 1;
  if (!part_one && !part_two) return;
  const auto mu = generalized_mycielskian(in.g, in.t).graph();
  const auto dist = ctx.facts.dist(mu);
  const auto rho = ctx.facts.rho(mu);
  const long rho_value = rho.status == CostStatus::kExact ? rho.value : -1;
  out.equal("dist(mu_t(G)) = 2", 2, dist.exact ? dist.value : -1);
  if (part_one) {
    // rho is an integer, so the bound (k+1)ceil(log2(k+1))/2 is floored.
    const long bound = (static_cast<long>(k) + 1) * log_term / 2;
    out.at_most("rho(mu_t(G)) <= (k+1)ceil(log2(k+1))/2", bound,
                rho_value < 0 ? bound + 1000 : rho_value);
  }
  if (part_two) out.equal("rho(mu_t(G)) = k", k, rho_value, true, {}, rho.witness);
}

void check_dist_max2t(const Instance& in, Context& ctx, Emitter& out) {
  if (!is_twin_free(in.g) || is_k1(in.g)) return;
  if (isolated_vertices(in.g).size() != 1) return;
  const int k = ctx.facts.det(in.g).value;
  if (k < 1 || in.t < ceil_log2(k + 1) - 1) return;
  const auto mu = generalized_mycielskian(in.g, in.t).graph();
  const auto dist = ctx.facts.dist(mu);
  out.equal("dist(mu_t(G)) = max(2, t)", std::max(2, in.t), dist.exact ? dist.value : -1);
  const auto rho = ctx.facts.rho(mu);
  if (in.t == 1 || in.t == 2) {
    // The value k + t - 1 leans on rho(mu_t(H)) = k, known only for t >= k - 1.
    out.equal("rho(mu_t(G)) = k + t - 1", k + in.t - 1,
              rho.status == CostStatus::kExact ? rho.value : -1, true,
              in.t < k - 1 ? "t < k - 1: rho(mu_t(H)) = k is not guaranteed here" : "",
              rho.witness);
  } else {
    out.observe(rho.status == CostStatus::kExact
                    ? "rho(mu_t(G)) = " + std::to_string(rho.value)
                    : "mu_t(G) not 2-distinguishable or rho budget exceeded");
  }
}

void check_twins_lift(const Instance& in, Context&, Emitter& out) {
  const MycGraph m = generalized_mycielskian(in.g, in.t);
  const int n = in.g.order();
  long pairs_g = 0;
  long pairs_mu = 0;
  long mismatches = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const bool twins = are_twins(in.g, i, j);
      pairs_g += twins;
      for (int s = 0; s <= in.t; ++s) {
        const bool lifted = are_twins(m.graph(), m.vertex(s, i), m.vertex(s, j));
        pairs_mu += lifted;
        mismatches += lifted != twins;
      }
    }
  }
  out.equal("level twin pairs = (t+1) * twin pairs of G", (in.t + 1) * pairs_g,
            pairs_mu, mismatches == 0,
            mismatches ? std::to_string(mismatches) + " level pairs disagree" : "");
}

void check_quotient_det(const Instance& in, Context&, Emitter& out) {
  const auto q = quotient_graph(in.g);
  long failures = 0;
  for (const auto& s : minimum_determining_sets(in.g)) {
    if (!is_determining_set(q.graph, quotient_image(q, s))) ++failures;
  }
  out.zero_failures("min det sets S of G with S~ not determining for G~", failures);
}

void check_lift_s(const Instance& in, Context& ctx, Emitter& out) {
  const auto cover = minimum_twin_cover(in.g);
  const auto q = quotient_graph(in.g);
  const VertexSet cover_image = quotient_image(q, cover.members);
  const auto lifted = minimum_determining_superset(q.graph, cover_image);
  VertexSet s = cover.members;
  for (int x = 0; x < in.g.order(); ++x) {
    const int c = q.class_of[x];
    if (std::binary_search(lifted.witness.begin(), lifted.witness.end(), c) &&
        !std::binary_search(cover_image.begin(), cover_image.end(), c)) {
      s.push_back(x);
    }
  }
  std::sort(s.begin(), s.end());
  const bool determining = is_determining_set(in.g, s);
  out.equal("|T u R| = det(G)", ctx.facts.det(in.g).value, static_cast<long>(s.size()),
            determining, determining ? "" : "T u R is not determining", s);
}

void check_twin_bounds(const Instance& in, Context& ctx, Emitter& out) {
  const long cover = static_cast<long>(minimum_twin_cover(in.g).members.size());
  const long det_q = ctx.facts.det(quotient_graph(in.g).graph).value;
  const long det_g = ctx.facts.det(in.g).value;
  out.between("|T| <= det(G) <= |T| + det(G~)", cover, cover + det_q, det_g);
  if (det_g == cover) out.attained("lower");
  if (det_g == cover + det_q) out.attained("upper");
}

void check_lift_cover(const Instance& in, Context&, Emitter& out) {
  const auto cover = minimum_twin_cover(in.g);
  const bool has_isolated = !isolated_vertices(in.g).empty();
  const VertexSet lifted = lifted_cover(in.g, cover, in.t);
  const auto mu = generalized_mycielskian(in.g, in.t).graph();
  const bool valid = is_minimum_twin_cover(mu, lifted);
  const long formula = (in.t + 1) * static_cast<long>(cover.members.size()) +
                       (has_isolated ? in.t - 1 : 0);
  out.equal(has_isolated ? "|T_t| = (t+1)|T| + t - 1" : "|T_t| = (t+1)|T|", formula,
            static_cast<long>(lifted.size()), valid,
            valid ? "" : "lifted set is not a minimum twin cover of mu_t(G)", lifted);
}

void check_commutes(const Instance& in, Context&, Emitter& out) {
  const bool has_isolated = !isolated_vertices(in.g).empty();
  if (has_isolated && is_twin_free(in.g)) return;
  const Graph lhs = generalized_mycielskian(quotient_graph(in.g).graph, in.t).graph();
  Graph rhs = quotient_graph(generalized_mycielskian(in.g, in.t).graph()).graph;
  if (has_isolated) rhs = disjoint_union(rhs, empty_graph(in.t - 1));
  const bool iso = are_isomorphic(lhs, rhs);
  out.equal(has_isolated ? "mu_t(G~) ~= (mu_t(G))~ + (t-1)K1" : "mu_t(G~) ~= (mu_t(G))~",
            lhs.order(), rhs.order(), iso, iso ? "" : "not isomorphic");
}

void check_twin_det(const Instance& in, Context& ctx, Emitter& out) {
  if (is_twin_free(in.g) || !isolated_vertices(in.g).empty()) return;
  const long cover = static_cast<long>(minimum_twin_cover(in.g).members.size());
  const auto mu = generalized_mycielskian(in.g, in.t).graph();
  out.equal("det(mu_t(G)) = t|T| + det(G)", in.t * cover + ctx.facts.det(in.g).value,
            ctx.facts.det(mu).value);
}

void check_twin_iso(const Instance& in, Context& ctx, Emitter& out) {
  if (is_twin_free(in.g) || isolated_vertices(in.g).empty()) return;
  const long cover = static_cast<long>(minimum_twin_cover(in.g).members.size());
  const auto mu = generalized_mycielskian(in.g, in.t).graph();
  out.equal("det(mu_t(G)) = t|T| + det(G) + t - 1",
            in.t * cover + ctx.facts.det(in.g).value + in.t - 1, ctx.facts.det(mu).value);
}

void check_cover_is_det(const Instance& in, Context& ctx, Emitter& out) {
  if (is_twin_free(in.g) || isolated_vertices(in.g).empty()) return;
  // All minimum twin covers are images of each other under twin swaps.
  if (!is_determining_set(in.g, minimum_twin_cover(in.g).members)) return;
  const long det_g = ctx.facts.det(in.g).value;
  const auto mu = generalized_mycielskian(in.g, in.t).graph();
  out.equal("det(mu_t(G)) = (t+1)det(G) + t - 1", (in.t + 1) * det_g + in.t - 1,
            ctx.facts.det(mu).value);
}

void check_iso_bounds(const Instance& in, Context& ctx, Emitter& out) {
  if (is_twin_free(in.g) || isolated_vertices(in.g).empty()) return;
  const long cover = static_cast<long>(minimum_twin_cover(in.g).members.size());
  const long det_q = ctx.facts.det(quotient_graph(in.g).graph).value;
  const long lo = (in.t + 1) * cover + in.t - 1;
  const long hi = det_q + lo;
  const auto mu = generalized_mycielskian(in.g, in.t).graph();
  const long det_mu = ctx.facts.det(mu).value;
  out.between("(t+1)|T|+t-1 <= det(mu_t(G)) <= det(G~)+(t+1)|T|+t-1", lo, hi, det_mu);
  if (det_mu == lo) out.attained("lower");
  if (det_mu == hi) out.attained("upper");
}

void check_combined(const Instance& in, Context& ctx, Emitter& out) {
  if (isolated_vertices(in.g).empty()) return;
  const auto mu = generalized_mycielskian(in.g, in.t).graph();
  if (is_k1(in.g)) {
    out.equal("det(mu_t(K1)) = t", in.t, ctx.facts.det(mu).value);
    return;
  }
  const long cover = static_cast<long>(minimum_twin_cover(in.g).members.size());
  out.equal("det(mu_t(G)) = t|T| + det(G) + t - 1",
            in.t * cover + ctx.facts.det(in.g).value + in.t - 1, ctx.facts.det(mu).value);
}

void check_global(const Instance& in, Context& ctx, Emitter& out) {
  const auto mu = generalized_mycielskian(in.g, in.t).graph();
  const long det = ctx.facts.det(mu).value;
  const auto dist = ctx.facts.dist(mu);
  if (dist.exact) {
    out.at_most("dist <= det + 1", det + 1, dist.value);
  } else {
    out.observe("dist budget exceeded; dist in [" + std::to_string(dist.lo) + "," +
                std::to_string(dist.hi) + "]");
  }
  const auto rho = ctx.facts.rho(mu);
  if (rho.status == CostStatus::kBudgetExceeded) {
    out.observe("rho budget exceeded");
  } else if (rho.status == CostStatus::kExact) {
    out.at_most("det <= rho", rho.value, det);
    VertexSet complement;
    for (int v = 0; v < mu.order(); ++v) {
      if (!std::binary_search(rho.witness.begin(), rho.witness.end(), v)) {
        complement.push_back(v);
      }
    }
    const long failures = !is_determining_set(mu, rho.witness) +
                          !is_determining_set(mu, complement);
    out.zero_failures("2-distinguishing color classes that are not determining",
                      failures);
  }
}

void check_root_levels(const Instance& in, Context& ctx, Emitter& out) {
  if (is_star(in.g) || !isolated_vertices(in.g).empty()) return;
  const MycGraph m = generalized_mycielskian(in.g, in.t);
  const auto auts = enumerate_automorphisms(m.graph(), ctx.options.automorphism_cap);
  const int n = in.g.order();
  long violations = 0;
  for (const Perm& p : auts.perms) {
    bool ok = p(m.root()) == m.root();
    for (int v = 0; ok && v < m.root(); ++v) {
      ok = m.role(p(v)).level == m.role(v).level;
    }
    if (ok) {
      std::vector<int> restricted(n);
      for (int i = 0; i < n; ++i) restricted[i] = p(m.vertex(0, i));
      ok = is_automorphism(in.g, Perm(restricted));
    }
    violations += !ok;
  }
  out.zero_failures("automorphisms moving w, mixing levels or not restricting to Aut(G)",
                    violations,
                    std::to_string(auts.perms.size()) + " automorphisms checked" +
                        (auts.saturated ? " (cap reached)" : ""));
}

const std::vector<Entry>& entries() {
  static const std::vector<Entry> kEntries = {
      {{"T-dist-mu", "dist(mu_t(G)) = t*l when t*l > dist(G), else <= dist(G)"},
       check_dist_mu, {}},
      {{"T-twinfree-package",
        "twin-free, no isolated, det(G) >= 2, t >= det(G)-1: dist = 2, det = rho = det(G)"},
       check_twinfree_package, {}},
      {{"T-det-main", "no isolated vertices: det(mu_t(G)) = t|T| + det(G); K2 gives 2"},
       check_det_main, {}},
      {{"L-pendant-det", "S + {x_2..x_l} is a minimum determining set of the root component"},
       check_pendant_det, {}},
      {{"T-twinfree-det", "twin-free, no isolated: min det sets of G stay minimum in mu_t(G)"},
       check_twinfree_det, {}},
      {{"T-twinfree-iso", "twin-free with an isolated vertex: det(mu_t(G)) = det(G) + t - 1"},
       check_twinfree_iso, {}},
      {{"C-two-behaviors", "twin-free G != K1, K2: det(mu_t(G)) is det(G) or det(G) + t - 1"},
       check_two_behaviors, {}},
      {{"T-rho-log", "twin-free, no isolated, det = k >= 2: rho bounds and dist = 2"},
       check_rho_log, {}},
      {{"T-dist-max2t", "twin-free H + K1: dist(mu_t(G)) = max(2, t), rho = k + t - 1"},
       check_dist_max2t, {}},
      {{"O-twins-lift", "twin pairs of G are exactly the twin pairs within each level"},
       check_twins_lift, {}},
      {{"C-quotient-det", "S determining for G implies S~ determining for G~", true},
       check_quotient_det, {}},
      {{"T-lift-S", "T u R is a minimum determining set", true}, check_lift_s, {}},
      {{"C-twin-bounds", "|T| <= det(G) <= |T| + det(G~)", true}, check_twin_bounds,
       {"lower", "upper"}},
      {{"L-lift-cover", "lifted twin cover is a minimum twin cover of mu_t(G)"},
       check_lift_cover, {}},
      {{"L-commutes", "mu_t(G~) is the quotient of mu_t(G), plus (t-1)K1 with isolated vertices"},
       check_commutes, {}},
      {{"T-twin-det", "twins, no isolated: det(mu_t(G)) = t|T| + det(G)"}, check_twin_det, {}},
      {{"T-twin-iso", "twins and isolated: det(mu_t(G)) = t|T| + det(G) + t - 1"},
       check_twin_iso, {}},
      {{"C-cover-is-det", "determining twin cover: det(mu_t(G)) = (t+1)det(G) + t - 1"},
       check_cover_is_det, {}},
      {{"C-iso-bounds", "(t+1)|T|+t-1 <= det(mu_t(G)) <= det(G~)+(t+1)|T|+t-1"},
       check_iso_bounds, {"lower", "upper"}},
      {{"T-combined", "isolated vertices: det(mu_t(G)) = t|T| + det(G) + t - 1; K1 gives t"},
       check_combined, {}},
      {{"I-global", "dist <= det + 1 and det <= rho on every mu_t(G)"}, check_global, {}},
      {{"L-root-levels", "non-star, no isolated: automorphisms fix w, keep levels, restrict to Aut(G)"},
       check_root_levels, {}},
  };
  return kEntries;
}

const Entry& entry_for(const std::string& id) {
  for (const auto& e : entries()) {
    if (e.info.id == id) return e;
  }
  throw GraphError("unknown theorem id: " + id);
}

struct Task {
  const Entry* entry;
  std::size_t graph_index;
  int t;
};

struct TaskResult {
  std::vector<TheoremVerdict> verdicts;
  std::vector<Observation> observations;
  std::set<std::string> attained;
};

}  // namespace

const std::vector<TheoremInfo>& theorem_registry() {
  static const std::vector<TheoremInfo> kInfo = [] {
    std::vector<TheoremInfo> out;
    for (const auto& e : entries()) out.push_back(e.info);
    return out;
  }();
  return kInfo;
}

bool is_known_theorem(const std::string& id) {
  for (const auto& e : entries()) {
    if (e.info.id == id) return true;
  }
  return false;
}

std::vector<Graph> build_corpus(const VerifyOptions& options) {
  std::vector<Graph> corpus;
  if (options.corpus_graphs) {
    std::vector<Graph> kept;
    for (const Graph& g : *options.corpus_graphs) {
      if (g.order() >= 1 && g.order() <= options.corpus.n_max &&
          passes_filters(g, options.corpus.filters)) {
        kept.push_back(g);
      }
    }
    corpus = dedupe_isomorphic(kept);
  } else {
    corpus = generate_corpus(options.corpus);
  }
  if (options.include_seeds) {
    auto with_seeds = corpus;
    for (const auto& seed : seed_graphs()) {
      if (passes_filters(seed.graph, options.corpus.filters)) {
        with_seeds.push_back(seed.graph);
      }
    }
    corpus = dedupe_isomorphic(with_seeds);
  }
  return corpus;
}

VerificationRun verify(const std::vector<std::string>& ids,
                       const VerifyOptions& options) {
  VerificationRun run;
  for (const auto& id : ids) {
    if (id == "all") {
      for (const auto& e : entries()) run.theorem_ids.push_back(e.info.id);
    } else {
      entry_for(id);
      run.theorem_ids.push_back(id);
    }
  }
  if (options.corpus.t_values.empty()) throw GraphError("no t values given");
  for (int t : options.corpus.t_values) {
    if (t < 1) throw GraphError("t values must be at least 1");
  }
  run.corpus = build_corpus(options);

  std::vector<Task> tasks;
  for (const auto& id : run.theorem_ids) {
    const Entry& e = entry_for(id);
    for (std::size_t gi = 0; gi < run.corpus.size(); ++gi) {
      if (e.info.per_graph) {
        tasks.push_back({&e, gi, 0});
      } else {
        for (int t : options.corpus.t_values) tasks.push_back({&e, gi, t});
      }
    }
  }

  Facts facts(options.budget);
  std::vector<std::string> graph6(run.corpus.size());
  for (std::size_t gi = 0; gi < run.corpus.size(); ++gi) {
    graph6[gi] = encode_graph6(run.corpus[gi]);
  }
  std::vector<TaskResult> results(tasks.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    while (true) {
      const std::size_t k = next.fetch_add(1);
      if (k >= tasks.size()) return;
      try {
        const Task& task = tasks[k];
        Instance instance{run.corpus[task.graph_index], graph6[task.graph_index], task.t};
        Context ctx{facts, options};
        Emitter emitter(task.entry->info.id, instance, options.perturbation);
        task.entry->check(instance, ctx, emitter);
        results[k] = {std::move(emitter.verdicts), std::move(emitter.observations),
                      std::move(emitter.attained_labels)};
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
  };
  const int jobs = std::max(1, options.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    for (int j = 0; j < jobs; ++j) threads.emplace_back(worker);
    for (auto& th : threads) th.join();
  }
  if (error) std::rethrow_exception(error);

  std::size_t k = 0;
  for (const auto& id : run.theorem_ids) {
    const Entry& e = entry_for(id);
    std::set<std::string> attained;
    std::size_t count = 0;
    for (; k < tasks.size() && tasks[k].entry == &e; ++k) {
      for (auto& v : results[k].verdicts) run.verdicts.push_back(std::move(v));
      count += results[k].verdicts.size();
      for (auto& o : results[k].observations) run.observations.push_back(std::move(o));
      attained.insert(results[k].attained.begin(), results[k].attained.end());
    }
    if (count == 0) {
      run.warnings.push_back(id + ": 0 instances satisfy the hypotheses");
      continue;
    }
    for (const auto& label : e.sharpness) {
      TheoremVerdict v;
      v.theorem_id = id;
      v.claim = label + " bound attained";
      v.graph6 = "*";
      v.relation = Relation::kAttained;
      v.expected = 1;
      v.computed = attained.count(label);
      if (v.computed) {
        v.status = VerdictStatus::kPass;
      } else {
        v.status = VerdictStatus::kInconclusive;
        v.note = "no corpus instance attains the bound";
        run.warnings.push_back(id + ": " + label + " bound not attained in this corpus");
      }
      run.verdicts.push_back(std::move(v));
    }
  }
  return run;
}

std::vector<TheoremVerdict> verify_theorem(const std::string& id,
                                           const VerifyOptions& options) {
  return verify({id}, options).verdicts;
}

}  // namespace mycsym
