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

#include "mycsym/report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "mycsym/graph6.hpp"

namespace mycsym {

using nlohmann::json;

ReportFormat parse_report_format(const std::string& name) {
  if (name == "json") return ReportFormat::kJson;
  if (name == "table") return ReportFormat::kTable;
  throw GraphError("unknown report format: " + name);
}

std::string summary_line(const VerificationRun& run) {
  return std::to_string(run.verdicts.size()) + " instances, " +
         std::to_string(run.failures()) + " failures";
}

namespace {

std::string expected_text(const TheoremVerdict& v) {
  switch (v.relation) {
    case Relation::kEqual: return "= " + std::to_string(v.expected);
    case Relation::kAtMost: return "<= " + std::to_string(v.expected);
    case Relation::kAtLeast: return ">= " + std::to_string(v.expected);
    case Relation::kBetween:
      return "[" + std::to_string(v.expected) + "," + std::to_string(v.expected_hi) + "]";
    case Relation::kAttained: return "attained";
  }
  return "?";
}

json coloring_json(const Coloring& c) { return {{"d", c.d}, {"color", c.color}}; }

json edge_list_json(const std::vector<Edge>& edges) {
  json out = json::array();
  for (auto [a, b] : edges) out.push_back({a, b});
  return out;
}

}  // namespace

json verdict_to_json(const TheoremVerdict& v) {
  json instance = {{"graph6", v.graph6}};
  if (v.t > 0) instance["t"] = v.t;
  json out = {
      {"theorem_id", v.theorem_id},
      {"claim", v.claim},
      {"instance", instance},
      {"relation", to_string(v.relation)},
      {"expected", v.expected},
      {"computed", v.computed},
      {"status", to_string(v.status)},
      {"pass", v.pass()},
  };
  if (v.relation == Relation::kBetween) out["expected_hi"] = v.expected_hi;
  if (!v.witness.empty()) out["witness"] = v.witness;
  if (!v.note.empty()) out["note"] = v.note;
  return out;
}

json run_to_json(const VerificationRun& run, const VerifyOptions& options) {
  json filters = json::array();
  for (auto f : options.corpus.filters) filters.push_back(to_string(f));
  json verdicts = json::array();
  for (const auto& v : run.verdicts) verdicts.push_back(verdict_to_json(v));
  json observations = json::array();
  for (const auto& o : run.observations) {
    json instance = {{"graph6", o.graph6}};
    if (o.t > 0) instance["t"] = o.t;
    observations.push_back(
        {{"theorem_id", o.theorem_id}, {"instance", instance}, {"text", o.text}});
  }
  return {
      {"schema_version", kReportSchemaVersion},
      {"corpus",
       {{"n_max", options.corpus.n_max},
        {"t_values", options.corpus.t_values},
        {"filters", filters},
        {"seeds", options.include_seeds},
        {"graphs", run.corpus.size()}}},
      {"theorems", run.theorem_ids},
      {"perturbation", options.perturbation},
      {"verdicts", verdicts},
      {"observations", observations},
      {"warnings", run.warnings},
      {"summary",
       {{"instances", run.verdicts.size()},
        {"failures", run.failures()},
        {"text", summary_line(run)}}},
  };
}

std::string render_report(const VerificationRun& run, const VerifyOptions& options,
                          ReportFormat format) {
  if (format == ReportFormat::kJson) return run_to_json(run, options).dump(2) + "\n";

  const std::vector<std::string> header = {"theorem", "graph6", "t", "claim",
                                           "expected", "computed", "status"};
  std::vector<std::vector<std::string>> rows;
  for (const auto& v : run.verdicts) {
    rows.push_back({v.theorem_id, v.graph6, v.t > 0 ? std::to_string(v.t) : "-",
                    v.claim, expected_text(v), std::to_string(v.computed),
                    to_string(v.status)});
  }
  std::vector<std::size_t> width(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  std::ostringstream out;
  auto emit = [&](const std::vector<std::string>& row) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c + 1 == row.size()) {
        out << row[c];
      } else {
        out << std::left << std::setw(static_cast<int>(width[c])) << row[c] << "  ";
      }
    }
    out << "\n";
  };
  emit(header);
  for (const auto& row : rows) emit(row);
  out << summary_line(run) << "\n";
  for (const auto& w : run.warnings) out << "warning: " << w << "\n";
  return out.str();
}

json params_to_json(const ParamReport& report) {
  json out = {{"order", report.order}};
  bool budget_exceeded = false;
  if (report.det) out["det"] = {{"value", report.det->value}, {"witness", report.det->witness}};
  if (report.dist) {
    const auto& d = *report.dist;
    if (d.exact) {
      out["dist"] = {{"value", d.value}};
      if (d.witness) out["dist"]["witness"] = coloring_json(*d.witness);
    } else {
      budget_exceeded = true;
      out["dist"] = {{"lo", d.lo}, {"hi", d.hi}, {"budget_exceeded", true}};
      if (d.witness) out["dist"]["witness"] = coloring_json(*d.witness);
    }
  }
  if (report.rho) {
    const auto& r = *report.rho;
    switch (r.status) {
      case CostStatus::kExact:
        out["rho"] = {{"value", r.value}, {"witness", r.witness}};
        break;
      case CostStatus::kNotTwoDistinguishable:
        out["rho"] = nullptr;
        break;
      case CostStatus::kBudgetExceeded:
        budget_exceeded = true;
        out["rho"] = {{"budget_exceeded", true}};
        break;
    }
  }
  if (report.dist_prime) {
    const auto& x = *report.dist_prime;
    switch (x.status) {
      case IndexStatus::kExact:
        out["dist_prime"] = {{"value", x.value}};
        break;
      case IndexStatus::kUndefined:
        out["dist_prime"] = "undefined";
        break;
      case IndexStatus::kBounds:
        budget_exceeded = true;
        out["dist_prime"] = {{"lo", x.lo}, {"hi", x.hi}, {"budget_exceeded", true}};
        break;
    }
    if (x.witness) {
      out["dist_prime"]["witness"] = {{"d", x.witness->d},
                                      {"edges", edge_list_json(x.witness->edges)},
                                      {"color", x.witness->color}};
    }
  }
  out["budget_exceeded"] = budget_exceeded;
  return out;
}

json construction_to_json(const MycGraph& m, bool with_roles) {
  json out = {{"graph6", encode_graph6(m.graph())},
              {"order", m.graph().order()},
              {"size", m.graph().size()},
              {"base_order", m.base_n()},
              {"t", m.t()},
              {"root", m.root()}};
  if (with_roles) {
    json roles = json::array();
    for (int v = 0; v < m.graph().order(); ++v) {
      const auto role = m.role(v);
      const char* kind = role.kind == RoleKind::kOriginal ? "original"
                         : role.kind == RoleKind::kShadow ? "shadow"
                                                          : "root";
      json r = {{"vertex", v}, {"kind", kind}, {"level", role.level}};
      if (role.kind != RoleKind::kRoot) r["index"] = role.index;
      roles.push_back(r);
    }
    out["roles"] = roles;
  }
  return out;
}

json quotient_to_json(const Graph& g, const QuotientGraph& q) {
  json classes = json::array();
  for (int c = 0; c < q.graph.order(); ++c) {
    VertexSet members;
    for (int v = 0; v < g.order(); ++v) {
      if (q.class_of[v] == c) members.push_back(v);
    }
    classes.push_back(members);
  }
  return {{"graph6", encode_graph6(q.graph)},
          {"order", q.graph.order()},
          {"edges", edge_list_json(q.graph.edges())},
          {"class_of", q.class_of},
          {"classes", classes},
          {"representatives", q.rep_of}};
}

}  // namespace mycsym
