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

// mycsym: Mycielskian construction, symmetry parameters and theorem checks.

#include <climits>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mycsym/corpus.hpp"
#include "mycsym/graph6.hpp"
#include "mycsym/mycielskian.hpp"
#include "mycsym/report.hpp"
#include "mycsym/sym_params.hpp"
#include "mycsym/theorems.hpp"
#include "mycsym/twin_quotient.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

std::vector<mycsym::Graph> load_graphs(const std::string& path) {
  if (path == "-") {
    const std::string text{std::istreambuf_iterator<char>(std::cin),
                           std::istreambuf_iterator<char>()};
    return mycsym::parse_graph_file(text);
  }
  return mycsym::read_graph_file(path);
}

std::vector<int> parse_t_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    int t = 0;
    try {
      t = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size() || t < 1) {
      throw mycsym::GraphError("bad t value: '" + item + "'");
    }
    out.push_back(t);
  }
  if (out.empty()) throw mycsym::GraphError("empty t list");
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mycielskian constructions and symmetry parameters"};
  app.require_subcommand(1);

  // construct
  auto* construct = app.add_subcommand("construct", "Build mu_t(G) for each input graph");
  int construct_t = 1;
  int iterate = 1;
  std::string construct_format = "graph6";
  std::string construct_file;
  construct->add_option("--t", construct_t, "Number of shadow levels")->required()
      ->check(CLI::PositiveNumber);
  construct->add_option("--iterate", iterate, "Apply the construction K times")
      ->check(CLI::PositiveNumber);
  construct->add_option("--format", construct_format, "graph6, edges or json")
      ->check(CLI::IsMember({"graph6", "edges", "json"}));
  construct->add_option("file", construct_file, "Graph file (graph6 or edge list), - for stdin")
      ->required();

  // params
  auto* params = app.add_subcommand("params", "Compute det, dist, rho and dist' as JSON");
  bool want_det = false, want_dist = false, want_rho = false, want_index = false;
  std::uint64_t budget = mycsym::kDefaultBudget;
  std::string params_file;
  params->add_flag("--det", want_det, "Determining number");
  params->add_flag("--dist", want_dist, "Distinguishing number");
  params->add_flag("--rho", want_rho, "Cost of 2-distinguishing");
  params->add_flag("--dist-prime", want_index, "Distinguishing index");
  params->add_option("--budget", budget, "Search nodes per coloring size before giving bounds")
      ->check(CLI::PositiveNumber);
  params->add_option("file", params_file, "Graph file, - for stdin")->required();

  // quotient
  auto* quotient = app.add_subcommand("quotient", "Twin quotient and class map as JSON");
  std::string quotient_file;
  quotient->add_option("file", quotient_file, "Graph file, - for stdin")->required();

  // verify
  auto* verify = app.add_subcommand("verify", "Check registry claims over a corpus");
  std::vector<std::string> theorem_ids;
  int n_max = 6;
  std::string t_list = "1,2";
  std::string corpus_file;
  std::string format = "table";
  std::vector<std::string> filter_names;
  int jobs = 1;
  bool inject_fault = false;
  bool no_seeds = false;
  bool list_theorems = false;
  verify->add_option("--theorem", theorem_ids, "Registry id or 'all' (repeatable)");
  auto* nmax_opt = verify->add_option("--nmax", n_max, "Largest corpus order")
                       ->check(CLI::PositiveNumber);
  verify->add_option("--t", t_list, "Comma-separated t values");
  verify->add_option("--corpus", corpus_file, "graph6 file replacing generation");
  verify->add_option("--format", format, "json or table")
      ->check(CLI::IsMember({"json", "table"}));
  verify->add_option("--filter", filter_names,
                     "twin-free, has-isolated, non-star, not-k1, not-k2, has-twins, not-quotient");
  verify->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  verify->add_option("--budget", budget, "Search budget for dist and rho")
      ->check(CLI::PositiveNumber);
  verify->add_flag("--inject-fault", inject_fault, "Shift every formula by one (self-test)");
  verify->add_flag("--no-seeds", no_seeds, "Skip the built-in seed graphs");
  verify->add_flag("--list", list_theorems, "Print registry ids and exit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*construct) {
      for (const auto& g : load_graphs(construct_file)) {
        mycsym::MycGraph m = mycsym::generalized_mycielskian(g, construct_t);
        for (int k = 1; k < iterate; ++k) {
          m = mycsym::generalized_mycielskian(m.graph(), construct_t);
        }
        if (construct_format == "graph6") {
          std::cout << mycsym::encode_graph6(m.graph()) << "\n";
        } else if (construct_format == "edges") {
          std::cout << mycsym::to_edge_list(m.graph());
        } else {
          std::cout << mycsym::construction_to_json(m, true).dump() << "\n";
        }
      }
      return kExitOk;
    }

    if (*params) {
      mycsym::ParamRequest request;
      if (want_det || want_dist || want_rho || want_index) {
        request.det = want_det;
        request.dist = want_dist;
        request.rho = want_rho;
        request.dist_prime = want_index;
      }
      request.budget = budget;
      for (const auto& g : load_graphs(params_file)) {
        auto out = mycsym::params_to_json(mycsym::compute_params(g, request));
        out["graph6"] = mycsym::encode_graph6(g);
        std::cout << out.dump() << "\n";
      }
      return kExitOk;
    }

    if (*quotient) {
      for (const auto& g : load_graphs(quotient_file)) {
        auto out = mycsym::quotient_to_json(g, mycsym::quotient_graph(g));
        out["input"] = mycsym::encode_graph6(g);
        std::cout << out.dump() << "\n";
      }
      return kExitOk;
    }

    if (list_theorems) {
      for (const auto& info : mycsym::theorem_registry()) {
        std::cout << info.id << "  " << info.summary << "\n";
      }
      return kExitOk;
    }
    if (theorem_ids.empty()) {
      std::cerr << "verify: --theorem is required\n";
      return kExitUsage;
    }
    mycsym::VerifyOptions options;
    options.corpus.t_values = parse_t_list(t_list);
    for (const auto& name : filter_names) {
      options.corpus.filters.push_back(mycsym::parse_corpus_filter(name));
    }
    if (!corpus_file.empty()) {
      options.corpus_graphs = mycsym::read_graph_file(corpus_file);
      options.corpus.n_max = nmax_opt->count() ? n_max : INT_MAX;
    } else {
      options.corpus.n_max = n_max;
    }
    options.include_seeds = !no_seeds;
    options.jobs = jobs;
    options.perturbation = inject_fault ? 1 : 0;
    options.budget = budget;
    const auto fmt = mycsym::parse_report_format(format);
    const auto run = mycsym::verify(theorem_ids, options);
    std::cout << mycsym::render_report(run, options, fmt);
    if (fmt == mycsym::ReportFormat::kJson) {
      std::cerr << mycsym::summary_line(run) << "\n";
      for (const auto& w : run.warnings) std::cerr << "warning: " << w << "\n";
    }
    return run.failures() == 0 ? kExitOk : kExitFail;
  } catch (const std::exception& e) {
    std::cerr << "mycsym: " << e.what() << "\n";
    return kExitUsage;
  }
}
