// Copyright 2026 The Transilab Authors
//
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


// Command-line front end: generate, measure, detect, experiment, list-plans.

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <unistd.h>

#include <CLI11.hpp>

#include "transilab/clustered_models.hpp"
#include "transilab/community_detect.hpp"
#include "transilab/error.hpp"
#include "transilab/harness.hpp"
#include "transilab/io.hpp"
#include "transilab/lfr.hpp"
#include "transilab/metrics.hpp"
#include "transilab/random_models.hpp"

namespace tl = transilab;

namespace {

struct GenerateArgs {
  std::string model = "lfr";
  std::string basic = "CM";
  std::size_t n = 1000;
  double gamma = 3.0;
  double beta = 2.0;
  double mean_degree = 15.0;
  int k_max = 45;
  int n_min = 10;
  int n_max = 200;
  double mu = 0.1;
  double mu_tolerance = 0.02;
  int max_sweeps = 500;
  double tau = 0.0;
  double p_closure = 0.9;
  std::optional<std::size_t> m;
  double epsilon = 0.99;
  double temptation = 1.5;
  int rounds = 1;
  double cooperators = 0.5;
  std::uint64_t seed = 1;
  std::uint64_t replicate = 0;
  std::string out = "-";
  std::string partition_out;
};

struct MeasureArgs {
  std::string graph;
  std::string partition;
  bool exclude_low_degree = false;
};

struct DetectArgs {
  std::string graph;
  std::string algo = "louvain";
  std::uint64_t seed = 1;
  int restarts = 3;
  std::string out = "-";
};

struct ExperimentArgs {
  std::string plan;
  std::optional<std::uint64_t> seed;
  std::optional<int> reps;
  double scale = 1.0;
  std::string out;
  bool quiet = false;
};

tl::EdgeListFile load_graph(const std::string& path) {
  try {
    if (path == "-") return tl::read_edge_list(std::cin);
    return tl::load_edge_list(path);
  } catch (const tl::ParseError& e) {
    throw tl::Error(path + ": " + e.what());
  }
}

tl::Partition load_labels(const std::string& path, std::size_t n) {
  try {
    return tl::load_partition(path, n).partition;
  } catch (const tl::ParseError& e) {
    throw tl::Error(path + ": " + e.what());
  }
}

template <typename Write>
void to_path(const std::string& path, Write write) {
  if (path == "-") {
    write(std::cout);
    return;
  }
  std::ofstream out(path);
  if (!out) throw tl::Error("cannot write " + path);
  write(out);
  if (!out) throw tl::Error("write failed for " + path);
}

std::string real(double v) { return tl::format_real(v); }

int run_generate(const GenerateArgs& a) {
  const tl::Seed seed{a.seed, a.replicate};
  tl::Metadata meta{{"model", a.model}, {"seed", std::to_string(a.seed)},
                    {"replicate", std::to_string(a.replicate)}};
  tl::Graph g;
  std::optional<tl::Partition> truth;
  const std::size_t m =
      a.m.value_or(static_cast<std::size_t>(std::max(1.0, std::round(a.mean_degree / 2.0))));

  if (a.model == "cm") {
    const tl::PowerLawSpec spec{a.gamma, 1, a.k_max, a.mean_degree};
    const auto deg = tl::sample_power_law_degrees(spec, a.n, seed.derive(1));
    g = tl::configuration_model(deg.degrees, seed.derive(2));
    meta["degree_lower_bound"] = std::to_string(deg.lower);
  } else if (a.model == "ba") {
    g = tl::barabasi_albert(a.n, m, seed);
    meta["m"] = std::to_string(m);
  } else if (a.model == "ev") {
    tl::EvParams p{a.n, m, a.epsilon, a.temptation, a.rounds, a.cooperators};
    g = tl::evolutionary_pa(p, seed);
    meta["m"] = std::to_string(m);
  } else if (a.model == "lfr") {
    tl::LfrParams p;
    p.n = a.n;
    p.gamma = a.gamma;
    p.beta = a.beta;
    p.mean_degree = a.mean_degree;
    p.k_max = a.k_max;
    p.n_min = a.n_min;
    p.n_max = a.n_max;
    p.mu = a.mu;
    p.basic_model = tl::parse_basic_model(a.basic);
    p.mu_tolerance = a.mu_tolerance;
    p.max_sweeps = a.max_sweeps;
    p.ev = tl::EvParams{a.n, m, a.epsilon, a.temptation, a.rounds, a.cooperators};
    tl::LfrResult r = tl::lfr_generate(p, seed);
    meta["basic_model"] = std::string(tl::to_string(p.basic_model));
    meta["mu_target"] = real(a.mu);
    meta["mu_achieved"] = real(r.achieved_mu);
    meta["residual_deficit"] = std::to_string(r.residual_deficit);
    meta["sweeps"] = std::to_string(r.sweeps);
    meta["effective_n_min"] = std::to_string(r.effective_n_min);
    meta["communities"] = std::to_string(r.partition.num_communities());
    g = std::move(r.graph);
    truth = std::move(r.partition);
  } else if (a.model == "nm") {
    tl::NmParams p{a.n, a.gamma, a.mean_degree, a.k_max, a.tau};
    tl::NmResult r = tl::nm_generate(p, seed);
    meta["tau"] = real(a.tau);
    meta["triangle_decrements"] = std::to_string(r.triangle_decrements);
    meta["single_increments"] = std::to_string(r.single_increments);
    meta["restarts"] = std::to_string(r.restarts);
    g = std::move(r.graph);
  } else if (a.model == "ht") {
    tl::HtParams p{a.n, a.gamma, a.mean_degree, a.k_max, a.p_closure};
    tl::HtResult r = tl::ht_generate(p, seed);
    meta["p_closure"] = real(a.p_closure);
    meta["stub_shortfall"] = std::to_string(r.shortfall);
    g = std::move(r.graph);
  } else {
    throw tl::Error("unknown model '" + a.model + "'");
  }

  to_path(a.out, [&](std::ostream& os) { tl::write_edge_list(os, g, meta); });
  if (truth) {
    std::string path = a.partition_out;
    if (path.empty() && a.out != "-") path = a.out + ".communities";
    if (!path.empty()) {
      to_path(path, [&](std::ostream& os) {
        tl::write_partition(os, *truth, {{"source", "ground truth"}});
      });
    }
  }
  std::cerr << "generated " << g.num_nodes() << " nodes, " << g.num_edges() << " edges\n";
  return 0;
}

int run_measure(const MeasureArgs& a) {
  const tl::EdgeListFile file = load_graph(a.graph);
  const tl::Graph& g = file.graph;
  std::optional<tl::Partition> p;
  if (!a.partition.empty()) p = load_labels(a.partition, g.num_nodes());
  const tl::TriadCensus census = tl::triad_census(g);
  const auto policy = a.exclude_low_degree ? tl::LowDegreePolicy::kExclude
                                           : tl::LowDegreePolicy::kCountAsZero;
  std::cout << "nodes,edges,mean_degree,triangles,connected_triples,transitivity_global,"
               "transitivity_local_avg,transitivity_literal_ratio,n_communities,modularity,mu\n";
  std::cout << g.num_nodes() << ',' << g.num_edges() << ','
            << real(g.num_nodes() ? 2.0 * g.num_edges() / g.num_nodes() : 0.0) << ','
            << census.triangles << ',' << census.connected_triples << ','
            << real(tl::global_transitivity(g)) << ',' << real(tl::avg_local_clustering(g, policy))
            << ',' << real(tl::literal_triad_ratio(g));
  if (p) {
    std::cout << ',' << p->num_communities() << ','
              << (g.num_edges() ? real(tl::modularity(g, *p)) : "") << ','
              << real(tl::mixing_coefficient(g, *p)) << '\n';
  } else {
    std::cout << ",,,\n";
  }
  return 0;
}

int run_detect(const DetectArgs& a) {
  const tl::EdgeListFile file = load_graph(a.graph);
  const tl::Graph& g = file.graph;
  if (g.num_edges() == 0) throw tl::Error(a.graph + ": graph has no edges");
  tl::DetectionResult r;
  tl::Metadata meta{{"algorithm", a.algo}, {"seed", std::to_string(a.seed)}};
  if (a.algo == "louvain") {
    r = tl::louvain(g, tl::Seed{a.seed, 0});
    meta["modularity"] = real(r.objective);
  } else if (a.algo == "infomap") {
    if (!tl::is_connected(g)) {
      throw tl::Error(a.graph + ": infomap needs a connected graph");
    }
    tl::InfomapOptions options;
    options.restarts = a.restarts;
    r = tl::infomap_greedy(g, tl::Seed{a.seed, 0}, options);
    meta["codelength_bits"] = real(r.objective);
    meta["modularity"] = real(tl::modularity(g, r.partition));
  } else {
    throw tl::Error("unknown algorithm '" + a.algo + "' (expected louvain or infomap)");
  }
  meta["communities"] = std::to_string(r.partition.num_communities());
  to_path(a.out, [&](std::ostream& os) { tl::write_partition(os, r.partition, meta); });
  std::cerr << a.algo << ": " << r.partition.num_communities() << " communities, objective "
            << real(r.objective) << '\n';
  return 0;
}

int run_experiment(const ExperimentArgs& a) {
  tl::ExperimentPlan plan;
  if (auto builtin = tl::find_builtin_plan(a.plan)) {
    plan = *builtin;
  } else {
    plan = tl::load_plan_file(a.plan);
  }
  if (a.seed) plan.base_seed = *a.seed;
  if (a.reps) plan.replicates = *a.reps;
  plan = tl::scaled(std::move(plan), a.scale);
  if (!a.out.empty()) plan.output = a.out;
  plan.validate();

  tl::RunOptions options;
  if (!a.quiet && isatty(STDERR_FILENO)) {
    options.on_progress = [](std::size_t done, std::size_t total) {
      std::cerr << "\r" << done << "/" << total << std::flush;
      if (done == total) std::cerr << '\n';
    };
  }
  const auto records = tl::run_experiment(plan, options);
  to_path(plan.output, [&](std::ostream& os) { tl::write_csv(os, records); });
  std::size_t failures = 0;
  for (const auto& r : records) failures += !r.error.empty();
  std::cerr << plan.name << ": " << records.size() << " rows";
  if (plan.output != "-") std::cerr << " -> " << plan.output;
  if (failures) std::cerr << " (" << failures << " failed)";
  std::cerr << '\n';
  return 0;
}

int run_list_plans(bool as_json) {
  for (const auto& p : tl::builtin_plans()) {
    if (as_json) {
      std::cout << tl::plan_to_json(p) << '\n';
      continue;
    }
    const std::size_t rows = tl::expand_grid(p).size() * static_cast<std::size_t>(p.replicates);
    std::cout << p.name << "\t" << rows << " rows\t" << p.description << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graph generators, transitivity and community metrics, detection and sweeps"};
  app.require_subcommand(1);

  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "Generate a graph and write its edge list");
  generate->add_option("--model", gen.model, "cm, ba, ev, lfr, nm or ht")
      ->transform(CLI::IsMember({"cm", "ba", "ev", "lfr", "nm", "ht"}, CLI::ignore_case))
      ->capture_default_str();
  generate->add_option("--basic", gen.basic, "LFR seed network: CM, BA or EV")
      ->capture_default_str();
  generate->add_option("--n", gen.n, "Number of nodes")->capture_default_str();
  generate->add_option("--gamma", gen.gamma, "Degree exponent")->capture_default_str();
  generate->add_option("--beta", gen.beta, "Community size exponent")->capture_default_str();
  generate->add_option("--mean-degree", gen.mean_degree, "Target mean degree")
      ->capture_default_str();
  generate->add_option("--k-max", gen.k_max, "Maximum degree")->capture_default_str();
  generate->add_option("--n-min", gen.n_min, "Smallest community size")->capture_default_str();
  generate->add_option("--n-max", gen.n_max, "Largest community size")->capture_default_str();
  generate->add_option("--mu", gen.mu, "Target mixing coefficient")->capture_default_str();
  generate->add_option("--mu-tolerance", gen.mu_tolerance, "Accepted distance from the target mu")
      ->capture_default_str();
  generate->add_option("--max-sweeps", gen.max_sweeps, "Rewiring sweep budget")
      ->capture_default_str();
  generate->add_option("--tau", gen.tau, "NM transitivity coefficient")->capture_default_str();
  generate->add_option("--p-closure", gen.p_closure, "HT triangle-closing probability")
      ->capture_default_str();
  generate->add_option("--m", gen.m, "Links per arriving node (BA, EV); default mean-degree/2");
  generate->add_option("--epsilon", gen.epsilon, "EV selection intensity")->capture_default_str();
  generate->add_option("--temptation", gen.temptation, "EV defector payoff b")
      ->capture_default_str();
  generate->add_option("--rounds", gen.rounds, "EV game rounds per arrival")
      ->capture_default_str();
  generate->add_option("--cooperators", gen.cooperators, "EV initial cooperator fraction")
      ->capture_default_str();
  generate->add_option("--seed", gen.seed, "Base seed")->capture_default_str();
  generate->add_option("--replicate", gen.replicate, "Replicate index")->capture_default_str();
  generate->add_option("--out", gen.out, "Edge list path ('-' for stdout)")
      ->capture_default_str();
  generate->add_option("--partition", gen.partition_out,
                       "Ground-truth partition path (LFR; default <out>.communities)");

  MeasureArgs meas;
  auto* measure = app.add_subcommand("measure", "Print the metrics of a graph as one CSV row");
  measure->add_option("graph", meas.graph, "Edge list ('-' for stdin)")->required();
  measure->add_option("--partition", meas.partition, "Partition file for modularity and mu");
  measure->add_flag("--exclude-low-degree", meas.exclude_low_degree,
                    "Leave degree<2 nodes out of the local clustering average");

  DetectArgs det;
  auto* detect = app.add_subcommand("detect", "Detect communities and write a partition");
  detect->add_option("graph", det.graph, "Edge list ('-' for stdin)")->required();
  detect->add_option("--algo", det.algo, "louvain or infomap")
      ->transform(CLI::IsMember({"louvain", "infomap"}, CLI::ignore_case))
      ->capture_default_str();
  detect->add_option("--seed", det.seed, "Random seed")->capture_default_str();
  detect->add_option("--restarts", det.restarts, "Infomap restarts")->capture_default_str();
  detect->add_option("--out", det.out, "Partition path ('-' for stdout)")->capture_default_str();

  ExperimentArgs exp;
  auto* experiment = app.add_subcommand("experiment", "Run a builtin or JSON-defined plan");
  experiment->add_option("--plan", exp.plan, "Builtin plan name or JSON file")->required();
  experiment->add_option("--seed", exp.seed, "Override the plan's base seed");
  experiment->add_option("--reps", exp.reps, "Override the replicate count");
  experiment->add_option("--scale", exp.scale, "Divide n and n_max by this factor")
      ->capture_default_str();
  experiment->add_option("--out", exp.out, "CSV path ('-' for stdout)");
  experiment->add_flag("--quiet", exp.quiet, "No progress output");

  bool as_json = false;
  auto* list = app.add_subcommand("list-plans", "List builtin experiment plans");
  list->add_flag("--json", as_json, "Print each plan as JSON");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*generate) return run_generate(gen);
    if (*measure) return run_measure(meas);
    if (*detect) return run_detect(det);
    if (*experiment) return run_experiment(exp);
    if (*list) return run_list_plans(as_json);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
