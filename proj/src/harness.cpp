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


#include "transilab/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "transilab/clustered_models.hpp"
#include "transilab/community_detect.hpp"
#include "transilab/error.hpp"
#include "transilab/io.hpp"
#include "transilab/metrics.hpp"

namespace transilab {

namespace {

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

bool uses_models(ModelFamily f) { return f == ModelFamily::kBasic || f == ModelFamily::kLfr; }

std::vector<double> mu_grid() {
  std::vector<double> mu;
  for (int i = 1; i <= 19; ++i) mu.push_back(i * 5 / 100.0);
  return mu;
}

std::vector<double> tau_grid() {
  std::vector<double> tau;
  for (int i = 0; i <= 10; ++i) tau.push_back(i / 10.0);
  return tau;
}

}  // namespace

std::string_view to_string(ModelFamily family) {
  switch (family) {
    case ModelFamily::kBasic:
      return "basic";
    case ModelFamily::kLfr:
      return "lfr";
    case ModelFamily::kNm:
      return "nm";
    case ModelFamily::kHt:
      return "ht";
  }
  return "?";
}

ModelFamily parse_model_family(std::string_view name) {
  const std::string s = lower(name);
  if (s == "basic") return ModelFamily::kBasic;
  if (s == "lfr") return ModelFamily::kLfr;
  if (s == "nm") return ModelFamily::kNm;
  if (s == "ht") return ModelFamily::kHt;
  throw Error("unknown model family '" + std::string(name) + "' (expected basic, lfr, nm, ht)");
}

void ExperimentPlan::validate() const {
  if (name.empty()) throw Error("plan needs a name");
  if (replicates < 1) throw Error("replicates must be at least 1");
  if (n < 3) throw Error("n must be at least 3");
  if (mean_degree.empty()) throw Error("mean_degree grid is empty");
  if (k_max.size() != mean_degree.size()) {
    throw Error("k_max must list one value per mean_degree entry");
  }
  if (uses_models(family) && models.empty()) throw Error("model list is empty");
  if (family == ModelFamily::kLfr && (n_max.empty() || mu.empty())) {
    throw Error("lfr plans need non-empty n_max and mu grids");
  }
  if (family == ModelFamily::kNm && tau.empty()) throw Error("nm plans need a tau grid");
  for (const auto& d : detectors) {
    if (d != "louvain" && d != "infomap") {
      throw Error("unknown detector '" + d + "' (expected louvain or infomap)");
    }
  }
}

std::string GridPoint::key(const ExperimentPlan& plan) const {
  std::string key = "family=" + std::string(to_string(plan.family));
  if (uses_models(plan.family)) key += ";model=" + std::string(to_string(model));
  key += ";n=" + std::to_string(plan.n);
  key += ";k=" + format_real(mean_degree) + ";kmax=" + std::to_string(k_max);
  if (n_max) key += ";nmax=" + std::to_string(*n_max);
  if (mu) key += ";mu=" + format_real(*mu);
  if (tau) key += ";tau=" + format_real(*tau);
  return key;
}

std::vector<GridPoint> expand_grid(const ExperimentPlan& plan) {
  plan.validate();
  const std::vector<BasicModel> models =
      uses_models(plan.family) ? plan.models : std::vector<BasicModel>{BasicModel::kCM};
  std::vector<GridPoint> points;
  for (BasicModel model : models) {
    for (std::size_t d = 0; d < plan.mean_degree.size(); ++d) {
      GridPoint base;
      base.model = model;
      base.mean_degree = plan.mean_degree[d];
      base.k_max = plan.k_max[d];
      switch (plan.family) {
        case ModelFamily::kLfr:
          for (int nmax : plan.n_max) {
            for (double mu : plan.mu) {
              GridPoint p = base;
              p.n_max = nmax;
              p.mu = mu;
              points.push_back(p);
            }
          }
          break;
        case ModelFamily::kNm:
          for (double tau : plan.tau) {
            GridPoint p = base;
            p.tau = tau;
            points.push_back(p);
          }
          break;
        case ModelFamily::kBasic:
        case ModelFamily::kHt:
          points.push_back(base);
          break;
      }
    }
  }
  return points;
}

Seed replicate_seed(const ExperimentPlan& plan, const GridPoint& point, int replicate) {
  return Seed{plan.base_seed ^ stable_hash(point.key(plan)),
              static_cast<std::uint64_t>(replicate)};
}

std::string format_real(double value) {
  if (value == 0.0) return "0";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", value);
  return buf;
}

const std::vector<std::string>& metric_record_columns() {
  static const std::vector<std::string> columns = {
      "experiment",          "model",
      "n",                   "gamma",
      "beta",                "mean_degree_target",
      "mean_degree_achieved", "k_max",
      "n_max",               "mu_target",
      "mu_achieved",         "tau",
      "replicate",           "seed",
      "transitivity_global", "transitivity_local_avg",
      "transitivity_literal_ratio", "modularity_true",
      "modularity_louvain",  "modularity_infomap",
      "n_communities_true",  "n_communities_louvain",
      "n_communities_infomap", "dropped_node_fraction",
      "runtime_ms",          "error",
  };
  return columns;
}

void write_csv_header(std::ostream& out) {
  const auto& columns = metric_record_columns();
  for (std::size_t i = 0; i < columns.size(); ++i) out << (i ? "," : "") << columns[i];
  out << '\n';
}

namespace {

std::string field(const std::optional<double>& v) { return v ? format_real(*v) : ""; }

template <typename Int>
std::string field(const std::optional<Int>& v) {
  return v ? std::to_string(*v) : "";
}

std::string quoted(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

}  // namespace

void write_csv_row(std::ostream& out, const MetricRecord& r) {
  const std::string fields[] = {
      quoted(r.experiment),
      quoted(r.model),
      std::to_string(r.n),
      field(r.gamma),
      field(r.beta),
      field(r.mean_degree_target),
      field(r.mean_degree_achieved),
      field(r.k_max),
      field(r.n_max),
      field(r.mu_target),
      field(r.mu_achieved),
      field(r.tau),
      std::to_string(r.replicate),
      std::to_string(r.seed),
      field(r.transitivity_global),
      field(r.transitivity_local_avg),
      field(r.transitivity_literal_ratio),
      field(r.modularity_true),
      field(r.modularity_louvain),
      field(r.modularity_infomap),
      field(r.n_communities_true),
      field(r.n_communities_louvain),
      field(r.n_communities_infomap),
      field(r.dropped_node_fraction),
      format_real(r.runtime_ms),
      quoted(r.error),
  };
  bool first = true;
  for (const auto& f : fields) {
    if (!first) out << ',';
    out << f;
    first = false;
  }
  out << '\n';
}

void write_csv(std::ostream& out, const std::vector<MetricRecord>& records) {
  write_csv_header(out);
  for (const auto& r : records) write_csv_row(out, r);
}

namespace {

struct Generated {
  Graph graph;
  std::optional<Partition> truth;
};

Generated generate(const ExperimentPlan& plan, const GridPoint& point, const Seed& seed) {
  Generated out;
  switch (plan.family) {
    case ModelFamily::kBasic: {
      BasicModelParams p;
      p.model = point.model;
      p.n = plan.n;
      p.gamma = plan.gamma;
      p.mean_degree = point.mean_degree;
      p.k_max = point.k_max;
      out.graph = generate_basic_model(p, seed);
      break;
    }
    case ModelFamily::kLfr: {
      LfrParams p;
      p.n = plan.n;
      p.gamma = plan.gamma;
      p.beta = plan.beta;
      p.mean_degree = point.mean_degree;
      p.k_max = point.k_max;
      p.n_min = plan.n_min;
      p.n_max = *point.n_max;
      p.mu = *point.mu;
      p.basic_model = point.model;
      LfrResult r = lfr_generate(p, seed);
      out.graph = std::move(r.graph);
      out.truth = std::move(r.partition);
      break;
    }
    case ModelFamily::kNm: {
      NmParams p;
      p.n = plan.n;
      p.gamma = plan.gamma;
      p.mean_degree = point.mean_degree;
      p.k_max = point.k_max;
      p.tau = *point.tau;
      out.graph = nm_generate(p, seed).graph;
      break;
    }
    case ModelFamily::kHt: {
      HtParams p;
      p.n = plan.n;
      p.gamma = plan.gamma;
      p.mean_degree = point.mean_degree;
      p.k_max = point.k_max;
      p.p_closure = plan.p_closure;
      out.graph = ht_generate(p, seed).graph;
      break;
    }
  }
  return out;
}

// Metrics are taken from what a reader of the written files would see.
Generated round_trip(const Generated& g) {
  Generated out;
  std::stringstream edges;
  write_edge_list(edges, g.graph);
  out.graph = read_edge_list(edges).graph;
  if (g.truth) {
    std::stringstream labels;
    write_partition(labels, *g.truth);
    out.truth = read_partition(labels, out.graph.num_nodes()).partition;
  }
  return out;
}

std::string model_label(const ExperimentPlan& plan, BasicModel model) {
  switch (plan.family) {
    case ModelFamily::kBasic:
      return std::string(to_string(model));
    case ModelFamily::kLfr:
      return "LFR-" + std::string(to_string(model));
    case ModelFamily::kNm:
      return "NM";
    case ModelFamily::kHt:
      return "HT";
  }
  return "";
}

}  // namespace

MetricRecord run_replicate(const ExperimentPlan& plan, const GridPoint& point, int replicate) {
  const auto start = std::chrono::steady_clock::now();
  const Seed seed = replicate_seed(plan, point, replicate);
  MetricRecord r;
  r.experiment = plan.name;
  r.model = model_label(plan, point.model);
  r.n = plan.n;
  if (plan.family != ModelFamily::kBasic || point.model == BasicModel::kCM) r.gamma = plan.gamma;
  if (plan.family == ModelFamily::kLfr) r.beta = plan.beta;
  r.mean_degree_target = point.mean_degree;
  r.k_max = point.k_max;
  r.n_max = point.n_max;
  r.mu_target = point.mu;
  r.tau = point.tau;
  r.replicate = replicate;
  r.seed = seed.base;

  try {
    const Generated g = round_trip(generate(plan, point, seed));
    const Graph& graph = g.graph;
    r.mean_degree_achieved = 2.0 * static_cast<double>(graph.num_edges()) /
                             static_cast<double>(graph.num_nodes());
    r.transitivity_global = global_transitivity(graph);
    r.transitivity_local_avg = avg_local_clustering(graph);
    r.transitivity_literal_ratio = literal_triad_ratio(graph);
    if (g.truth) {
      r.mu_achieved = mixing_coefficient(graph, *g.truth);
      r.modularity_true = modularity(graph, *g.truth);
      r.n_communities_true = g.truth->num_communities();
    }
    if (!plan.detectors.empty()) {
      Subgraph component;
      const Graph* target = &graph;
      if (is_connected(graph)) {
        r.dropped_node_fraction = 0.0;
      } else {
        component = largest_component(graph);
        target = &component.graph;
        r.dropped_node_fraction =
            1.0 - static_cast<double>(target->num_nodes()) / static_cast<double>(graph.num_nodes());
      }
      if (target->num_edges() == 0) throw Error("no edges left for community detection");
      for (const auto& name : plan.detectors) {
        if (name == "louvain") {
          const DetectionResult d = louvain(*target, seed.derive(100));
          r.modularity_louvain = modularity(*target, d.partition);
          r.n_communities_louvain = d.partition.num_communities();
        } else {
          const DetectionResult d = infomap_greedy(*target, seed.derive(101));
          r.modularity_infomap = modularity(*target, d.partition);
          r.n_communities_infomap = d.partition.num_communities();
        }
      }
    }
  } catch (const std::exception& e) {
    r.error = e.what();
  }
  r.runtime_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

unsigned default_thread_count() {
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("TRANSILAB_THREADS")) {
    char* end = nullptr;
    const long cap = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && cap >= 1) {
      threads = std::min(threads, static_cast<unsigned>(cap));
    }
  }
  return threads;
}

std::vector<MetricRecord> run_experiment(const ExperimentPlan& plan, const RunOptions& options) {
  const std::vector<GridPoint> points = expand_grid(plan);
  const std::size_t reps = static_cast<std::size_t>(plan.replicates);
  const std::size_t total = points.size() * reps;
  std::vector<MetricRecord> records(total);

  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> done{0};
  std::mutex progress;
  auto work = [&] {
    for (std::size_t task = next++; task < total; task = next++) {
      records[task] = run_replicate(plan, points[task / reps], static_cast<int>(task % reps));
      const std::size_t finished = ++done;
      if (options.on_progress) {
        std::lock_guard lock(progress);
        options.on_progress(finished, total);
      }
    }
  };

  const unsigned threads = static_cast<unsigned>(
      std::min<std::size_t>(options.threads ? options.threads : default_thread_count(), total));
  if (threads <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  return records;
}

ExperimentPlan scaled(ExperimentPlan plan, double factor) {
  if (!(factor > 0.0)) throw Error("scale factor must be positive");
  if (factor == 1.0) return plan;
  plan.n = static_cast<std::size_t>(std::max(3.0, std::round(static_cast<double>(plan.n) / factor)));
  for (int& nmax : plan.n_max) {
    const double s = std::round(nmax / factor);
    nmax = static_cast<int>(std::clamp(s, static_cast<double>(plan.n_min),
                                       static_cast<double>(plan.n)));
  }
  return plan;
}

const std::vector<ExperimentPlan>& builtin_plans() {
  static const std::vector<ExperimentPlan> plans = [] {
    using enum BasicModel;
    std::vector<ExperimentPlan> v;

    ExperimentPlan basic;
    basic.name = "basic-models";
    basic.description = "CM, BA and EV seed networks before rewiring (n=5000, <k>=30)";
    basic.family = ModelFamily::kBasic;
    basic.models = {kCM, kBA, kEV};
    basic.n = 5000;
    basic.mean_degree = {30};
    basic.k_max = {90};
    basic.replicates = 25;
    v.push_back(basic);

    ExperimentPlan left;
    left.name = "fig1-left";
    left.description = "transitivity vs mu for LFR-CM/BA/EV (n=5000, <k>=30, n_max=700)";
    left.family = ModelFamily::kLfr;
    left.models = {kCM, kBA, kEV};
    left.n = 5000;
    left.mean_degree = {30};
    left.k_max = {90};
    left.n_max = {700};
    left.mu = mu_grid();
    left.replicates = 25;
    v.push_back(left);

    ExperimentPlan left15 = left;
    left15.name = "fig1-left-k15";
    left15.description = "fig1-left with <k>=15, k_max=45";
    left15.mean_degree = {15};
    left15.k_max = {45};
    v.push_back(left15);

    ExperimentPlan right;
    right.name = "fig1-right";
    right.description = "transitivity vs mu for LFR-CM, n_max in {200,300,600} (n=1000, <k>=15)";
    right.family = ModelFamily::kLfr;
    right.models = {kCM};
    right.n = 1000;
    right.mean_degree = {15};
    right.k_max = {45};
    right.n_max = {200, 300, 600};
    right.mu = mu_grid();
    right.replicates = 25;
    v.push_back(right);

    ExperimentPlan nm;
    nm.name = "fig2";
    nm.description = "NM modularity and transitivity vs tau (n=1000, <k> in {5,10})";
    nm.family = ModelFamily::kNm;
    nm.n = 1000;
    nm.mean_degree = {5, 10};
    nm.k_max = {45, 45};
    nm.tau = tau_grid();
    nm.detectors = {"louvain", "infomap"};
    nm.replicates = 6;
    v.push_back(nm);

    ExperimentPlan ht;
    ht.name = "ht-table";
    ht.description = "HT transitivity and detected modularity (n=5000, <k> in {5,15,30})";
    ht.family = ModelFamily::kHt;
    ht.n = 5000;
    ht.mean_degree = {5, 15, 30};
    ht.k_max = {45, 45, 90};
    ht.detectors = {"louvain", "infomap"};
    ht.replicates = 25;
    v.push_back(ht);

    for (auto& p : v) p.output = p.name + ".csv";
    return v;
  }();
  return plans;
}

std::optional<ExperimentPlan> find_builtin_plan(std::string_view name) {
  for (const auto& p : builtin_plans()) {
    if (p.name == name) return p;
  }
  return std::nullopt;
}

namespace {

using nlohmann::json;

template <typename T>
void read_field(const json& j, const char* key, T& out) {
  if (!j.contains(key)) return;
  try {
    out = j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw Error(std::string("plan field '") + key + "': " + e.what());
  }
}

}  // namespace

ExperimentPlan parse_plan_json(std::istream& in) {
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(std::string("plan is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw Error("plan must be a JSON object");
  static const char* known[] = {"name",   "description", "family",    "models", "n",
                                "gamma",  "beta",        "n_min",     "mean_degree",
                                "k_max",  "n_max",       "mu",        "tau",    "p_closure",
                                "detectors", "replicates", "seed",    "output"};
  for (const auto& [key, value] : j.items()) {
    if (std::find_if(std::begin(known), std::end(known),
                     [&](const char* k) { return key == k; }) == std::end(known)) {
      throw Error("unknown plan field '" + key + "'");
    }
  }

  ExperimentPlan plan;
  std::string family = "lfr";
  std::vector<std::string> models{"CM"};
  read_field(j, "name", plan.name);
  read_field(j, "description", plan.description);
  read_field(j, "family", family);
  read_field(j, "models", models);
  read_field(j, "n", plan.n);
  read_field(j, "gamma", plan.gamma);
  read_field(j, "beta", plan.beta);
  read_field(j, "n_min", plan.n_min);
  read_field(j, "mean_degree", plan.mean_degree);
  read_field(j, "k_max", plan.k_max);
  read_field(j, "n_max", plan.n_max);
  read_field(j, "mu", plan.mu);
  read_field(j, "tau", plan.tau);
  read_field(j, "p_closure", plan.p_closure);
  read_field(j, "detectors", plan.detectors);
  read_field(j, "replicates", plan.replicates);
  read_field(j, "seed", plan.base_seed);
  read_field(j, "output", plan.output);
  plan.family = parse_model_family(family);
  plan.models.clear();
  for (const auto& m : models) plan.models.push_back(parse_basic_model(m));
  if (plan.output.empty()) plan.output = plan.name + ".csv";
  plan.validate();
  return plan;
}

ExperimentPlan load_plan_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open plan file " + path);
  return parse_plan_json(in);
}

std::string plan_to_json(const ExperimentPlan& plan) {
  json j;
  j["name"] = plan.name;
  j["description"] = plan.description;
  j["family"] = std::string(to_string(plan.family));
  std::vector<std::string> models;
  for (BasicModel m : plan.models) models.emplace_back(to_string(m));
  j["models"] = models;
  j["n"] = plan.n;
  j["gamma"] = plan.gamma;
  j["beta"] = plan.beta;
  j["n_min"] = plan.n_min;
  j["mean_degree"] = plan.mean_degree;
  j["k_max"] = plan.k_max;
  j["n_max"] = plan.n_max;
  j["mu"] = plan.mu;
  j["tau"] = plan.tau;
  j["p_closure"] = plan.p_closure;
  j["detectors"] = plan.detectors;
  j["replicates"] = plan.replicates;
  j["seed"] = plan.base_seed;
  j["output"] = plan.output;
  return j.dump(2);
}

}  // namespace transilab
