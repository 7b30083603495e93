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


#ifndef TRANSILAB_HARNESS_HPP_
#define TRANSILAB_HARNESS_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "transilab/lfr.hpp"
#include "transilab/random.hpp"

namespace transilab {

enum class ModelFamily { kBasic, kLfr, kNm, kHt };

std::string_view to_string(ModelFamily family);
ModelFamily parse_model_family(std::string_view name);

// A declarative sweep. Grid axes that do not apply to the family are ignored;
// `k_max` runs parallel to `mean_degree`.
struct ExperimentPlan {
  std::string name;
  std::string description;
  ModelFamily family = ModelFamily::kLfr;
  std::vector<BasicModel> models{BasicModel::kCM};
  std::size_t n = 1000;
  double gamma = 3.0;
  double beta = 2.0;
  int n_min = 10;
  std::vector<double> mean_degree{15.0};
  std::vector<int> k_max{45};
  std::vector<int> n_max{200};
  std::vector<double> mu{0.1};
  std::vector<double> tau{0.0};
  double p_closure = 0.9;
  std::vector<std::string> detectors;
  int replicates = 1;
  std::uint64_t base_seed = 1;
  std::string output;

  void validate() const;
};

// One parameter combination of a plan.
struct GridPoint {
  BasicModel model = BasicModel::kCM;
  double mean_degree = 0.0;
  int k_max = 0;
  std::optional<int> n_max;
  std::optional<double> mu;
  std::optional<double> tau;

  // Stable text identifying the point within its plan; seeds hash it.
  std::string key(const ExperimentPlan& plan) const;
};

std::vector<GridPoint> expand_grid(const ExperimentPlan& plan);

// base XOR hash(key), with the replicate index as the stream's replicate.
Seed replicate_seed(const ExperimentPlan& plan, const GridPoint& point, int replicate);

// One CSV row. Empty optionals are written as empty fields.
struct MetricRecord {
  std::string experiment;
  std::string model;
  std::size_t n = 0;
  std::optional<double> gamma;
  std::optional<double> beta;
  std::optional<double> mean_degree_target;
  std::optional<double> mean_degree_achieved;
  std::optional<int> k_max;
  std::optional<int> n_max;
  std::optional<double> mu_target;
  std::optional<double> mu_achieved;
  std::optional<double> tau;
  int replicate = 0;
  std::uint64_t seed = 0;
  std::optional<double> transitivity_global;
  std::optional<double> transitivity_local_avg;
  std::optional<double> transitivity_literal_ratio;
  std::optional<double> modularity_true;
  std::optional<double> modularity_louvain;
  std::optional<double> modularity_infomap;
  std::optional<std::size_t> n_communities_true;
  std::optional<std::size_t> n_communities_louvain;
  std::optional<std::size_t> n_communities_infomap;
  std::optional<double> dropped_node_fraction;
  double runtime_ms = 0.0;
  std::string error;
};

const std::vector<std::string>& metric_record_columns();
void write_csv_header(std::ostream& out);
void write_csv_row(std::ostream& out, const MetricRecord& record);

// Reals are written with six significant digits.
std::string format_real(double value);

struct RunOptions {
  // Worker threads; 0 picks the hardware concurrency capped by the
  // TRANSILAB_THREADS environment variable.
  unsigned threads = 0;
  // Called after each finished task with (done, total).
  std::function<void(std::size_t, std::size_t)> on_progress;
};

unsigned default_thread_count();

// Generates, measures and detects one replicate of one grid point. Failures
// are reported in the record's error field.
MetricRecord run_replicate(const ExperimentPlan& plan, const GridPoint& point, int replicate);

// All rows of the plan, ordered by grid point then replicate.
std::vector<MetricRecord> run_experiment(const ExperimentPlan& plan,
                                         const RunOptions& options = {});

void write_csv(std::ostream& out, const std::vector<MetricRecord>& records);

// Divides n and every n_max by `factor` (n_max never below n_min).
ExperimentPlan scaled(ExperimentPlan plan, double factor);

const std::vector<ExperimentPlan>& builtin_plans();
std::optional<ExperimentPlan> find_builtin_plan(std::string_view name);

ExperimentPlan parse_plan_json(std::istream& in);
ExperimentPlan load_plan_file(const std::string& path);
std::string plan_to_json(const ExperimentPlan& plan);

}  // namespace transilab

#endif  // TRANSILAB_HARNESS_HPP_
