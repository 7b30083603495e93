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

#ifndef TRANSILAB_LFR_HPP_
#define TRANSILAB_LFR_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "transilab/degree_sequence.hpp"
#include "transilab/graph.hpp"
#include "transilab/partition.hpp"
#include "transilab/random.hpp"
#include "transilab/random_models.hpp"

namespace transilab {

enum class BasicModel { kCM, kBA, kEV };

std::string_view to_string(BasicModel model);
// Accepts "CM", "BA", "EV" (case-insensitive). Throws Error otherwise.
BasicModel parse_basic_model(std::string_view name);

// Seed network of the LFR pipeline. CM samples a power-law degree sequence
// (exponent gamma, mean mean_degree, max k_max); BA and EV use
// m = round(mean_degree / 2) links per arriving node and ignore gamma/k_max.
struct BasicModelParams {
  BasicModel model = BasicModel::kCM;
  std::size_t n = 1000;
  double gamma = 3.0;
  double mean_degree = 15.0;
  int k_max = 45;
  // Dynamics parameters for EV; n and m are filled in from the fields above.
  EvParams ev;
};

Graph generate_basic_model(const BasicModelParams& params, const Seed& seed);

struct LfrParams {
  std::size_t n = 1000;
  double gamma = 3.0;
  double beta = 2.0;
  double mean_degree = 15.0;
  int k_max = 45;
  // Smallest community size. The pipeline raises it to (min degree + 1) when
  // the seed network's smallest node would not fit.
  int n_min = 10;
  int n_max = 200;
  double mu = 0.1;
  BasicModel basic_model = BasicModel::kCM;
  double mu_tolerance = 0.02;
  int max_sweeps = 500;
  EvParams ev;

  void validate() const;
};

// Community sizes in [n_min, n_max] from P(s) ∝ s^-beta, summing to n exactly.
// Draws until the total reaches n, then shrinks the last community; if that
// leaves it below n_min it is merged into the smallest other community.
std::vector<std::size_t> sample_community_sizes(std::size_t n, double beta, int n_min,
                                                int n_max, const Seed& seed);

// Internal-degree target of a node of degree k: round((1 - mu) * k).
std::uint32_t internal_degree_target(std::uint32_t k, double mu);

enum class OversizedNodePolicy {
  // Fail when a node's internal target cannot fit in any community with room.
  kError,
  // Place such nodes in the largest community that still has room; their
  // internal target is then capped at size - 1 during rewiring.
  kClampToLargest,
};

// Places every node in a community of size s with internal_degree_target <= s-1,
// filling each community to exactly its size. Community ids follow `sizes`.
// Throws Error naming the offending node and degree when impossible.
Partition assign_communities(std::span<const std::uint32_t> degrees,
                             std::span<const std::size_t> sizes, double mu, const Seed& seed,
                             OversizedNodePolicy policy = OversizedNodePolicy::kError);

struct RewireResult {
  Graph graph;
  // mixing_coefficient of the returned graph under the given partition.
  double achieved_mu = 0.0;
  // Remaining sum over nodes of |external - target external|.
  std::uint64_t residual_deficit = 0;
  std::uint64_t initial_deficit = 0;
  int sweeps = 0;
  std::uint64_t swaps = 0;
  bool within_tolerance = false;
};

// Degree-preserving double-edge-swap search driving every node's external
// degree towards k_i - internal_degree_target(k_i, mu) (capped by community
// size). Only swaps that lower the total L1 deficit are applied, plus 1% of
// the proposals that leave it unchanged. A sweep is num_edges proposals.
// Stops at zero deficit, after max_sweeps, or once five sweeps in a row fail
// to improve the deficit by 1%.
RewireResult rewire_to_mixing(Graph g, const Partition& p, double mu, double tolerance,
                              int max_sweeps, const Seed& seed);

struct LfrResult {
  Graph graph;
  Partition partition;
  double achieved_mu = 0.0;
  // Sorted degree list of the seed network, for checking preservation.
  std::vector<std::uint32_t> seed_degrees;
  int effective_n_min = 0;
  std::uint64_t residual_deficit = 0;
  int sweeps = 0;
  bool within_tolerance = false;
};

LfrResult lfr_generate(const LfrParams& params, const Seed& seed);

}  // namespace transilab

#endif  // TRANSILAB_LFR_HPP_
