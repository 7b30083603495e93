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

#ifndef TRANSILAB_RANDOM_MODELS_HPP_
#define TRANSILAB_RANDOM_MODELS_HPP_

#include <cstddef>
#include <cstdint>
#include <span>

#include "transilab/degree_sequence.hpp"
#include "transilab/graph.hpp"
#include "transilab/random.hpp"

namespace transilab {

struct ConfigurationModelOptions {
  // Full restarts of the stub matching before giving up.
  int max_restarts = 100;
  // Re-draws of the partner stub when a pair would form a loop or a parallel
  // edge, before the whole matching is restarted.
  int local_retries = 50;
};

// Simple graph whose degree sequence equals `degrees` exactly. Throws Error for
// an odd or non-graphical sequence, or when matching keeps failing.
Graph configuration_model(std::span<const std::uint32_t> degrees, const Seed& seed,
                          const ConfigurationModelOptions& options = {});

// Growth from a clique on m+1 nodes; each arriving node links to m distinct
// existing nodes chosen proportionally to their degree.
Graph barabasi_albert(std::size_t n, std::size_t m, const Seed& seed);

// Preferential attachment driven by prisoner's-dilemma payoffs.
struct EvParams {
  std::size_t n = 0;
  std::size_t m = 1;
  // Selection intensity: weight of payoff versus uniform attachment.
  double epsilon = 0.99;
  // Defector payoff against a cooperator (cooperators earn 1 per cooperating
  // neighbor; every other pairing pays 0).
  double temptation = 1.5;
  int rounds_per_step = 1;
  double initial_cooperator_fraction = 0.5;

  void validate() const;
};

// Starts from a clique on m+1 nodes. Before each arrival, every node plays one
// round with each neighbor and then copies the strategy of its best-scoring
// neighbor when that neighbor out-scored it. The newcomer attaches m links to
// distinct nodes drawn with probability (1-eps)/N + eps * f_i / sum_j f_j.
Graph evolutionary_pa(const EvParams& params, const Seed& seed);

}  // namespace transilab

#endif  // TRANSILAB_RANDOM_MODELS_HPP_
