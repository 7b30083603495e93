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

#ifndef TRANSILAB_CLUSTERED_MODELS_HPP_
#define TRANSILAB_CLUSTERED_MODELS_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "transilab/graph.hpp"
#include "transilab/random.hpp"

namespace transilab {

// Degree of a node split into single-link stubs and triangle corners;
// s + 2t equals the node's degree.
struct NmStubSplit {
  std::uint32_t singles = 0;
  std::uint32_t triangles = 0;

  friend constexpr bool operator==(const NmStubSplit&, const NmStubSplit&) = default;
};

// t = round_half_up(tau * k / 2), at most floor(k / 2); s = k - 2t.
NmStubSplit nm_stub_split(std::uint32_t k, double tau);

struct NmParams {
  std::size_t n = 1000;
  double gamma = 3.0;
  double mean_degree = 5.0;
  int k_max = 45;
  // Share of each degree spent on triangle corners.
  double tau = 0.0;

  void validate() const;
};

struct NmResult {
  Graph graph;
  std::vector<std::uint32_t> target_degrees;
  // Nodes that lost a triangle (two corners turned into singles) so that the
  // corner count is a multiple of three.
  std::size_t triangle_decrements = 0;
  // Single stubs added to even out the single-stub total; each one raises a
  // node's degree above its target.
  std::size_t single_increments = 0;
  int restarts = 0;
};

// Clustered random graph: corners are matched in uniformly random triples,
// each triple forming a triangle, and singles in pairs. Triangles never share
// a side. Throws Error when matching keeps failing.
NmResult nm_generate(const NmParams& params, const Seed& seed);

struct HtParams {
  std::size_t n = 5000;
  double gamma = 3.0;
  double mean_degree = 5.0;
  int k_max = 45;
  // Probability that a link closes a triangle (joins nodes at distance 2)
  // rather than going to a uniform random node.
  double p_closure = 0.9;

  void validate() const;
};

struct HtResult {
  Graph graph;
  std::vector<std::uint32_t> target_degrees;
  // Stubs left unmatched when no admissible partner remained.
  std::uint64_t shortfall = 0;
};

// Ring 0-1-...-(n-1)-0, then links between nodes with residual budget: the
// first endpoint is drawn proportionally to its budget; the second is, with
// probability p_closure, a uniform node at distance exactly 2, otherwise a
// uniform node anywhere. Connected and simple by construction.
HtResult ht_generate(const HtParams& params, const Seed& seed);

}  // namespace transilab

#endif  // TRANSILAB_CLUSTERED_MODELS_HPP_
