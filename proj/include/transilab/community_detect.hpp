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

#ifndef TRANSILAB_COMMUNITY_DETECT_HPP_
#define TRANSILAB_COMMUNITY_DETECT_HPP_

#include <functional>
#include <span>

#include "transilab/graph.hpp"
#include "transilab/partition.hpp"
#include "transilab/random.hpp"

namespace transilab {

struct DetectionResult {
  Partition partition;
  // Modularity for Louvain; description length in bits for the map-equation
  // optimizer.
  double objective = 0.0;
  // Aggregation levels processed.
  int passes = 0;
};

// Called after every accepted local move with the objective value tracked
// incrementally and the current partition of the original nodes.
using MoveObserver = std::function<void(double objective, std::span<const CommunityId> flat)>;

struct LouvainOptions {
  MoveObserver on_move;
};

// Multilevel greedy modularity maximization. Node order is shuffled per pass;
// ties between target communities go to the lowest community id.
DetectionResult louvain(const Graph& g, const Seed& seed, const LouvainOptions& options = {});

// Two-level map equation of an undirected unweighted graph, in bits, with node
// visit rates k/2m and module exit rates cut/2m. Throws Error for a
// disconnected or edgeless graph.
double map_equation(const Graph& g, const Partition& p);

struct InfomapOptions {
  int restarts = 3;
  MoveObserver on_move;
};

// Louvain-style local moving and aggregation minimizing the map equation.
// Keeps the best of `restarts` seeded runs and the one-module solution.
// Throws Error for a disconnected graph.
DetectionResult infomap_greedy(const Graph& g, const Seed& seed,
                               const InfomapOptions& options = {});

}  // namespace transilab

#endif  // TRANSILAB_COMMUNITY_DETECT_HPP_
