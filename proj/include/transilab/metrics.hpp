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

#ifndef TRANSILAB_METRICS_HPP_
#define TRANSILAB_METRICS_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "transilab/graph.hpp"
#include "transilab/partition.hpp"

namespace transilab {

struct TriadCensus {
  std::uint64_t triangles = 0;
  // Paths of length two counted at their center: sum_v C(k_v, 2).
  std::uint64_t connected_triples = 0;

  // Node sets spanning exactly two edges.
  std::uint64_t open_triads() const { return connected_triples - 3 * triangles; }
};

TriadCensus triad_census(const Graph& g);

// Triangles through each node.
std::vector<std::uint64_t> triangles_per_node(const Graph& g);

// 3 * triangles / connected triples; 0 when there is no connected triple.
double global_transitivity(const Graph& g);

// Triangles over node sets with at least two edges, i.e. the ratio obtained by
// counting each triad once regardless of its center. Kept for comparison with
// global_transitivity, which is the measure reported everywhere else.
double literal_triad_ratio(const Graph& g);

enum class LowDegreePolicy {
  // Nodes with degree < 2 contribute C_v = 0 to the average.
  kCountAsZero,
  // Nodes with degree < 2 are left out of the average.
  kExclude,
};

double local_clustering(const Graph& g, NodeId v);
double avg_local_clustering(const Graph& g,
                            LowDegreePolicy policy = LowDegreePolicy::kCountAsZero);

// Fractions of edge endpoints between communities.
struct CommunityLinkMatrix {
  // Symmetric. e[i][i] is the fraction of edges inside i, e[i][j] the fraction
  // joining i and j; the diagonal plus upper triangle sums to 1.
  std::vector<std::vector<double>> e;
  // a[i] = e[i][i] + sum_{j != i} e[i][j] / 2 = d_i / 2m.
  std::vector<double> a;
};

CommunityLinkMatrix community_link_matrix(const Graph& g, const Partition& p);

// Q = sum_c [ l_c / m - (d_c / 2m)^2 ]. Throws Error for an edgeless graph or
// a partition of the wrong size.
double modularity(const Graph& g, const Partition& p);

// Mean over non-isolated nodes of the fraction of incident edges leaving the
// node's community. `skipped`, when given, receives the isolated-node count.
double mixing_coefficient(const Graph& g, const Partition& p, std::size_t* skipped = nullptr);

}  // namespace transilab

#endif  // TRANSILAB_METRICS_HPP_
