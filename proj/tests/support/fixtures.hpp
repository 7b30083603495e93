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


#ifndef TRANSILAB_TESTS_FIXTURES_HPP_
#define TRANSILAB_TESTS_FIXTURES_HPP_

#include <vector>

#include "oracles.hpp"
#include "transilab/graph.hpp"
#include "transilab/partition.hpp"

namespace fixtures {

using transilab::Graph;

// Triangles {0,1,2} and {3,4,5} joined by the edge 2-3.
inline Graph two_triangles_bridge() {
  return oracle::from_edges(6, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}, {3, 5}, {4, 5}});
}

inline transilab::Partition two_triangles_split() {
  const std::vector<std::uint32_t> labels{0, 0, 0, 1, 1, 1};
  return transilab::Partition(labels);
}

inline Graph complete(std::size_t n) {
  Graph g(n);
  for (transilab::NodeId u = 0; u < n; ++u) {
    for (transilab::NodeId v = u + 1; v < n; ++v) g.add_edge(u, v);
  }
  return g;
}

inline Graph star(std::size_t leaves) {
  Graph g(leaves + 1);
  for (transilab::NodeId v = 1; v <= leaves; ++v) g.add_edge(0, v);
  return g;
}

inline Graph path(std::size_t n) {
  Graph g(n);
  for (transilab::NodeId v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

inline Graph ring(std::size_t n) {
  Graph g = path(n);
  g.add_edge(static_cast<transilab::NodeId>(n - 1), 0);
  return g;
}

// `count` disjoint cliques of `size` nodes, clique c on nodes c*size.. .
inline Graph disjoint_cliques(std::size_t count, std::size_t size) {
  Graph g(count * size);
  for (std::size_t c = 0; c < count; ++c) {
    const auto base = static_cast<transilab::NodeId>(c * size);
    for (transilab::NodeId u = 0; u < size; ++u) {
      for (transilab::NodeId v = u + 1; v < size; ++v) g.add_edge(base + u, base + v);
    }
  }
  return g;
}

// Two K4s {0..3} and {4..7} closed into a ring by the edges 3-4 and 7-0.
inline Graph bridged_k4_ring() {
  Graph g = disjoint_cliques(2, 4);
  g.add_edge(3, 4);
  g.add_edge(7, 0);
  return g;
}

inline Graph complete_bipartite(std::size_t a, std::size_t b) {
  Graph g(a + b);
  for (transilab::NodeId u = 0; u < a; ++u) {
    for (transilab::NodeId v = 0; v < b; ++v) g.add_edge(u, static_cast<transilab::NodeId>(a + v));
  }
  return g;
}

}  // namespace fixtures

#endif  // TRANSILAB_TESTS_FIXTURES_HPP_
