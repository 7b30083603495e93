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

#ifndef TRANSILAB_GRAPH_HPP_
#define TRANSILAB_GRAPH_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace transilab {

using NodeId = std::uint32_t;

struct Edge {
  NodeId u = 0;
  NodeId v = 0;

  friend constexpr bool operator==(const Edge&, const Edge&) = default;
  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

// Undirected simple graph over dense node ids 0..n-1.
//
// Adjacency lists are unordered. Every mutator keeps the graph simple and the
// adjacency symmetric; attempts to add a loop or a parallel edge are refused.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t num_nodes) : adj_(num_nodes) {}

  std::size_t num_nodes() const { return adj_.size(); }
  std::size_t num_edges() const { return num_edges_; }

  std::size_t degree(NodeId v) const { return adj_[v].size(); }
  std::span<const NodeId> neighbors(NodeId v) const { return adj_[v]; }

  bool has_edge(NodeId u, NodeId v) const;

  // Returns false (and leaves the graph unchanged) for loops and duplicates.
  // Throws Error for out-of-range endpoints.
  bool add_edge(NodeId u, NodeId v);

  // Throws Error if the edge is absent.
  void remove_edge(NodeId u, NodeId v);

  // Adds isolated nodes at the end; returns the id of the first new node.
  NodeId add_nodes(std::size_t count);

  // All edges with u < v, sorted.
  std::vector<Edge> edges() const;
  std::vector<std::uint32_t> degrees() const;

  // Full check of the simple-graph invariants: symmetry, no loops, no
  // duplicates, cached edge count.
  bool is_valid() const;

 private:
  void check_node(NodeId v) const;

  std::vector<std::vector<NodeId>> adj_;
  std::size_t num_edges_ = 0;
};

enum class SwapOrientation {
  // {u,v},{x,y} -> {u,x},{v,y}
  kCross,
  // {u,v},{x,y} -> {u,y},{v,x}
  kTwist,
};

// Degree-preserving rewiring move. Returns false and leaves the graph
// untouched when the endpoints are not four distinct nodes or the result would
// not be simple. Throws Error when either edge is absent.
bool double_edge_swap(Graph& g, Edge a, Edge b, SwapOrientation orientation);

// Connected components as a node -> component id map (ids by discovery order).
std::vector<std::uint32_t> connected_components(const Graph& g);
bool is_connected(const Graph& g);

// Induced subgraph on the largest connected component. `original_ids[i]` is
// the id in `g` of node i of the returned graph.
struct Subgraph {
  Graph graph;
  std::vector<NodeId> original_ids;
};
Subgraph largest_component(const Graph& g);

}  // namespace transilab

#endif  // TRANSILAB_GRAPH_HPP_
