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

#include "transilab/graph.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "transilab/error.hpp"

namespace transilab {

void Graph::check_node(NodeId v) const {
  if (v >= adj_.size()) {
    throw Error("node " + std::to_string(v) + " out of range (n=" +
                std::to_string(adj_.size()) + ")");
  }
}

bool Graph::has_edge(NodeId u, NodeId v) const {
  if (u >= adj_.size() || v >= adj_.size()) return false;
  const auto& a = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
  const NodeId target = adj_[u].size() <= adj_[v].size() ? v : u;
  return std::find(a.begin(), a.end(), target) != a.end();
}

bool Graph::add_edge(NodeId u, NodeId v) {
  check_node(u);
  check_node(v);
  if (u == v || has_edge(u, v)) return false;
  adj_[u].push_back(v);
  adj_[v].push_back(u);
  ++num_edges_;
  return true;
}

namespace {

void erase_one(std::vector<NodeId>& list, NodeId value) {
  auto it = std::find(list.begin(), list.end(), value);
  *it = list.back();
  list.pop_back();
}

}  // namespace

void Graph::remove_edge(NodeId u, NodeId v) {
  if (!has_edge(u, v)) {
    throw Error("edge {" + std::to_string(u) + "," + std::to_string(v) +
                "} not present");
  }
  erase_one(adj_[u], v);
  erase_one(adj_[v], u);
  --num_edges_;
}

NodeId Graph::add_nodes(std::size_t count) {
  const auto first = static_cast<NodeId>(adj_.size());
  adj_.resize(adj_.size() + count);
  return first;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges_);
  for (NodeId u = 0; u < adj_.size(); ++u) {
    for (NodeId v : adj_[u]) {
      if (u < v) out.push_back({u, v});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::uint32_t> Graph::degrees() const {
  std::vector<std::uint32_t> out(adj_.size());
  for (std::size_t v = 0; v < adj_.size(); ++v) {
    out[v] = static_cast<std::uint32_t>(adj_[v].size());
  }
  return out;
}

bool Graph::is_valid() const {
  std::size_t degree_sum = 0;
  for (NodeId u = 0; u < adj_.size(); ++u) {
    std::vector<NodeId> sorted = adj_[u];
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    for (NodeId v : sorted) {
      if (v == u || v >= adj_.size()) return false;
      const auto& back = adj_[v];
      if (std::find(back.begin(), back.end(), u) == back.end()) return false;
    }
    degree_sum += sorted.size();
  }
  return degree_sum == 2 * num_edges_;
}

bool double_edge_swap(Graph& g, Edge a, Edge b, SwapOrientation orientation) {
  if (!g.has_edge(a.u, a.v)) {
    throw Error("edge {" + std::to_string(a.u) + "," + std::to_string(a.v) +
                "} not present");
  }
  if (!g.has_edge(b.u, b.v)) {
    throw Error("edge {" + std::to_string(b.u) + "," + std::to_string(b.v) +
                "} not present");
  }
  const NodeId u = a.u, v = a.v;
  const NodeId x = orientation == SwapOrientation::kCross ? b.u : b.v;
  const NodeId y = orientation == SwapOrientation::kCross ? b.v : b.u;
  if (u == x || u == y || v == x || v == y) return false;
  if (g.has_edge(u, x) || g.has_edge(v, y)) return false;
  g.remove_edge(u, v);
  g.remove_edge(b.u, b.v);
  g.add_edge(u, x);
  g.add_edge(v, y);
  return true;
}

std::vector<std::uint32_t> connected_components(const Graph& g) {
  constexpr auto kUnseen = static_cast<std::uint32_t>(-1);
  std::vector<std::uint32_t> comp(g.num_nodes(), kUnseen);
  std::uint32_t next = 0;
  std::vector<NodeId> stack;
  for (NodeId s = 0; s < g.num_nodes(); ++s) {
    if (comp[s] != kUnseen) continue;
    comp[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      const NodeId u = stack.back();
      stack.pop_back();
      for (NodeId v : g.neighbors(u)) {
        if (comp[v] == kUnseen) {
          comp[v] = next;
          stack.push_back(v);
        }
      }
    }
    ++next;
  }
  return comp;
}

bool is_connected(const Graph& g) {
  if (g.num_nodes() == 0) return true;
  const auto comp = connected_components(g);
  return std::all_of(comp.begin(), comp.end(), [](std::uint32_t c) { return c == 0; });
}

Subgraph largest_component(const Graph& g) {
  const auto comp = connected_components(g);
  std::vector<std::size_t> sizes;
  for (auto c : comp) {
    if (c >= sizes.size()) sizes.resize(c + 1, 0);
    ++sizes[c];
  }
  Subgraph out;
  if (sizes.empty()) return out;
  const auto best = static_cast<std::uint32_t>(
      std::max_element(sizes.begin(), sizes.end()) - sizes.begin());
  std::vector<NodeId> local(g.num_nodes(), 0);
  for (NodeId v = 0; v < g.num_nodes(); ++v) {
    if (comp[v] == best) {
      local[v] = static_cast<NodeId>(out.original_ids.size());
      out.original_ids.push_back(v);
    }
  }
  out.graph = Graph(out.original_ids.size());
  for (NodeId v : out.original_ids) {
    for (NodeId w : g.neighbors(v)) {
      if (v < w) out.graph.add_edge(local[v], local[w]);
    }
  }
  return out;
}

}  // namespace transilab
