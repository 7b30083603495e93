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

#include "transilab/metrics.hpp"

#include <string>

#include "transilab/error.hpp"

namespace transilab {
namespace {

// Node-iterator triangle enumeration over a degree ordering: every triangle is
// visited exactly once, from its lowest-ranked corner.
template <typename Visit>
void for_each_triangle(const Graph& g, Visit&& visit) {
  const std::size_t n = g.num_nodes();
  auto ranks_below = [&g](NodeId a, NodeId b) {
    const auto da = g.degree(a), db = g.degree(b);
    return da < db || (da == db && a < b);
  };
  std::vector<std::vector<NodeId>> forward(n);
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v : g.neighbors(u)) {
      if (ranks_below(u, v)) forward[u].push_back(v);
    }
  }
  std::vector<NodeId> mark(n, static_cast<NodeId>(-1));
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v : forward[u]) mark[v] = u;
    for (NodeId v : forward[u]) {
      for (NodeId w : forward[v]) {
        if (mark[w] == u) visit(u, v, w);
      }
    }
  }
}

std::uint64_t pairs(std::uint64_t k) { return k * (k - (k > 0 ? 1 : 0)) / 2; }

void check_cover(const Graph& g, const Partition& p) {
  if (p.num_nodes() != g.num_nodes()) {
    throw Error("partition covers " + std::to_string(p.num_nodes()) + " nodes, graph has " +
                std::to_string(g.num_nodes()));
  }
}

}  // namespace

TriadCensus triad_census(const Graph& g) {
  TriadCensus census;
  for_each_triangle(g, [&](NodeId, NodeId, NodeId) { ++census.triangles; });
  for (NodeId v = 0; v < g.num_nodes(); ++v) census.connected_triples += pairs(g.degree(v));
  return census;
}

std::vector<std::uint64_t> triangles_per_node(const Graph& g) {
  std::vector<std::uint64_t> count(g.num_nodes(), 0);
  for_each_triangle(g, [&](NodeId a, NodeId b, NodeId c) {
    ++count[a];
    ++count[b];
    ++count[c];
  });
  return count;
}

double global_transitivity(const Graph& g) {
  const TriadCensus c = triad_census(g);
  if (c.connected_triples == 0) return 0.0;
  return 3.0 * static_cast<double>(c.triangles) / static_cast<double>(c.connected_triples);
}

double literal_triad_ratio(const Graph& g) {
  const TriadCensus c = triad_census(g);
  const std::uint64_t triads = c.open_triads() + c.triangles;
  if (triads == 0) return 0.0;
  return static_cast<double>(c.triangles) / static_cast<double>(triads);
}

double local_clustering(const Graph& g, NodeId v) {
  const std::size_t k = g.degree(v);
  if (k < 2) return 0.0;
  std::vector<char> is_neighbor(g.num_nodes(), 0);
  for (NodeId w : g.neighbors(v)) is_neighbor[w] = 1;
  std::uint64_t links = 0;
  for (NodeId w : g.neighbors(v)) {
    for (NodeId x : g.neighbors(w)) links += is_neighbor[x];
  }
  return static_cast<double>(links / 2) / static_cast<double>(pairs(k));
}

double avg_local_clustering(const Graph& g, LowDegreePolicy policy) {
  const auto tri = triangles_per_node(g);
  double sum = 0.0;
  std::size_t counted = 0;
  for (NodeId v = 0; v < g.num_nodes(); ++v) {
    const std::size_t k = g.degree(v);
    if (k < 2) {
      if (policy == LowDegreePolicy::kCountAsZero) ++counted;
      continue;
    }
    sum += static_cast<double>(tri[v]) / static_cast<double>(pairs(k));
    ++counted;
  }
  return counted == 0 ? 0.0 : sum / static_cast<double>(counted);
}

CommunityLinkMatrix community_link_matrix(const Graph& g, const Partition& p) {
  check_cover(g, p);
  const std::size_t c = p.num_communities();
  CommunityLinkMatrix out;
  out.e.assign(c, std::vector<double>(c, 0.0));
  out.a.assign(c, 0.0);
  const double m = static_cast<double>(g.num_edges());
  if (m == 0) return out;
  for (const Edge& edge : g.edges()) {
    const auto a = p.community(edge.u), b = p.community(edge.v);
    if (a == b) {
      out.e[a][a] += 1.0 / m;
    } else {
      out.e[a][b] += 1.0 / m;
      out.e[b][a] += 1.0 / m;
    }
  }
  for (std::size_t i = 0; i < c; ++i) {
    for (std::size_t j = 0; j < c; ++j) out.a[i] += i == j ? out.e[i][j] : 0.5 * out.e[i][j];
  }
  return out;
}

double modularity(const Graph& g, const Partition& p) {
  check_cover(g, p);
  if (g.num_edges() == 0) throw Error("modularity is undefined for a graph without edges");
  const std::size_t c = p.num_communities();
  std::vector<std::uint64_t> internal(c, 0), degree_sum(c, 0);
  for (NodeId u = 0; u < g.num_nodes(); ++u) {
    const auto cu = p.community(u);
    degree_sum[cu] += g.degree(u);
    for (NodeId v : g.neighbors(u)) {
      if (u < v && p.community(v) == cu) ++internal[cu];
    }
  }
  const double m = static_cast<double>(g.num_edges());
  double q = 0.0;
  for (std::size_t i = 0; i < c; ++i) {
    const double share = static_cast<double>(degree_sum[i]) / (2.0 * m);
    q += static_cast<double>(internal[i]) / m - share * share;
  }
  return q;
}

double mixing_coefficient(const Graph& g, const Partition& p, std::size_t* skipped) {
  check_cover(g, p);
  double sum = 0.0;
  std::size_t counted = 0, isolated = 0;
  for (NodeId u = 0; u < g.num_nodes(); ++u) {
    const std::size_t k = g.degree(u);
    if (k == 0) {
      ++isolated;
      continue;
    }
    std::size_t external = 0;
    for (NodeId v : g.neighbors(u)) external += p.community(v) != p.community(u);
    sum += static_cast<double>(external) / static_cast<double>(k);
    ++counted;
  }
  if (skipped) *skipped = isolated;
  return counted == 0 ? 0.0 : sum / static_cast<double>(counted);
}

}  // namespace transilab
