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


// Brute-force reference implementations used by the unit and acceptance
// tests. Everything here works on dense adjacency matrices and direct
// definitions, sharing no code with the library beyond the Graph type.

#ifndef TRANSILAB_TESTS_ORACLES_HPP_
#define TRANSILAB_TESTS_ORACLES_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <vector>

#include "transilab/graph.hpp"

namespace oracle {

using Matrix = std::vector<std::vector<bool>>;
using Labels = std::vector<std::uint32_t>;

inline Matrix to_matrix(const transilab::Graph& g) {
  const std::size_t n = g.num_nodes();
  Matrix a(n, std::vector<bool>(n, false));
  for (transilab::NodeId u = 0; u < n; ++u) {
    for (transilab::NodeId v : g.neighbors(u)) a[u][v] = true;
  }
  return a;
}

inline std::size_t degree(const Matrix& a, std::size_t v) {
  std::size_t k = 0;
  for (bool b : a[v]) k += b;
  return k;
}

inline std::size_t edge_count(const Matrix& a) {
  std::size_t m = 0;
  for (std::size_t u = 0; u < a.size(); ++u) {
    for (std::size_t v = u + 1; v < a.size(); ++v) m += a[u][v];
  }
  return m;
}

inline transilab::Graph from_edges(std::size_t n,
                                   const std::vector<std::pair<int, int>>& edges) {
  transilab::Graph g(n);
  for (auto [u, v] : edges) {
    g.add_edge(static_cast<transilab::NodeId>(u), static_cast<transilab::NodeId>(v));
  }
  return g;
}

// G(n, p) with the test's own generator.
inline transilab::Graph gnp(std::size_t n, double p, std::mt19937& rng) {
  std::bernoulli_distribution coin(p);
  transilab::Graph g(n);
  for (transilab::NodeId u = 0; u < n; ++u) {
    for (transilab::NodeId v = u + 1; v < n; ++v) {
      if (coin(rng)) g.add_edge(u, v);
    }
  }
  return g;
}

inline bool connected(const Matrix& a) {
  if (a.empty()) return true;
  std::vector<bool> seen(a.size(), false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  while (!stack.empty()) {
    const std::size_t u = stack.back();
    stack.pop_back();
    for (std::size_t v = 0; v < a.size(); ++v) {
      if (a[u][v] && !seen[v]) {
        seen[v] = true;
        stack.push_back(v);
      }
    }
  }
  for (bool s : seen) {
    if (!s) return false;
  }
  return true;
}

inline transilab::Graph connected_gnp(std::size_t n, double p, std::mt19937& rng) {
  for (;;) {
    transilab::Graph g = gnp(n, p, rng);
    if (g.num_edges() > 0 && connected(to_matrix(g))) return g;
  }
}

// Unordered node triples with all three edges.
inline std::uint64_t triangles(const Matrix& a) {
  std::uint64_t t = 0;
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) t += a[i][j] && a[j][k] && a[i][k];
    }
  }
  return t;
}

// Paths i-c-j counted at their center c.
inline std::uint64_t connected_triples(const Matrix& a) {
  std::uint64_t t = 0;
  const std::size_t n = a.size();
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) t += a[c][i] && a[c][j];
    }
  }
  return t;
}

// Node sets with exactly two edges among them.
inline std::uint64_t open_triads(const Matrix& a) {
  std::uint64_t t = 0;
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) t += (a[i][j] + a[j][k] + a[i][k]) == 2;
    }
  }
  return t;
}

inline double transitivity(const Matrix& a) {
  const auto triples = connected_triples(a);
  return triples ? 3.0 * static_cast<double>(triangles(a)) / static_cast<double>(triples) : 0.0;
}

inline double local_clustering(const Matrix& a, std::size_t v) {
  std::vector<std::size_t> nb;
  for (std::size_t w = 0; w < a.size(); ++w) {
    if (a[v][w]) nb.push_back(w);
  }
  if (nb.size() < 2) return 0.0;
  std::size_t links = 0;
  for (std::size_t i = 0; i < nb.size(); ++i) {
    for (std::size_t j = i + 1; j < nb.size(); ++j) links += a[nb[i]][nb[j]];
  }
  return static_cast<double>(links) / (static_cast<double>(nb.size() * (nb.size() - 1)) / 2.0);
}

inline double avg_local_clustering(const Matrix& a, bool exclude_low_degree = false) {
  double sum = 0.0;
  std::size_t count = 0;
  for (std::size_t v = 0; v < a.size(); ++v) {
    if (exclude_low_degree && degree(a, v) < 2) continue;
    sum += local_clustering(a, v);
    ++count;
  }
  return count ? sum / static_cast<double>(count) : 0.0;
}

// Node-pair form: (1/2m) sum_ij [A_ij - k_i k_j / 2m] delta(c_i, c_j).
inline double modularity(const Matrix& a, const Labels& c) {
  const std::size_t n = a.size();
  const double two_m = 2.0 * static_cast<double>(edge_count(a));
  std::vector<double> k(n);
  for (std::size_t v = 0; v < n; ++v) k[v] = static_cast<double>(degree(a, v));
  double q = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (c[i] == c[j]) q += (a[i][j] ? 1.0 : 0.0) - k[i] * k[j] / two_m;
    }
  }
  return q / two_m;
}

inline double mixing(const Matrix& a, const Labels& c) {
  double sum = 0.0;
  std::size_t count = 0;
  for (std::size_t v = 0; v < a.size(); ++v) {
    const std::size_t k = degree(a, v);
    if (k == 0) continue;
    std::size_t ext = 0;
    for (std::size_t w = 0; w < a.size(); ++w) ext += a[v][w] && c[v] != c[w];
    sum += static_cast<double>(ext) / static_cast<double>(k);
    ++count;
  }
  return count ? sum / static_cast<double>(count) : 0.0;
}

inline double plogp(double p) { return p > 0.0 ? p * std::log2(p) : 0.0; }

// Two-level map equation with visit rates k/2m and exit rates cut/2m.
inline double map_equation(const Matrix& a, const Labels& c) {
  const std::size_t n = a.size();
  const double two_m = 2.0 * static_cast<double>(edge_count(a));
  std::map<std::uint32_t, double> exit, visit;
  for (std::size_t v = 0; v < n; ++v) {
    visit[c[v]] += static_cast<double>(degree(a, v)) / two_m;
    exit[c[v]] += 0.0;
    for (std::size_t w = 0; w < n; ++w) {
      if (a[v][w] && c[v] != c[w]) exit[c[v]] += 1.0 / two_m;
    }
  }
  double q = 0.0;
  for (auto& [id, e] : exit) q += e;
  double length = plogp(q);
  for (auto& [id, e] : exit) length -= 2.0 * plogp(e);
  for (std::size_t v = 0; v < n; ++v) length -= plogp(static_cast<double>(degree(a, v)) / two_m);
  for (auto& [id, e] : exit) length += plogp(e + visit[id]);
  return length;
}

// Calls visit(labels) for every set partition of n nodes (restricted growth
// strings), n >= 1.
inline void for_each_partition(std::size_t n, const std::function<void(const Labels&)>& visit) {
  Labels labels(n, 0);
  std::vector<std::uint32_t> max_prefix(n, 0);
  for (;;) {
    visit(labels);
    std::size_t i = n - 1;
    while (i > 0 && labels[i] == max_prefix[i - 1] + 1) --i;
    if (i == 0) return;
    ++labels[i];
    for (std::size_t j = i; j < n; ++j) {
      if (j > i) labels[j] = 0;
      max_prefix[j] = std::max(j ? max_prefix[j - 1] : 0u, labels[j]);
    }
  }
}

inline double best_modularity(const Matrix& a) {
  double best = -1.0;
  for_each_partition(a.size(), [&](const Labels& c) { best = std::max(best, modularity(a, c)); });
  return best;
}

inline double best_map_equation(const Matrix& a) {
  double best = 1e300;
  for_each_partition(a.size(), [&](const Labels& c) { best = std::min(best, map_equation(a, c)); });
  return best;
}

// Degree sequences realizable by some simple graph on n nodes, as sorted
// vectors, found by enumerating every graph.
inline std::vector<std::vector<std::uint32_t>> realizable_sequences(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  }
  std::vector<std::vector<std::uint32_t>> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
    std::vector<std::uint32_t> deg(n, 0);
    for (std::size_t e = 0; e < pairs.size(); ++e) {
      if (mask >> e & 1) {
        ++deg[pairs[e].first];
        ++deg[pairs[e].second];
      }
    }
    std::sort(deg.begin(), deg.end());
    out.push_back(deg);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace oracle

#endif  // TRANSILAB_TESTS_ORACLES_HPP_
