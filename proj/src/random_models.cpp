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

#include "transilab/random_models.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "transilab/error.hpp"

namespace transilab {
namespace {

Graph clique(std::size_t size, std::size_t total_nodes) {
  Graph g(total_nodes);
  for (NodeId u = 0; u < size; ++u) {
    for (NodeId v = u + 1; v < size; ++v) g.add_edge(u, v);
  }
  return g;
}

void check_growth(std::size_t n, std::size_t m) {
  if (m < 1) throw Error("links per node must be at least 1");
  if (n <= m) {
    throw Error("need n > m (n=" + std::to_string(n) + ", m=" + std::to_string(m) + ")");
  }
}

}  // namespace

Graph configuration_model(std::span<const std::uint32_t> degrees, const Seed& seed,
                          const ConfigurationModelOptions& options) {
  const std::uint64_t total = std::accumulate(degrees.begin(), degrees.end(), std::uint64_t{0});
  if (total % 2 != 0) throw Error("degree sum is odd");
  if (!is_graphical(degrees)) throw Error("degree sequence is not graphical");

  std::vector<NodeId> stubs;
  stubs.reserve(total);
  for (NodeId v = 0; v < degrees.size(); ++v) stubs.insert(stubs.end(), degrees[v], v);

  Rng rng = make_rng(seed);
  const std::size_t len = stubs.size();
  for (int attempt = 0; attempt <= options.max_restarts; ++attempt) {
    std::shuffle(stubs.begin(), stubs.end(), rng);
    Graph g(degrees.size());
    bool ok = true;
    for (std::size_t i = 0; ok && i < len; i += 2) {
      int tries = 0;
      while (stubs[i] == stubs[i + 1] || g.has_edge(stubs[i], stubs[i + 1])) {
        if (tries++ >= options.local_retries || i + 2 >= len) {
          ok = false;
          break;
        }
        const std::size_t j = i + 2 + uniform_index(rng, len - i - 2);
        std::swap(stubs[i + 1], stubs[j]);
      }
      if (ok) g.add_edge(stubs[i], stubs[i + 1]);
    }
    if (ok) return g;
  }
  throw Error("stub matching failed after " + std::to_string(options.max_restarts) +
              " restarts");
}

Graph barabasi_albert(std::size_t n, std::size_t m, const Seed& seed) {
  check_growth(n, m);
  Graph g = clique(m + 1, n);
  // Node v appears deg(v) times; a uniform draw is degree-proportional.
  std::vector<NodeId> stubs;
  stubs.reserve(2 * (m * (m + 1) / 2 + m * (n - m - 1)));
  for (NodeId v = 0; v <= m; ++v) stubs.insert(stubs.end(), m, v);

  Rng rng = make_rng(seed);
  std::vector<NodeId> targets;
  for (auto v = static_cast<NodeId>(m + 1); v < n; ++v) {
    targets.clear();
    while (targets.size() < m) {
      const NodeId t = stubs[uniform_index(rng, stubs.size())];
      if (std::find(targets.begin(), targets.end(), t) == targets.end()) targets.push_back(t);
    }
    for (NodeId t : targets) {
      g.add_edge(v, t);
      stubs.push_back(t);
      stubs.push_back(v);
    }
  }
  return g;
}

void EvParams::validate() const {
  check_growth(n, m);
  if (!(epsilon >= 0.0 && epsilon <= 1.0)) throw Error("epsilon must lie in [0, 1]");
  if (!(temptation > 1.0)) throw Error("temptation must exceed 1");
  if (rounds_per_step < 0) throw Error("rounds_per_step must be non-negative");
  if (!(initial_cooperator_fraction >= 0.0 && initial_cooperator_fraction <= 1.0)) {
    throw Error("initial cooperator fraction must lie in [0, 1]");
  }
}

Graph evolutionary_pa(const EvParams& params, const Seed& seed) {
  params.validate();
  const std::size_t n = params.n, m = params.m;
  Graph g = clique(m + 1, n);
  Rng rng = make_rng(seed);

  std::vector<char> cooperates(n, 0);
  std::vector<std::uint32_t> cooperating_neighbors(n, 0);
  for (NodeId v = 0; v <= m; ++v) cooperates[v] = bernoulli(rng, params.initial_cooperator_fraction);
  for (NodeId v = 0; v <= m; ++v) {
    for (NodeId w : g.neighbors(v)) cooperating_neighbors[v] += cooperates[w];
  }

  std::vector<double> payoff(n, 0.0);
  auto refresh_payoff = [&](NodeId v) {
    payoff[v] = cooperating_neighbors[v] * (cooperates[v] ? 1.0 : params.temptation);
  };

  // Only nodes whose own state or neighborhood changed since their last
  // evaluation can switch strategy, so each round revisits just those.
  std::vector<std::uint32_t> mark(n, 0);
  std::uint32_t stamp = 0;
  std::vector<NodeId> dirty, evaluate, switched, touched;
  std::vector<char> next(n, 0);
  for (NodeId v = 0; v <= m; ++v) {
    refresh_payoff(v);
    dirty.push_back(v);
    if (params.rounds_per_step == 0) dirty.clear();
  }

  std::vector<double> cumulative(n, 0.0);
  std::vector<NodeId> targets;
  for (auto v = static_cast<NodeId>(m + 1); v < n; ++v) {
    const std::size_t alive = v;
    for (int round = 0; round < params.rounds_per_step && !dirty.empty(); ++round) {
      ++stamp;
      evaluate.clear();
      for (NodeId d : dirty) {
        if (mark[d] != stamp) {
          mark[d] = stamp;
          evaluate.push_back(d);
        }
        for (NodeId w : g.neighbors(d)) {
          if (mark[w] != stamp) {
            mark[w] = stamp;
            evaluate.push_back(w);
          }
        }
      }
      // Synchronous unconditional imitation of the best-scoring neighbor.
      switched.clear();
      for (NodeId u : evaluate) {
        double best = payoff[u];
        char strategy = cooperates[u];
        for (NodeId w : g.neighbors(u)) {
          if (payoff[w] > best) {
            best = payoff[w];
            strategy = cooperates[w];
          }
        }
        next[u] = strategy;
        if (strategy != cooperates[u]) switched.push_back(u);
      }
      ++stamp;
      touched.clear();
      for (NodeId u : switched) {
        cooperates[u] = next[u];
        if (mark[u] != stamp) {
          mark[u] = stamp;
          touched.push_back(u);
        }
        for (NodeId w : g.neighbors(u)) {
          if (next[u]) {
            ++cooperating_neighbors[w];
          } else {
            --cooperating_neighbors[w];
          }
          if (mark[w] != stamp) {
            mark[w] = stamp;
            touched.push_back(w);
          }
        }
      }
      for (NodeId t : touched) refresh_payoff(t);
      dirty.swap(touched);
    }

    double total = 0.0;
    for (NodeId u = 0; u < alive; ++u) {
      total += payoff[u];
      cumulative[u] = total;
    }
    // With epsilon = 1 fewer than m nodes may hold a payoff; uniform draws take
    // over once the payoff-weighted ones keep repeating.
    std::size_t draws = 0;
    auto draw = [&]() -> NodeId {
      if (total <= 0.0 || ++draws > 64 * m || !bernoulli(rng, params.epsilon)) {
        return static_cast<NodeId>(uniform_index(rng, alive));
      }
      const double x = uniform_real(rng) * total;
      const auto it = std::upper_bound(cumulative.begin(), cumulative.begin() + alive, x);
      return static_cast<NodeId>(std::min<std::size_t>(it - cumulative.begin(), alive - 1));
    };

    targets.clear();
    while (targets.size() < m) {
      const NodeId t = draw();
      if (std::find(targets.begin(), targets.end(), t) == targets.end()) targets.push_back(t);
    }
    cooperates[v] = bernoulli(rng, params.initial_cooperator_fraction);
    for (NodeId t : targets) {
      g.add_edge(v, t);
      cooperating_neighbors[v] += cooperates[t];
      cooperating_neighbors[t] += cooperates[v];
      refresh_payoff(t);
    }
    refresh_payoff(v);
    dirty.insert(dirty.end(), targets.begin(), targets.end());
    dirty.push_back(v);
    if (params.rounds_per_step == 0) dirty.clear();
  }
  return g;
}

}  // namespace transilab
