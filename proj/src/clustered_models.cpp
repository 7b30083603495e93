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

#include "transilab/clustered_models.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "transilab/degree_sequence.hpp"
#include "transilab/error.hpp"

namespace transilab {

NmStubSplit nm_stub_split(std::uint32_t k, double tau) {
  const double half = tau * static_cast<double>(k) / 2.0;
  // Half-up rounding; the small offset absorbs representation error such as
  // 0.5 * 10 / 2 landing just below 2.5.
  auto t = static_cast<std::uint32_t>(std::floor(half + 0.5 + 1e-9));
  t = std::min(t, k / 2);
  return NmStubSplit{k - 2 * t, t};
}

void NmParams::validate() const {
  if (n < 3) throw Error("NM needs at least 3 nodes");
  if (!(tau >= 0.0 && tau <= 1.0)) throw Error("tau must lie in [0, 1]");
}

namespace {

constexpr int kMaxRestarts = 100;
constexpr int kLocalRetries = 50;

bool forms_fresh_triangle(const Graph& g, NodeId a, NodeId b, NodeId c) {
  return a != b && b != c && a != c && !g.has_edge(a, b) && !g.has_edge(b, c) &&
         !g.has_edge(a, c);
}

// Matches corners into triangles and singles into edges. Returns false when a
// group cannot be fixed by re-drawing within the retry budget.
bool match_stubs(Graph& g, std::vector<NodeId>& corners, std::vector<NodeId>& singles, Rng& rng) {
  std::shuffle(corners.begin(), corners.end(), rng);
  for (std::size_t i = 0; i < corners.size(); i += 3) {
    int tries = 0;
    while (!forms_fresh_triangle(g, corners[i], corners[i + 1], corners[i + 2])) {
      if (tries++ >= kLocalRetries || i + 3 >= corners.size()) return false;
      const std::size_t slot = i + 1 + uniform_index<std::size_t>(rng, 2);
      const std::size_t j = i + 3 + uniform_index(rng, corners.size() - i - 3);
      std::swap(corners[slot], corners[j]);
    }
    g.add_edge(corners[i], corners[i + 1]);
    g.add_edge(corners[i + 1], corners[i + 2]);
    g.add_edge(corners[i], corners[i + 2]);
  }
  std::shuffle(singles.begin(), singles.end(), rng);
  for (std::size_t i = 0; i < singles.size(); i += 2) {
    int tries = 0;
    while (singles[i] == singles[i + 1] || g.has_edge(singles[i], singles[i + 1])) {
      if (tries++ >= kLocalRetries || i + 2 >= singles.size()) return false;
      const std::size_t j = i + 2 + uniform_index(rng, singles.size() - i - 2);
      std::swap(singles[i + 1], singles[j]);
    }
    g.add_edge(singles[i], singles[i + 1]);
  }
  return true;
}

}  // namespace

NmResult nm_generate(const NmParams& params, const Seed& seed) {
  params.validate();
  const PowerLawSpec spec{params.gamma, 1, params.k_max, params.mean_degree};
  const DegreeSequence deg = sample_power_law_degrees(spec, params.n, seed.derive(1));
  Rng rng = make_rng(seed.derive(2));

  NmResult result;
  result.target_degrees = deg.degrees;
  std::vector<NmStubSplit> split(params.n);
  std::uint64_t corner_total = 0, single_total = 0;
  for (std::size_t v = 0; v < params.n; ++v) {
    split[v] = nm_stub_split(deg.degrees[v], params.tau);
    corner_total += split[v].triangles;
    single_total += split[v].singles;
  }

  // Corner total must be a multiple of 3: give back whole triangles' worth of
  // corners as pairs of singles, which keeps every degree intact.
  while (corner_total % 3 != 0) {
    std::vector<NodeId> holders;
    for (NodeId v = 0; v < params.n; ++v) {
      if (split[v].triangles > 0) holders.push_back(v);
    }
    const NodeId v = holders[uniform_index(rng, holders.size())];
    --split[v].triangles;
    split[v].singles += 2;
    --corner_total;
    single_total += 2;
    ++result.triangle_decrements;
  }
  // Unreachable for an even degree sum, kept for sequences supplied by hand.
  if (single_total % 2 != 0) {
    const auto v = static_cast<NodeId>(uniform_index(rng, params.n));
    ++split[v].singles;
    ++single_total;
    ++result.single_increments;
  }

  std::vector<NodeId> corners, singles;
  corners.reserve(corner_total);
  singles.reserve(single_total);
  for (NodeId v = 0; v < params.n; ++v) {
    corners.insert(corners.end(), split[v].triangles, v);
    singles.insert(singles.end(), split[v].singles, v);
  }
  for (int attempt = 0; attempt <= kMaxRestarts; ++attempt) {
    Graph g(params.n);
    if (match_stubs(g, corners, singles, rng)) {
      result.graph = std::move(g);
      result.restarts = attempt;
      return result;
    }
  }
  throw Error("NM stub matching failed after " + std::to_string(kMaxRestarts) + " restarts");
}

void HtParams::validate() const {
  if (n < 3) throw Error("HT needs at least 3 nodes for its ring");
  if (!(p_closure >= 0.0 && p_closure <= 1.0)) throw Error("p_closure must lie in [0, 1]");
  if (k_max < 2) throw Error("HT needs k_max >= 2");
}

namespace {

// Fenwick tree over non-negative integer weights with proportional sampling.
class WeightTree {
 public:
  explicit WeightTree(const std::vector<std::uint32_t>& weights) : tree_(weights.size() + 1, 0) {
    for (std::size_t i = 0; i < weights.size(); ++i) add(i, weights[i]);
  }

  void add(std::size_t i, std::int64_t delta) {
    total_ += delta;
    for (std::size_t j = i + 1; j < tree_.size(); j += j & (~j + 1)) tree_[j] += delta;
  }

  std::int64_t total() const { return total_; }

  // Index whose cumulative range contains `x`, 0 <= x < total().
  std::size_t find(std::int64_t x) const {
    std::size_t pos = 0;
    std::size_t step = 1;
    while (step * 2 < tree_.size()) step *= 2;
    for (; step > 0; step /= 2) {
      if (pos + step < tree_.size() && tree_[pos + step] <= x) {
        pos += step;
        x -= tree_[pos];
      }
    }
    return pos;
  }

 private:
  std::vector<std::int64_t> tree_;
  std::int64_t total_ = 0;
};

class HtBuilder {
 public:
  HtBuilder(Graph& g, std::vector<std::uint32_t> budget, double p_closure, Rng& rng)
      : g_(g),
        budget_(std::move(budget)),
        weights_(budget_),
        p_closure_(p_closure),
        rng_(rng),
        position_(g.num_nodes(), kAbsent),
        adjacent_stamp_(g.num_nodes(), 0),
        seen_stamp_(g.num_nodes(), 0) {
    for (NodeId v = 0; v < g.num_nodes(); ++v) {
      if (budget_[v] > 0) activate(v);
    }
  }

  std::uint64_t run() {
    std::uint64_t shortfall = 0;
    while (weights_.total() > 0) {
      const auto u = static_cast<NodeId>(weights_.find(
          uniform_index<std::int64_t>(rng_, weights_.total())));
      mark_neighbors(u);
      const bool closure_first = bernoulli(rng_, p_closure_);
      NodeId v = kNone;
      v = closure_first ? closure_partner(u) : random_partner(u);
      if (v == kNone) v = closure_first ? random_partner(u) : closure_partner(u);
      if (v == kNone) {
        shortfall += budget_[u];
        spend(u, budget_[u]);
        continue;
      }
      g_.add_edge(u, v);
      spend(u, 1);
      spend(v, 1);
    }
    return shortfall;
  }

 private:
  static constexpr std::size_t kAbsent = static_cast<std::size_t>(-1);
  static constexpr NodeId kNone = static_cast<NodeId>(-1);

  void activate(NodeId v) {
    position_[v] = active_.size();
    active_.push_back(v);
  }

  void spend(NodeId v, std::uint32_t amount) {
    budget_[v] -= amount;
    weights_.add(v, -static_cast<std::int64_t>(amount));
    if (budget_[v] == 0) {
      const NodeId last = active_.back();
      active_[position_[v]] = last;
      position_[last] = position_[v];
      active_.pop_back();
      position_[v] = kAbsent;
    }
  }

  void mark_neighbors(NodeId u) {
    ++stamp_;
    adjacent_stamp_[u] = stamp_;
    for (NodeId w : g_.neighbors(u)) adjacent_stamp_[w] = stamp_;
  }

  bool admissible(NodeId u, NodeId v) const {
    return v != u && budget_[v] > 0 && adjacent_stamp_[v] != stamp_;
  }

  // Uniform among nodes at distance exactly 2 with remaining budget.
  NodeId closure_partner(NodeId u) {
    candidates_.clear();
    for (NodeId w : g_.neighbors(u)) {
      for (NodeId z : g_.neighbors(w)) {
        if (seen_stamp_[z] != stamp_ && admissible(u, z)) {
          seen_stamp_[z] = stamp_;
          candidates_.push_back(z);
        }
      }
    }
    if (candidates_.empty()) return kNone;
    return candidates_[uniform_index(rng_, candidates_.size())];
  }

  // Uniform among all admissible nodes: rejection first, exhaustive scan as a
  // fallback so that "none" is exact.
  NodeId random_partner(NodeId u) {
    for (int i = 0; i < 32 && !active_.empty(); ++i) {
      const NodeId v = active_[uniform_index(rng_, active_.size())];
      if (admissible(u, v)) return v;
    }
    candidates_.clear();
    for (NodeId v : active_) {
      if (admissible(u, v)) candidates_.push_back(v);
    }
    if (candidates_.empty()) return kNone;
    return candidates_[uniform_index(rng_, candidates_.size())];
  }

  Graph& g_;
  std::vector<std::uint32_t> budget_;
  WeightTree weights_;
  double p_closure_;
  Rng& rng_;
  std::vector<NodeId> active_;
  std::vector<std::size_t> position_;
  std::vector<std::uint64_t> adjacent_stamp_;
  std::vector<std::uint64_t> seen_stamp_;
  std::uint64_t stamp_ = 0;
  std::vector<NodeId> candidates_;
};

}  // namespace

HtResult ht_generate(const HtParams& params, const Seed& seed) {
  params.validate();
  const PowerLawSpec spec{params.gamma, 2, params.k_max, params.mean_degree};
  const DegreeSequence deg = sample_power_law_degrees(spec, params.n, seed.derive(1));
  Rng rng = make_rng(seed.derive(2));

  HtResult result;
  result.target_degrees = deg.degrees;
  result.graph = Graph(params.n);
  for (NodeId v = 0; v < params.n; ++v) {
    result.graph.add_edge(v, static_cast<NodeId>((v + 1) % params.n));
  }
  std::vector<std::uint32_t> budget(params.n);
  for (NodeId v = 0; v < params.n; ++v) budget[v] = deg.degrees[v] - 2;
  HtBuilder builder(result.graph, std::move(budget), params.p_closure, rng);
  result.shortfall = builder.run();
  return result;
}

}  // namespace transilab
