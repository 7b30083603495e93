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

#include "transilab/lfr.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <string>

#include "transilab/error.hpp"
#include "transilab/metrics.hpp"

namespace transilab {

std::string_view to_string(BasicModel model) {
  switch (model) {
    case BasicModel::kCM: return "CM";
    case BasicModel::kBA: return "BA";
    case BasicModel::kEV: return "EV";
  }
  return "?";
}

BasicModel parse_basic_model(std::string_view name) {
  std::string upper(name);
  for (char& c : upper) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  if (upper == "CM") return BasicModel::kCM;
  if (upper == "BA") return BasicModel::kBA;
  if (upper == "EV") return BasicModel::kEV;
  throw Error("unknown basic model '" + std::string(name) + "' (expected CM, BA or EV)");
}

Graph generate_basic_model(const BasicModelParams& params, const Seed& seed) {
  const auto m = static_cast<std::size_t>(std::max(1L, std::lround(params.mean_degree / 2.0)));
  switch (params.model) {
    case BasicModel::kCM: {
      PowerLawSpec spec{params.gamma, 1, params.k_max, params.mean_degree};
      const DegreeSequence deg = sample_power_law_degrees(spec, params.n, seed.derive(1));
      return configuration_model(deg.degrees, seed.derive(2));
    }
    case BasicModel::kBA:
      return barabasi_albert(params.n, m, seed.derive(3));
    case BasicModel::kEV: {
      EvParams ev = params.ev;
      ev.n = params.n;
      ev.m = m;
      return evolutionary_pa(ev, seed.derive(4));
    }
  }
  throw Error("unknown basic model");
}

void LfrParams::validate() const {
  if (n < 2) throw Error("LFR needs at least 2 nodes");
  if (!(gamma > 1.0) || !(beta > 1.0)) throw Error("power-law exponents must exceed 1");
  if (!(mu >= 0.0 && mu <= 1.0)) throw Error("mu must lie in [0, 1]");
  if (n_min < 2) throw Error("n_min must be at least 2");
  if (n_min > n_max) throw Error("n_min exceeds n_max");
  if (static_cast<std::size_t>(n_max) > n) throw Error("n_max exceeds n");
  if (!(mu_tolerance >= 0.0)) throw Error("mu tolerance must be non-negative");
  if (max_sweeps < 0) throw Error("max_sweeps must be non-negative");
}

std::vector<std::size_t> sample_community_sizes(std::size_t n, double beta, int n_min,
                                                int n_max, const Seed& seed) {
  if (n_min < 2) throw Error("n_min must be at least 2");
  if (n_max < n_min) throw Error("n_max is below n_min");
  if (n < static_cast<std::size_t>(n_min)) {
    throw Error("n=" + std::to_string(n) + " is smaller than n_min=" + std::to_string(n_min));
  }
  const auto cap = static_cast<std::size_t>(n_max);
  if (cap > n) throw Error("n_max exceeds n");
  const auto floor = static_cast<std::size_t>(n_min);

  const BoundedPowerLaw law(beta, n_min, n_max);
  Rng rng = make_rng(seed);
  std::vector<std::size_t> sizes;
  std::size_t total = 0;
  while (total < n) {
    sizes.push_back(static_cast<std::size_t>(law(rng)));
    total += sizes.back();
  }
  sizes.back() -= total - n;
  if (sizes.back() >= floor || sizes.size() == 1) return sizes;

  std::size_t leftover = sizes.back();
  sizes.pop_back();
  const auto smallest = std::min_element(sizes.begin(), sizes.end());
  if (*smallest + leftover <= cap) {
    *smallest += leftover;
    return sizes;
  }
  // Merging would overflow n_max: hand the leftover out one node at a time.
  for (; leftover > 0; --leftover) {
    std::vector<std::size_t> open;
    for (std::size_t i = 0; i < sizes.size(); ++i) {
      if (sizes[i] < cap) open.push_back(i);
    }
    if (open.empty()) throw Error("community sizes cannot absorb all nodes under n_max");
    ++sizes[open[uniform_index(rng, open.size())]];
  }
  return sizes;
}

std::uint32_t internal_degree_target(std::uint32_t k, double mu) {
  return static_cast<std::uint32_t>(std::lround((1.0 - mu) * static_cast<double>(k)));
}

Partition assign_communities(std::span<const std::uint32_t> degrees,
                             std::span<const std::size_t> sizes, double mu, const Seed& seed,
                             OversizedNodePolicy policy) {
  const std::size_t n = degrees.size();
  if (std::accumulate(sizes.begin(), sizes.end(), std::size_t{0}) != n) {
    throw Error("community sizes do not sum to the node count");
  }
  if (sizes.empty()) return Partition{};
  if (!(mu >= 0.0 && mu <= 1.0)) throw Error("mu must lie in [0, 1]");

  // Communities by decreasing size: those admissible for a node form a prefix.
  std::vector<std::size_t> order(sizes.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return sizes[a] > sizes[b]; });
  const std::size_t largest = sizes[order.front()];

  std::vector<std::size_t> required(n);
  for (std::size_t v = 0; v < n; ++v) {
    std::size_t need = static_cast<std::size_t>(internal_degree_target(degrees[v], mu)) + 1;
    if (need > largest) {
      if (policy == OversizedNodePolicy::kError) {
        throw Error("node " + std::to_string(v) + " with degree " + std::to_string(degrees[v]) +
                    " needs a community of size >= " + std::to_string(need) +
                    " but the largest has " + std::to_string(largest));
      }
      need = largest;
    }
    required[v] = need;
  }

  // Most demanding nodes first; any admissible community for an earlier node
  // is admissible for every later one, so this succeeds whenever Hall's
  // condition holds.
  std::vector<NodeId> nodes(n);
  std::iota(nodes.begin(), nodes.end(), 0);
  std::stable_sort(nodes.begin(), nodes.end(),
                   [&](NodeId a, NodeId b) { return required[a] > required[b]; });

  Rng rng = make_rng(seed);
  std::vector<std::size_t> free_slots(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) free_slots[i] = sizes[order[i]];
  std::vector<std::uint32_t> label(n, 0);
  std::size_t prefix = 0;
  for (NodeId v : nodes) {
    while (prefix < order.size() && sizes[order[prefix]] >= required[v]) ++prefix;
    std::size_t available = 0;
    for (std::size_t i = 0; i < prefix; ++i) available += free_slots[i];
    // Under clamping, nodes without room spill into the next largest community.
    std::size_t reach = prefix;
    while (available == 0 && policy == OversizedNodePolicy::kClampToLargest &&
           reach < order.size()) {
      available += free_slots[reach++];
    }
    if (available == 0) {
      throw Error("no community with room for node " + std::to_string(v) + " (degree " +
                  std::to_string(degrees[v]) + ", needs size >= " +
                  std::to_string(required[v]) + ")");
    }
    std::size_t pick = uniform_index(rng, available);
    std::size_t i = 0;
    while (pick >= free_slots[i]) pick -= free_slots[i++];
    --free_slots[i];
    label[v] = static_cast<std::uint32_t>(order[i]);
  }
  // Community ids follow `sizes`, skipping empty entries.
  std::vector<CommunityId> remap(sizes.size(), 0);
  CommunityId next = 0;
  for (std::size_t c = 0; c < sizes.size(); ++c) {
    if (sizes[c] > 0) remap[c] = next++;
  }
  std::vector<CommunityId> dense(n);
  for (std::size_t v = 0; v < n; ++v) dense[v] = remap[label[v]];
  return Partition::from_dense(std::move(dense));
}

namespace {

// Sweeps without a 1% improvement of the deficit before the search gives up.
constexpr int kPatienceSweeps = 5;
constexpr double kSidewaysAcceptance = 0.01;

// Set of node ids with O(1) insert, erase and uniform sampling.
class NodeSet {
 public:
  explicit NodeSet(std::size_t universe = 0) : position_(universe, kAbsent) {}

  bool contains(NodeId v) const { return position_[v] != kAbsent; }
  bool empty() const { return items_.empty(); }
  std::size_t size() const { return items_.size(); }

  void insert(NodeId v) {
    if (contains(v)) return;
    position_[v] = items_.size();
    items_.push_back(v);
  }

  void erase(NodeId v) {
    if (!contains(v)) return;
    const NodeId last = items_.back();
    items_[position_[v]] = last;
    position_[last] = position_[v];
    items_.pop_back();
    position_[v] = kAbsent;
  }

  NodeId sample(Rng& rng) const { return items_[uniform_index(rng, items_.size())]; }

 private:
  static constexpr std::size_t kAbsent = static_cast<std::size_t>(-1);
  std::vector<NodeId> items_;
  std::vector<std::size_t> position_;
};

// Double-edge-swap search on the per-node external-degree deficit.
//
// Half of the proposals are aimed: a node with too many external links is
// paired with a community mate in the same state (both external edges become
// one internal edge), and a node with too few is paired with a node of the
// same kind elsewhere. The other half pick two uniformly random edges.
class MixingRewirer {
 public:
  MixingRewirer(Graph& g, const Partition& p, double mu, Rng& rng)
      : g_(g),
        p_(p),
        rng_(rng),
        members_(p.members()),
        surplus_(g.num_nodes()),
        shortage_(g.num_nodes()) {
    const std::size_t n = g.num_nodes();
    target_.resize(n);
    external_.resize(n);
    surplus_by_community_.reserve(p.num_communities());
    for (std::size_t c = 0; c < p.num_communities(); ++c) surplus_by_community_.emplace_back(n);
    for (NodeId v = 0; v < n; ++v) {
      const auto k = static_cast<std::uint32_t>(g.degree(v));
      const auto room = static_cast<std::uint32_t>(p.sizes()[p.community(v)] - 1);
      const std::uint32_t internal = std::min(internal_degree_target(k, mu), room);
      target_[v] = static_cast<std::int64_t>(k - internal);
      std::int64_t ext = 0;
      for (NodeId w : g.neighbors(v)) ext += crosses(v, w);
      external_[v] = ext;
      deficit_ += static_cast<std::uint64_t>(std::llabs(ext - target_[v]));
      stubs_.insert(stubs_.end(), k, v);
      classify(v);
    }
  }

  std::uint64_t deficit() const { return deficit_; }
  std::uint64_t swaps() const { return swaps_; }

  // One proposal; returns true if a swap was applied.
  bool propose() {
    if (stubs_.empty()) return false;
    NodeId u, v, x, y;
    const bool aimed = (!surplus_.empty() || !shortage_.empty()) && bernoulli(rng_, 0.5);
    if (aimed && !pick_aimed(u, v, x, y)) return false;
    if (aimed && surplus_.contains(u) && surplus_.contains(x) && u != x &&
        p_.community(u) == p_.community(x) && g_.has_edge(u, x)) {
      return route(u, x);
    }
    if (!aimed) {
      u = stubs_[uniform_index(rng_, stubs_.size())];
      v = random_neighbor(u);
      x = stubs_[uniform_index(rng_, stubs_.size())];
      y = random_neighbor(x);
    }
    if (u == x || u == y || v == x || v == y) return false;

    // Cross adds {u,x},{v,y}; twist adds {u,y},{v,x}.
    const std::int64_t cross = delta(u, v, x, y);
    const std::int64_t twist = delta(u, v, y, x);
    bool use_twist = twist < cross || (twist == cross && bernoulli(rng_, 0.5));
    const std::int64_t best = use_twist ? twist : cross;
    if (best > 0) return false;
    if (best == 0 && !bernoulli(rng_, kSidewaysAcceptance)) return false;
    const NodeId a = use_twist ? y : x;
    const NodeId b = use_twist ? x : y;
    if (g_.has_edge(u, a) || g_.has_edge(v, b)) return false;

    apply_change(u, v, a, b);
    double_edge_swap(g_, Edge{u, v}, Edge{a, b}, SwapOrientation::kCross);
    deficit_ = static_cast<std::uint64_t>(static_cast<std::int64_t>(deficit_) + best);
    ++swaps_;
    for (NodeId w : {u, v, a, b}) classify(w);
    return true;
  }

 private:
  // Two surplus nodes u and w of one community that are already adjacent:
  // borrow an internal edge {x,y} so that u-x and w-y become internal and
  // their external partners a and b are joined instead. Realized as two
  // consecutive double edge swaps.
  bool route(NodeId u, NodeId w) {
    NodeId a, b;
    if (!random_neighbor_where(u, true, a) || !random_neighbor_where(w, true, b)) return false;
    if (a == b || g_.has_edge(a, b)) return false;
    const auto& all = members_[p_.community(u)];
    const NodeId x = all[uniform_index(rng_, all.size())];
    if (x == u || x == w || g_.has_edge(u, x)) return false;
    NodeId y;
    if (!random_neighbor_where(x, false, y)) return false;
    if (y == u || y == w || g_.has_edge(w, y) || g_.has_edge(a, y)) return false;

    const std::int64_t ab = crosses(a, b);
    const std::int64_t change = cost(u, -1) + cost(w, -1) + cost(a, ab - 1) + cost(b, ab - 1);
    if (change > 0) return false;
    if (change == 0 && !bernoulli(rng_, kSidewaysAcceptance)) return false;

    double_edge_swap(g_, Edge{u, a}, Edge{x, y}, SwapOrientation::kCross);
    double_edge_swap(g_, Edge{a, y}, Edge{w, b}, SwapOrientation::kTwist);
    external_[u] -= 1;
    external_[w] -= 1;
    external_[a] += ab - 1;
    external_[b] += ab - 1;
    deficit_ = static_cast<std::uint64_t>(static_cast<std::int64_t>(deficit_) + change);
    swaps_ += 2;
    for (NodeId z : {u, w, a, b}) classify(z);
    return true;
  }

  bool pick_aimed(NodeId& u, NodeId& v, NodeId& x, NodeId& y) {
    const std::size_t pool = surplus_.size() + shortage_.size();
    const bool from_surplus = uniform_index(rng_, pool) < surplus_.size();
    if (from_surplus) {
      u = surplus_.sample(rng_);
      if (!random_neighbor_where(u, true, v)) return false;
      const NodeSet& mates = surplus_by_community_[p_.community(u)];
      if (mates.size() > 1) {
        x = mates.sample(rng_);
        if (!random_neighbor_where(x, true, y)) return false;
      } else {
        const auto& all = members_[p_.community(u)];
        x = all[uniform_index(rng_, all.size())];
        if (g_.degree(x) == 0) return false;
        y = random_neighbor(x);
      }
      return true;
    }
    u = shortage_.sample(rng_);
    if (!random_neighbor_where(u, false, v)) return false;
    x = shortage_.sample(rng_);
    if (p_.community(x) == p_.community(u)) {
      x = stubs_[uniform_index(rng_, stubs_.size())];
      y = random_neighbor(x);
      return true;
    }
    return random_neighbor_where(x, false, y);
  }

  void classify(NodeId v) {
    auto& mates = surplus_by_community_[p_.community(v)];
    if (external_[v] > target_[v]) {
      surplus_.insert(v);
      mates.insert(v);
    } else {
      surplus_.erase(v);
      mates.erase(v);
    }
    if (external_[v] < target_[v]) {
      shortage_.insert(v);
    } else {
      shortage_.erase(v);
    }
  }

  std::int64_t crosses(NodeId a, NodeId b) const {
    return p_.community(a) != p_.community(b) ? 1 : 0;
  }

  NodeId random_neighbor(NodeId v) {
    const auto nbrs = g_.neighbors(v);
    return nbrs[uniform_index(rng_, nbrs.size())];
  }

  // Neighbor across (external = true) or inside the node's community: a few
  // uniform probes, then a cyclic scan from a random position.
  bool random_neighbor_where(NodeId v, bool external, NodeId& out) {
    const auto nbrs = g_.neighbors(v);
    const std::size_t k = nbrs.size();
    if (k == 0) return false;
    for (int i = 0; i < 4; ++i) {
      const NodeId w = nbrs[uniform_index(rng_, k)];
      if ((crosses(v, w) == 1) == external) {
        out = w;
        return true;
      }
    }
    const std::size_t start = uniform_index(rng_, k);
    for (std::size_t i = 0; i < k; ++i) {
      const NodeId w = nbrs[(start + i) % k];
      if ((crosses(v, w) == 1) == external) {
        out = w;
        return true;
      }
    }
    return false;
  }

  std::int64_t cost(NodeId w, std::int64_t change) const {
    return std::llabs(external_[w] + change - target_[w]) - std::llabs(external_[w] - target_[w]);
  }

  // Deficit change for replacing {u,v},{a,b} by {u,a},{v,b}.
  std::int64_t delta(NodeId u, NodeId v, NodeId a, NodeId b) const {
    const std::int64_t old_uv = crosses(u, v), old_ab = crosses(a, b);
    const std::int64_t new_ua = crosses(u, a), new_vb = crosses(v, b);
    return cost(u, new_ua - old_uv) + cost(v, new_vb - old_uv) + cost(a, new_ua - old_ab) +
           cost(b, new_vb - old_ab);
  }

  void apply_change(NodeId u, NodeId v, NodeId a, NodeId b) {
    const std::int64_t old_uv = crosses(u, v), old_ab = crosses(a, b);
    const std::int64_t new_ua = crosses(u, a), new_vb = crosses(v, b);
    external_[u] += new_ua - old_uv;
    external_[v] += new_vb - old_uv;
    external_[a] += new_ua - old_ab;
    external_[b] += new_vb - old_ab;
  }

  Graph& g_;
  const Partition& p_;
  Rng& rng_;
  std::vector<std::vector<NodeId>> members_;
  std::vector<std::int64_t> target_;
  std::vector<std::int64_t> external_;
  std::vector<NodeId> stubs_;
  NodeSet surplus_;
  NodeSet shortage_;
  std::vector<NodeSet> surplus_by_community_;
  std::uint64_t deficit_ = 0;
  std::uint64_t swaps_ = 0;
};

}  // namespace

RewireResult rewire_to_mixing(Graph g, const Partition& p, double mu, double tolerance,
                              int max_sweeps, const Seed& seed) {
  if (p.num_nodes() != g.num_nodes()) throw Error("partition does not cover the graph");
  if (!(mu >= 0.0 && mu <= 1.0)) throw Error("mu must lie in [0, 1]");
  Rng rng = make_rng(seed);
  RewireResult result;
  {
    MixingRewirer rewirer(g, p, mu, rng);
    result.initial_deficit = rewirer.deficit();
    std::uint64_t best = rewirer.deficit();
    int stale = 0;
    while (rewirer.deficit() > 0 && result.sweeps < max_sweeps && stale < kPatienceSweeps) {
      for (std::size_t i = 0; i < g.num_edges() && rewirer.deficit() > 0; ++i) rewirer.propose();
      ++result.sweeps;
      if (rewirer.deficit() + best / 100 < best) {
        best = rewirer.deficit();
        stale = 0;
      } else {
        ++stale;
      }
    }
    result.residual_deficit = rewirer.deficit();
    result.swaps = rewirer.swaps();
  }
  result.achieved_mu = mixing_coefficient(g, p);
  result.within_tolerance = std::abs(result.achieved_mu - mu) <= tolerance;
  result.graph = std::move(g);
  return result;
}

LfrResult lfr_generate(const LfrParams& params, const Seed& seed) {
  params.validate();
  BasicModelParams basic{params.basic_model, params.n, params.gamma, params.mean_degree,
                         params.k_max, params.ev};
  Graph g = generate_basic_model(basic, seed.derive(10));

  LfrResult result;
  result.seed_degrees = g.degrees();
  const std::uint32_t k_min =
      *std::min_element(result.seed_degrees.begin(), result.seed_degrees.end());
  result.effective_n_min =
      std::clamp(std::max(params.n_min, static_cast<int>(k_min) + 1), params.n_min, params.n_max);

  const auto sizes = sample_community_sizes(params.n, params.beta, result.effective_n_min,
                                            params.n_max, seed.derive(11));
  const Partition partition = assign_communities(result.seed_degrees, sizes, params.mu,
                                                 seed.derive(12),
                                                 OversizedNodePolicy::kClampToLargest);
  RewireResult rewired = rewire_to_mixing(std::move(g), partition, params.mu,
                                          params.mu_tolerance, params.max_sweeps,
                                          seed.derive(13));
  std::sort(result.seed_degrees.begin(), result.seed_degrees.end());
  result.graph = std::move(rewired.graph);
  result.partition = partition;
  result.achieved_mu = rewired.achieved_mu;
  result.residual_deficit = rewired.residual_deficit;
  result.sweeps = rewired.sweeps;
  result.within_tolerance = rewired.within_tolerance;
  return result;
}

}  // namespace transilab
