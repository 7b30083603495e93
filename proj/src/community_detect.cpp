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

#include "transilab/community_detect.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

#include "transilab/error.hpp"

namespace transilab {
namespace {

// Undirected weighted graph used on aggregation levels. Intra-community
// weight of a super-node is kept as a self-loop.
struct LevelGraph {
  std::vector<std::vector<std::pair<NodeId, double>>> adj;  // no self-loops
  std::vector<double> self_loop;
  std::vector<double> degree;  // adjacency weight + 2 * self_loop
  double total = 0.0;          // sum of degrees = 2m

  std::size_t size() const { return adj.size(); }
};

LevelGraph from_graph(const Graph& g) {
  LevelGraph lg;
  const std::size_t n = g.num_nodes();
  lg.adj.resize(n);
  lg.self_loop.assign(n, 0.0);
  lg.degree.assign(n, 0.0);
  for (NodeId v = 0; v < n; ++v) {
    for (NodeId w : g.neighbors(v)) lg.adj[v].emplace_back(w, 1.0);
    lg.degree[v] = static_cast<double>(g.degree(v));
    lg.total += lg.degree[v];
  }
  return lg;
}

LevelGraph aggregate(const LevelGraph& lg, std::span<const CommunityId> comm,
                     std::size_t num_comms) {
  LevelGraph out;
  out.adj.resize(num_comms);
  out.self_loop.assign(num_comms, 0.0);
  out.degree.assign(num_comms, 0.0);
  out.total = lg.total;
  std::vector<double> weight(num_comms, 0.0);
  std::vector<CommunityId> touched;
  std::vector<std::vector<NodeId>> members(num_comms);
  for (NodeId v = 0; v < lg.size(); ++v) members[comm[v]].push_back(v);
  for (CommunityId c = 0; c < num_comms; ++c) {
    touched.clear();
    for (NodeId v : members[c]) {
      out.self_loop[c] += lg.self_loop[v];
      out.degree[c] += lg.degree[v];
      for (const auto& [w, x] : lg.adj[v]) {
        const CommunityId d = comm[w];
        if (d == c) {
          out.self_loop[c] += 0.5 * x;  // each internal edge is seen from both ends
          continue;
        }
        if (weight[d] == 0.0) touched.push_back(d);
        weight[d] += x;
      }
    }
    std::sort(touched.begin(), touched.end());
    for (CommunityId d : touched) {
      out.adj[c].emplace_back(d, weight[d]);
      weight[d] = 0.0;
    }
  }
  return out;
}

double plogp(double p) { return p > 0.0 ? p * std::log2(p) : 0.0; }

// Modularity bookkeeping for one level. Gains are "higher is better".
class ModularityObjective {
 public:
  ModularityObjective(const LevelGraph& lg, std::span<const CommunityId> comm)
      : lg_(lg), tot_(lg.size(), 0.0), internal_(lg.size(), 0.0) {
    for (NodeId v = 0; v < lg.size(); ++v) {
      tot_[comm[v]] += lg.degree[v];
      internal_[comm[v]] += 2.0 * lg.self_loop[v];
      for (const auto& [w, x] : lg.adj[v]) {
        if (comm[w] == comm[v]) internal_[comm[v]] += x;
      }
    }
  }

  double gain(NodeId i, CommunityId from, CommunityId to, double w_from, double w_to) const {
    const double k = lg_.degree[i];
    const double m = lg_.total / 2.0;
    return (w_to - w_from) / m - k * (tot_[to] - (tot_[from] - k)) / (2.0 * m * m);
  }

  void move(NodeId i, CommunityId from, CommunityId to, double w_from, double w_to) {
    const double k = lg_.degree[i];
    tot_[from] -= k;
    tot_[to] += k;
    internal_[from] -= 2.0 * w_from + 2.0 * lg_.self_loop[i];
    internal_[to] += 2.0 * w_to + 2.0 * lg_.self_loop[i];
  }

  // Fresh evaluation from the per-community sums.
  double value() const {
    double q = 0.0;
    for (std::size_t c = 0; c < tot_.size(); ++c) {
      const double share = tot_[c] / lg_.total;
      q += internal_[c] / lg_.total - share * share;
    }
    return q;
  }

 private:
  const LevelGraph& lg_;
  std::vector<double> tot_;
  std::vector<double> internal_;
};

// Map-equation bookkeeping for one level. Gains are reductions of L (bits).
class MapEquationObjective {
 public:
  MapEquationObjective(const LevelGraph& lg, std::span<const CommunityId> comm,
                       double node_entropy_term)
      : lg_(lg), node_term_(node_entropy_term), exit_(lg.size(), 0.0), tot_(lg.size(), 0.0) {
    for (NodeId v = 0; v < lg.size(); ++v) {
      tot_[comm[v]] += lg.degree[v];
      exit_[comm[v]] += lg.degree[v] - 2.0 * lg.self_loop[v];
      for (const auto& [w, x] : lg.adj[v]) {
        if (comm[w] == comm[v]) exit_[comm[v]] -= x;
      }
    }
    for (std::size_t c = 0; c < lg.size(); ++c) {
      sum_exit_ += exit_[c];
      sum_plogp_exit_ += plogp(exit_[c] / lg.total);
      sum_plogp_exit_tot_ += plogp((exit_[c] + tot_[c]) / lg.total);
    }
  }

  double gain(NodeId i, CommunityId from, CommunityId to, double w_from, double w_to) const {
    const double before = value();
    const Update u = update(i, from, to, w_from, w_to);
    return before - codelength(u.sum_exit, u.sum_plogp_exit, u.sum_plogp_exit_tot);
  }

  void move(NodeId i, CommunityId from, CommunityId to, double w_from, double w_to) {
    const Update u = update(i, from, to, w_from, w_to);
    exit_[from] = u.exit_from;
    exit_[to] = u.exit_to;
    tot_[from] -= lg_.degree[i];
    tot_[to] += lg_.degree[i];
    sum_exit_ = u.sum_exit;
    sum_plogp_exit_ = u.sum_plogp_exit;
    sum_plogp_exit_tot_ = u.sum_plogp_exit_tot;
  }

  double value() const { return codelength(sum_exit_, sum_plogp_exit_, sum_plogp_exit_tot_); }

 private:
  struct Update {
    double exit_from, exit_to;
    double sum_exit, sum_plogp_exit, sum_plogp_exit_tot;
  };

  Update update(NodeId i, CommunityId from, CommunityId to, double w_from, double w_to) const {
    const double t = lg_.total;
    const double k = lg_.degree[i];
    const double self = lg_.self_loop[i];
    Update u{};
    u.exit_from = exit_[from] - k + 2.0 * self + 2.0 * w_from;
    u.exit_to = exit_[to] + k - 2.0 * self - 2.0 * w_to;
    const double tot_from = tot_[from] - k, tot_to = tot_[to] + k;
    u.sum_exit = sum_exit_ - exit_[from] - exit_[to] + u.exit_from + u.exit_to;
    u.sum_plogp_exit = sum_plogp_exit_ - plogp(exit_[from] / t) - plogp(exit_[to] / t) +
                       plogp(u.exit_from / t) + plogp(u.exit_to / t);
    u.sum_plogp_exit_tot = sum_plogp_exit_tot_ - plogp((exit_[from] + tot_[from]) / t) -
                           plogp((exit_[to] + tot_[to]) / t) +
                           plogp((u.exit_from + tot_from) / t) + plogp((u.exit_to + tot_to) / t);
    return u;
  }

  double codelength(double sum_exit, double sum_plogp_exit, double sum_plogp_exit_tot) const {
    return plogp(sum_exit / lg_.total) - 2.0 * sum_plogp_exit - node_term_ + sum_plogp_exit_tot;
  }

  const LevelGraph& lg_;
  double node_term_;
  std::vector<double> exit_;
  std::vector<double> tot_;
  double sum_exit_ = 0.0;
  double sum_plogp_exit_ = 0.0;
  double sum_plogp_exit_tot_ = 0.0;
};

constexpr double kMinGain = 1e-12;
constexpr int kTuneRounds = 10;

// Runs local moving on one level until a full pass moves nothing. With
// `allow_isolate`, a node may also leave for an empty community. Returns the
// number of accepted moves.
template <typename Objective>
std::size_t local_moving(const LevelGraph& lg, Objective& objective,
                         std::vector<CommunityId>& comm, Rng& rng, bool allow_isolate,
                         const std::function<void(double)>& after_move) {
  const std::size_t n = lg.size();
  std::vector<NodeId> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<double> weight(n, 0.0);
  std::vector<char> seen(n, 0);
  std::vector<CommunityId> touched;
  std::vector<std::size_t> size(n, 0);
  for (CommunityId c : comm) ++size[c];
  std::vector<CommunityId> empty;
  for (CommunityId c = static_cast<CommunityId>(n); c-- > 0;) {
    if (size[c] == 0) empty.push_back(c);
  }
  std::size_t total_moves = 0;
  for (;;) {
    std::shuffle(order.begin(), order.end(), rng);
    std::size_t moves = 0;
    for (NodeId i : order) {
      touched.clear();
      for (const auto& [j, x] : lg.adj[i]) {
        const CommunityId c = comm[j];
        if (!seen[c]) {
          seen[c] = 1;
          touched.push_back(c);
        }
        weight[c] += x;
      }
      const CommunityId from = comm[i];
      const double w_from = seen[from] ? weight[from] : 0.0;
      CommunityId best = from;
      double best_gain = kMinGain;
      for (CommunityId c : touched) {
        if (c == from) continue;
        const double g = objective.gain(i, from, c, w_from, weight[c]);
        if (g > best_gain || (g == best_gain && best != from && c < best)) {
          best_gain = g;
          best = c;
        }
      }
      if (allow_isolate && size[from] > 1 && !empty.empty() &&
          objective.gain(i, from, empty.back(), w_from, 0.0) > best_gain) {
        best = empty.back();
        empty.pop_back();
      }
      if (best != from) {
        objective.move(i, from, best, w_from, seen[best] ? weight[best] : 0.0);
        comm[i] = best;
        ++size[best];
        if (--size[from] == 0) empty.push_back(from);
        ++moves;
        if (after_move) after_move(objective.value());
      }
      for (CommunityId c : touched) {
        seen[c] = 0;
        weight[c] = 0.0;
      }
    }
    total_moves += moves;
    if (moves == 0) break;
  }
  return total_moves;
}

// Tries dissolving each community in turn: its nodes go one by one to the best
// neighboring community, and the change is kept only if the objective improves
// overall. Returns true if any community was dissolved.
template <typename Objective>
bool dissolve_pass(const LevelGraph& lg, Objective& objective, std::vector<CommunityId>& comm,
                   Rng& rng, const std::function<void(double)>& after_move) {
  const std::size_t n = lg.size();
  std::vector<std::vector<NodeId>> members(n);
  for (NodeId v = 0; v < n; ++v) members[comm[v]].push_back(v);
  std::vector<CommunityId> order;
  for (CommunityId c = 0; c < n; ++c) {
    if (!members[c].empty()) order.push_back(c);
  }
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<double> weight(n, 0.0);
  std::vector<char> seen(n, 0);
  std::vector<CommunityId> touched;
  // Weight from node i to community c under the current assignment.
  auto tally = [&](NodeId i) {
    touched.clear();
    for (const auto& [j, x] : lg.adj[i]) {
      const CommunityId c = comm[j];
      if (!seen[c]) {
        seen[c] = 1;
        touched.push_back(c);
      }
      weight[c] += x;
    }
  };
  auto clear = [&]() {
    for (CommunityId c : touched) {
      seen[c] = 0;
      weight[c] = 0.0;
    }
  };
  struct Step {
    NodeId node;
    CommunityId from, to;
  };
  bool improved = false;
  std::vector<Step> steps;
  for (CommunityId target : order) {
    auto& nodes = members[target];
    if (nodes.empty() || nodes.size() == n) continue;
    const double before = objective.value();
    steps.clear();
    std::shuffle(nodes.begin(), nodes.end(), rng);
    for (NodeId i : nodes) {
      tally(i);
      const double w_from = seen[target] ? weight[target] : 0.0;
      CommunityId best = target;
      double best_gain = -std::numeric_limits<double>::infinity();
      for (CommunityId c : touched) {
        if (c == target) continue;
        const double g = objective.gain(i, target, c, w_from, weight[c]);
        if (g > best_gain) {
          best_gain = g;
          best = c;
        }
      }
      if (best != target) {
        objective.move(i, target, best, w_from, weight[best]);
        comm[i] = best;
        steps.push_back({i, target, best});
      }
      clear();
    }
    if (objective.value() < before - kMinGain) {
      improved = true;
      for (const Step& s : steps) members[s.to].push_back(s.node);
      std::erase_if(nodes, [&](NodeId v) { return comm[v] != target; });
      if (after_move) after_move(objective.value());
      continue;
    }
    for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
      tally(it->node);
      const double w_from = seen[it->to] ? weight[it->to] : 0.0;
      const double w_to = seen[it->from] ? weight[it->from] : 0.0;
      objective.move(it->node, it->to, it->from, w_from, w_to);
      comm[it->node] = it->from;
      clear();
    }
  }
  return improved;
}

// Relabels `comm` densely in increasing order of the old label.
std::size_t compact(std::vector<CommunityId>& comm) {
  std::vector<CommunityId> remap(comm.size(), static_cast<CommunityId>(-1));
  for (CommunityId c : comm) remap[c] = 0;
  CommunityId next = 0;
  for (auto& r : remap) {
    if (r == 0) r = next++;
  }
  for (auto& c : comm) c = remap[c];
  return next;
}

struct MultilevelOutcome {
  std::vector<CommunityId> flat;
  double objective = 0.0;
  int passes = 0;
};

// Local moving and aggregation until a level moves nothing. The first level
// starts from `initial` when given, every other level from singletons.
template <typename MakeObjective>
MultilevelOutcome multilevel(const Graph& g, Rng& rng, const MakeObjective& make_objective,
                             bool allow_isolate, const MoveObserver& observer,
                             const std::vector<CommunityId>* initial = nullptr) {
  MultilevelOutcome out;
  LevelGraph level = from_graph(g);
  // Level node of every original node.
  std::vector<NodeId> node_of(g.num_nodes());
  std::iota(node_of.begin(), node_of.end(), 0);

  for (bool first = true;; first = false) {
    std::vector<CommunityId> comm(level.size());
    if (first && initial) {
      comm = *initial;
    } else {
      std::iota(comm.begin(), comm.end(), 0);
    }
    auto objective = make_objective(level, comm);
    std::function<void(double)> after_move;
    std::vector<CommunityId> snapshot;
    if (observer) {
      after_move = [&](double value) {
        snapshot.resize(node_of.size());
        for (std::size_t v = 0; v < node_of.size(); ++v) snapshot[v] = comm[node_of[v]];
        observer(value, snapshot);
      };
    }
    std::size_t moves = local_moving(level, objective, comm, rng, allow_isolate, after_move);
    if (first && initial) {
      while (dissolve_pass(level, objective, comm, rng, after_move)) {
        moves += 1 + local_moving(level, objective, comm, rng, allow_isolate, after_move);
      }
    }
    ++out.passes;
    out.objective = objective.value();
    const std::size_t num_comms = compact(comm);
    for (auto& v : node_of) v = comm[v];
    if (moves == 0) break;
    level = aggregate(level, comm, num_comms);
    if (num_comms == 1) {
      const std::vector<CommunityId> whole{0};
      out.objective = make_objective(level, whole).value();
      break;
    }
  }
  out.flat.assign(node_of.begin(), node_of.end());
  return out;
}

double node_entropy_term(const Graph& g) {
  const double total = 2.0 * static_cast<double>(g.num_edges());
  double sum = 0.0;
  for (NodeId v = 0; v < g.num_nodes(); ++v) sum += plogp(g.degree(v) / total);
  return sum;
}

void require_connected(const Graph& g) {
  if (g.num_edges() == 0) throw Error("graph has no edges");
  if (!is_connected(g)) throw Error("graph is disconnected; run on its largest component");
}

struct MapEquationFactory {
  double node_term;

  MapEquationObjective operator()(const LevelGraph& lg, std::span<const CommunityId> comm) const {
    return MapEquationObjective(lg, comm, node_term);
  }
};

// Splits every module of `current` into submodules found on the module's own
// subgraph, then moves whole submodules between modules (or into new ones).
MultilevelOutcome coarse_tune(const Graph& g, const MultilevelOutcome& current, Rng& rng,
                              const MoveObserver& observer) {
  const std::size_t n = g.num_nodes();
  std::size_t modules = 0;
  for (CommunityId c : current.flat) modules = std::max<std::size_t>(modules, c + 1);
  std::vector<std::vector<NodeId>> members(modules);
  for (NodeId v = 0; v < n; ++v) members[current.flat[v]].push_back(v);

  std::vector<CommunityId> sub(n);
  std::vector<NodeId> local(n);
  CommunityId next = 0;
  for (const auto& nodes : members) {
    for (std::size_t i = 0; i < nodes.size(); ++i) local[nodes[i]] = static_cast<NodeId>(i);
    Graph h(nodes.size());
    for (NodeId v : nodes) {
      for (NodeId w : g.neighbors(v)) {
        if (current.flat[w] == current.flat[v] && v < w) h.add_edge(local[v], local[w]);
      }
    }
    if (h.num_edges() == 0) {
      for (NodeId v : nodes) sub[v] = next++;
      continue;
    }
    const auto inner = multilevel(h, rng, MapEquationFactory{node_entropy_term(h)}, true, {});
    CommunityId used = 0;
    for (NodeId v : nodes) {
      sub[v] = next + inner.flat[local[v]];
      used = std::max(used, inner.flat[local[v]] + 1);
    }
    next += used;
  }

  const double node_term = node_entropy_term(g);
  const LevelGraph level = aggregate(from_graph(g), sub, next);
  std::vector<CommunityId> comm(next);
  for (NodeId v = 0; v < n; ++v) comm[sub[v]] = current.flat[v];
  auto objective = MapEquationObjective(level, comm, node_term);
  std::function<void(double)> after_move;
  std::vector<CommunityId> snapshot(n);
  if (observer) {
    after_move = [&](double value) {
      for (NodeId v = 0; v < n; ++v) snapshot[v] = comm[sub[v]];
      observer(value, snapshot);
    };
  }
  local_moving(level, objective, comm, rng, true, after_move);
  while (dissolve_pass(level, objective, comm, rng, after_move)) {
    local_moving(level, objective, comm, rng, true, after_move);
  }
  MultilevelOutcome out;
  out.flat.resize(n);
  for (NodeId v = 0; v < n; ++v) out.flat[v] = comm[sub[v]];
  compact(out.flat);
  out.objective = objective.value();
  out.passes = 1;
  return out;
}

}  // namespace

DetectionResult louvain(const Graph& g, const Seed& seed, const LouvainOptions& options) {
  if (g.num_edges() == 0) throw Error("Louvain needs at least one edge");
  Rng rng = make_rng(seed);
  auto outcome = multilevel(
      g, rng,
      [](const LevelGraph& lg, std::span<const CommunityId> comm) {
        return ModularityObjective(lg, comm);
      },
      false, options.on_move);
  return DetectionResult{Partition::from_dense(std::move(outcome.flat)), outcome.objective,
                         outcome.passes};
}

double map_equation(const Graph& g, const Partition& p) {
  require_connected(g);
  if (p.num_nodes() != g.num_nodes()) throw Error("partition does not cover the graph");
  const double total = 2.0 * static_cast<double>(g.num_edges());
  const std::size_t c = p.num_communities();
  std::vector<double> exit(c, 0.0), visit(c, 0.0);
  for (NodeId u = 0; u < g.num_nodes(); ++u) {
    visit[p.community(u)] += g.degree(u) / total;
    for (NodeId v : g.neighbors(u)) {
      if (p.community(v) != p.community(u)) exit[p.community(u)] += 1.0 / total;
    }
  }
  const double q = std::accumulate(exit.begin(), exit.end(), 0.0);
  double length = plogp(q) - node_entropy_term(g);
  for (std::size_t i = 0; i < c; ++i) length += -2.0 * plogp(exit[i]) + plogp(exit[i] + visit[i]);
  return length;
}

DetectionResult infomap_greedy(const Graph& g, const Seed& seed, const InfomapOptions& options) {
  require_connected(g);
  const double node_term = node_entropy_term(g);
  // One-module code: the entropy of the visit rates.
  DetectionResult best{Partition::single_community(g.num_nodes()), -node_term, 0};
  const MapEquationFactory make{node_term};
  const int restarts = std::max(1, options.restarts);
  for (int r = 0; r < restarts; ++r) {
    Rng rng = make_rng(seed.derive(static_cast<std::uint64_t>(r)));
    auto outcome = multilevel(g, rng, make, true, options.on_move);
    // Alternate fine-tuning (single nodes move between the modules found) and
    // coarse-tuning (submodules move) while the code length keeps shrinking.
    for (int round = 0; round < kTuneRounds; ++round) {
      auto tuned = multilevel(g, rng, make, true, options.on_move, &outcome.flat);
      auto coarse = coarse_tune(g, tuned, rng, options.on_move);
      if (coarse.objective < tuned.objective - kMinGain) tuned = std::move(coarse);
      if (!(tuned.objective < outcome.objective - kMinGain)) break;
      tuned.passes += outcome.passes;
      outcome = std::move(tuned);
    }
    if (outcome.objective < best.objective - kMinGain) {
      best = DetectionResult{Partition::from_dense(std::move(outcome.flat)), outcome.objective,
                             outcome.passes};
    }
  }
  return best;
}

}  // namespace transilab
