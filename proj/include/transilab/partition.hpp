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

#ifndef TRANSILAB_PARTITION_HPP_
#define TRANSILAB_PARTITION_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "transilab/graph.hpp"

namespace transilab {

using CommunityId = std::uint32_t;

// Node -> community map with dense community ids 0..c-1.
class Partition {
 public:
  Partition() = default;

  // Arbitrary labels are relabeled densely in order of first appearance.
  explicit Partition(std::span<const std::uint32_t> labels);

  // Labels already dense (every id in 0..max used); kept as given.
  // Throws Error otherwise.
  static Partition from_dense(std::vector<CommunityId> labels);

  // Every node in its own community.
  static Partition singletons(std::size_t n);
  // All nodes in community 0.
  static Partition single_community(std::size_t n);

  std::size_t num_nodes() const { return assignment_.size(); }
  std::size_t num_communities() const { return sizes_.size(); }

  CommunityId community(NodeId v) const { return assignment_[v]; }
  std::span<const CommunityId> assignment() const { return assignment_; }
  std::span<const std::size_t> sizes() const { return sizes_; }

  // Members of every community, each list in increasing node order.
  std::vector<std::vector<NodeId>> members() const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<CommunityId> assignment_;
  std::vector<std::size_t> sizes_;
};

// True if both partitions group the nodes identically, up to relabeling.
bool same_grouping(const Partition& a, const Partition& b);

}  // namespace transilab

#endif  // TRANSILAB_PARTITION_HPP_
