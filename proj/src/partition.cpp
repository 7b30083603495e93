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

#include "transilab/partition.hpp"

#include <string>
#include <unordered_map>

#include "transilab/error.hpp"

namespace transilab {

Partition::Partition(std::span<const std::uint32_t> labels) {
  std::unordered_map<std::uint32_t, CommunityId> dense;
  assignment_.reserve(labels.size());
  for (auto label : labels) {
    auto [it, inserted] = dense.try_emplace(label, static_cast<CommunityId>(dense.size()));
    if (inserted) sizes_.push_back(0);
    assignment_.push_back(it->second);
    ++sizes_[it->second];
  }
}

Partition Partition::from_dense(std::vector<CommunityId> labels) {
  Partition p;
  for (CommunityId c : labels) {
    if (c >= p.sizes_.size()) p.sizes_.resize(c + 1, 0);
    ++p.sizes_[c];
  }
  for (std::size_t c = 0; c < p.sizes_.size(); ++c) {
    if (p.sizes_[c] == 0) throw Error("community id " + std::to_string(c) + " is unused");
  }
  p.assignment_ = std::move(labels);
  return p;
}

Partition Partition::singletons(std::size_t n) {
  std::vector<std::uint32_t> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = static_cast<std::uint32_t>(i);
  return Partition(labels);
}

Partition Partition::single_community(std::size_t n) {
  std::vector<std::uint32_t> labels(n, 0);
  return Partition(labels);
}

std::vector<std::vector<NodeId>> Partition::members() const {
  std::vector<std::vector<NodeId>> out(sizes_.size());
  for (std::size_t c = 0; c < sizes_.size(); ++c) out[c].reserve(sizes_[c]);
  for (NodeId v = 0; v < assignment_.size(); ++v) out[assignment_[v]].push_back(v);
  return out;
}

bool same_grouping(const Partition& a, const Partition& b) {
  // Dense relabeling by first appearance is canonical.
  return Partition(a.assignment()) == Partition(b.assignment());
}

}  // namespace transilab
