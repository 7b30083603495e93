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

#ifndef TRANSILAB_IO_HPP_
#define TRANSILAB_IO_HPP_

#include <iosfwd>
#include <map>
#include <optional>
#include <string>

#include "transilab/graph.hpp"
#include "transilab/partition.hpp"

namespace transilab {

// Free-form `# key=value` header lines carried alongside a file.
using Metadata = std::map<std::string, std::string>;

// Edge-list text format:
//
//   # n=<node count>
//   # <key>=<value>        (optional metadata, any number)
//   u v                     (one edge per line, 0-indexed, u < v)
//
// Lines starting with '#' are comments. When the first comment line does not
// carry n, the node count is inferred as max id + 1.
void write_edge_list(std::ostream& out, const Graph& g, const Metadata& meta = {});

struct EdgeListFile {
  Graph graph;
  Metadata meta;
};
// Throws ParseError with the offending line number on malformed input.
EdgeListFile read_edge_list(std::istream& in);

// Partition text format: one "node community" pair per line, '#' comments.
void write_partition(std::ostream& out, const Partition& p, const Metadata& meta = {});

struct PartitionFile {
  Partition partition;
  Metadata meta;
};
// Every node 0..n-1 must appear exactly once. With `expected_nodes`, the node
// count must match.
PartitionFile read_partition(std::istream& in,
                             std::optional<std::size_t> expected_nodes = std::nullopt);

EdgeListFile load_edge_list(const std::string& path);
void save_edge_list(const std::string& path, const Graph& g, const Metadata& meta = {});
PartitionFile load_partition(const std::string& path,
                             std::optional<std::size_t> expected_nodes = std::nullopt);
void save_partition(const std::string& path, const Partition& p, const Metadata& meta = {});

}  // namespace transilab

#endif  // TRANSILAB_IO_HPP_
