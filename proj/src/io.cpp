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

#include "transilab/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <string_view>
#include <vector>

#include "transilab/error.hpp"

namespace transilab {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

// Parses "key=value" after the leading '#'. Returns false for free text.
bool parse_meta(std::string_view body, std::string& key, std::string& value) {
  body = trim(body);
  const auto eq = body.find('=');
  if (eq == std::string_view::npos || eq == 0) return false;
  key = std::string(trim(body.substr(0, eq)));
  value = std::string(trim(body.substr(eq + 1)));
  return key.find(' ') == std::string::npos;
}

bool parse_u64(std::string_view token, std::uint64_t& out) {
  if (token.empty()) return false;
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, out);
  return ec == std::errc() && ptr == end;
}

// Splits a data line into exactly two unsigned integers.
bool parse_pair(std::string_view line, std::uint64_t& a, std::uint64_t& b) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens.size() == 2 && parse_u64(tokens[0], a) && parse_u64(tokens[1], b);
}

void write_meta(std::ostream& out, const Metadata& meta) {
  for (const auto& [key, value] : meta) {
    if (key == "n") continue;
    out << "# " << key << '=' << value << '\n';
  }
}

constexpr std::uint64_t kMaxNodes = std::uint64_t{1} << 31;

}  // namespace

void write_edge_list(std::ostream& out, const Graph& g, const Metadata& meta) {
  out << "# n=" << g.num_nodes() << '\n';
  write_meta(out, meta);
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

EdgeListFile read_edge_list(std::istream& in) {
  EdgeListFile file;
  std::optional<std::uint64_t> declared_n;
  bool seen_comment = false;
  struct Pending {
    std::uint64_t u, v;
    std::size_t line;
  };
  std::vector<Pending> pending;
  std::uint64_t max_id = 0;
  bool any_edge = false;

  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string_view line = trim(raw);
    if (line.empty()) continue;
    if (line.front() == '#') {
      std::string key, value;
      const bool is_meta = parse_meta(line.substr(1), key, value);
      if (is_meta && key == "n") {
        std::uint64_t n = 0;
        if (seen_comment || !parse_u64(value, n) || n > kMaxNodes) {
          throw ParseError(line_no, "invalid node-count header '" + std::string(line) + "'");
        }
        declared_n = n;
      } else if (is_meta) {
        file.meta[key] = value;
      }
      seen_comment = true;
      continue;
    }
    std::uint64_t u = 0, v = 0;
    if (!parse_pair(line, u, v)) {
      throw ParseError(line_no, "expected two node ids, got '" + std::string(line) + "'");
    }
    if (u >= kMaxNodes || v >= kMaxNodes) throw ParseError(line_no, "node id too large");
    if (u == v) throw ParseError(line_no, "self-loop on node " + std::to_string(u));
    pending.push_back({u, v, line_no});
    max_id = std::max({max_id, u, v});
    any_edge = true;
  }

  const std::uint64_t n = declared_n ? *declared_n : (any_edge ? max_id + 1 : 0);
  file.graph = Graph(n);
  for (const auto& e : pending) {
    if (e.u >= n || e.v >= n) {
      throw ParseError(e.line, "node id exceeds declared node count " + std::to_string(n));
    }
    if (!file.graph.add_edge(static_cast<NodeId>(e.u), static_cast<NodeId>(e.v))) {
      throw ParseError(e.line, "duplicate edge {" + std::to_string(e.u) + "," +
                                   std::to_string(e.v) + "}");
    }
  }
  return file;
}

void write_partition(std::ostream& out, const Partition& p, const Metadata& meta) {
  out << "# n=" << p.num_nodes() << '\n';
  write_meta(out, meta);
  for (NodeId v = 0; v < p.num_nodes(); ++v) out << v << ' ' << p.community(v) << '\n';
}

PartitionFile read_partition(std::istream& in, std::optional<std::size_t> expected_nodes) {
  PartitionFile file;
  std::vector<std::optional<std::uint32_t>> labels;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string_view line = trim(raw);
    if (line.empty()) continue;
    if (line.front() == '#') {
      std::string key, value;
      if (parse_meta(line.substr(1), key, value) && key != "n") file.meta[key] = value;
      continue;
    }
    std::uint64_t node = 0, community = 0;
    if (!parse_pair(line, node, community)) {
      throw ParseError(line_no, "expected 'node community', got '" + std::string(line) + "'");
    }
    if (node >= kMaxNodes || community > 0xffffffffULL) {
      throw ParseError(line_no, "id out of range");
    }
    if (node >= labels.size()) labels.resize(node + 1);
    if (labels[node]) throw ParseError(line_no, "node " + std::to_string(node) + " assigned twice");
    labels[node] = static_cast<std::uint32_t>(community);
  }
  if (expected_nodes && labels.size() > *expected_nodes) {
    throw ParseError(line_no, "partition covers " + std::to_string(labels.size()) +
                                  " nodes, graph has " + std::to_string(*expected_nodes));
  }
  if (expected_nodes) labels.resize(*expected_nodes);
  std::vector<std::uint32_t> dense(labels.size());
  for (std::size_t v = 0; v < labels.size(); ++v) {
    if (!labels[v]) throw ParseError(line_no, "node " + std::to_string(v) + " has no community");
    dense[v] = *labels[v];
  }
  file.partition = Partition(dense);
  return file;
}

EdgeListFile load_edge_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  return read_edge_list(in);
}

void save_edge_list(const std::string& path, const Graph& g, const Metadata& meta) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  write_edge_list(out, g, meta);
}

PartitionFile load_partition(const std::string& path, std::optional<std::size_t> expected_nodes) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  return read_partition(in, expected_nodes);
}

void save_partition(const std::string& path, const Partition& p, const Metadata& meta) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  write_partition(out, p, meta);
}

}  // namespace transilab
