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


#include <algorithm>
#include <random>

#include <gtest/gtest.h>

#include "../support/fixtures.hpp"
#include "../support/oracles.hpp"
#include "transilab/error.hpp"
#include "transilab/graph.hpp"

namespace {

using transilab::Edge;
using transilab::Graph;
using transilab::SwapOrientation;

TEST(Graph, AddEdgeKeepsSimplicity) {
  Graph g(3);
  EXPECT_TRUE(g.add_edge(0, 1));
  EXPECT_FALSE(g.add_edge(1, 0));
  EXPECT_FALSE(g.add_edge(2, 2));
  EXPECT_EQ(g.num_edges(), 1u);
  EXPECT_TRUE(g.has_edge(1, 0));
  EXPECT_FALSE(g.has_edge(0, 2));
  EXPECT_TRUE(g.is_valid());
  EXPECT_THROW(g.add_edge(0, 3), transilab::Error);
}

TEST(Graph, RemoveEdge) {
  Graph g = fixtures::complete(3);
  g.remove_edge(2, 0);
  EXPECT_EQ(g.num_edges(), 2u);
  EXPECT_FALSE(g.has_edge(0, 2));
  EXPECT_TRUE(g.is_valid());
  EXPECT_THROW(g.remove_edge(0, 2), transilab::Error);
}

TEST(Graph, EdgesSortedWithSmallerEndpointFirst) {
  Graph g(4);
  g.add_edge(3, 1);
  g.add_edge(2, 0);
  g.add_edge(1, 0);
  const std::vector<Edge> expected{{0, 1}, {0, 2}, {1, 3}};
  EXPECT_EQ(g.edges(), expected);
  EXPECT_EQ(g.degrees(), (std::vector<std::uint32_t>{2, 2, 1, 1}));
}

TEST(Graph, AddNodes) {
  Graph g(2);
  EXPECT_EQ(g.add_nodes(3), 2u);
  EXPECT_EQ(g.num_nodes(), 5u);
  EXPECT_TRUE(g.add_edge(4, 0));
}

TEST(DoubleEdgeSwap, DisjointPairs) {
  // a-b, c-d on nodes 0..3.
  Graph g = oracle::from_edges(4, {{0, 1}, {2, 3}});
  ASSERT_TRUE(transilab::double_edge_swap(g, {0, 1}, {2, 3}, SwapOrientation::kCross));
  EXPECT_TRUE(g.has_edge(0, 2));
  EXPECT_TRUE(g.has_edge(1, 3));
  EXPECT_EQ(g.num_edges(), 2u);
  EXPECT_EQ(g.degrees(), (std::vector<std::uint32_t>{1, 1, 1, 1}));
  EXPECT_TRUE(g.is_valid());
}

TEST(DoubleEdgeSwap, TwistOrientation) {
  Graph g = oracle::from_edges(4, {{0, 1}, {2, 3}});
  ASSERT_TRUE(transilab::double_edge_swap(g, {0, 1}, {2, 3}, SwapOrientation::kTwist));
  EXPECT_TRUE(g.has_edge(0, 3));
  EXPECT_TRUE(g.has_edge(1, 2));
}

TEST(DoubleEdgeSwap, SharedEndpointFails) {
  Graph g = fixtures::complete(3);
  const auto before = g.edges();
  EXPECT_FALSE(transilab::double_edge_swap(g, {0, 1}, {0, 2}, SwapOrientation::kCross));
  EXPECT_FALSE(transilab::double_edge_swap(g, {0, 1}, {0, 2}, SwapOrientation::kTwist));
  EXPECT_EQ(g.edges(), before);
}

TEST(DoubleEdgeSwap, WouldCreateParallelEdge) {
  // Square 0-1-2-3-0: crossing {0,1},{3,2} would add 0-3 which exists.
  Graph g = fixtures::ring(4);
  const auto before = g.edges();
  EXPECT_FALSE(transilab::double_edge_swap(g, {0, 1}, {3, 2}, SwapOrientation::kCross));
  EXPECT_EQ(g.edges(), before);
}

TEST(DoubleEdgeSwap, MissingEdgeThrows) {
  Graph g = oracle::from_edges(4, {{0, 1}, {2, 3}});
  EXPECT_THROW(transilab::double_edge_swap(g, {0, 2}, {1, 3}, SwapOrientation::kCross),
               transilab::Error);
}

TEST(DoubleEdgeSwap, RandomSequencesPreserveDegrees) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    Graph g = oracle::gnp(25, 0.2, rng);
    const auto degrees = g.degrees();
    for (int step = 0; step < 300; ++step) {
      const auto edges = g.edges();
      if (edges.size() < 2) break;
      std::uniform_int_distribution<std::size_t> pick(0, edges.size() - 1);
      const auto orientation = step % 2 ? SwapOrientation::kCross : SwapOrientation::kTwist;
      transilab::double_edge_swap(g, edges[pick(rng)], edges[pick(rng)], orientation);
      ASSERT_TRUE(g.is_valid());
    }
    EXPECT_EQ(g.degrees(), degrees);
  }
}

TEST(Components, LargestComponent) {
  // Triangle {0,1,2}, edge {3,4}, isolated 5.
  Graph g = oracle::from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}});
  const auto comp = transilab::connected_components(g);
  EXPECT_EQ(comp[0], comp[2]);
  EXPECT_NE(comp[0], comp[3]);
  EXPECT_NE(comp[3], comp[5]);
  EXPECT_FALSE(transilab::is_connected(g));
  const auto sub = transilab::largest_component(g);
  EXPECT_EQ(sub.graph.num_nodes(), 3u);
  EXPECT_EQ(sub.graph.num_edges(), 3u);
  EXPECT_EQ(sub.original_ids, (std::vector<transilab::NodeId>{0, 1, 2}));
  EXPECT_TRUE(transilab::is_connected(fixtures::ring(7)));
}

}  // namespace
