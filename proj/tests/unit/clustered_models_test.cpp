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

#include <gtest/gtest.h>

#include "../support/oracles.hpp"
#include "transilab/clustered_models.hpp"
#include "transilab/error.hpp"
#include "transilab/metrics.hpp"

namespace {

using transilab::NmStubSplit;
using transilab::Seed;

TEST(NmStubSplit, Examples) {
  EXPECT_EQ(transilab::nm_stub_split(10, 0.5), (NmStubSplit{4, 3}));
  EXPECT_EQ(transilab::nm_stub_split(10, 0.0), (NmStubSplit{10, 0}));
  EXPECT_EQ(transilab::nm_stub_split(10, 1.0), (NmStubSplit{0, 5}));
  EXPECT_EQ(transilab::nm_stub_split(5, 1.0), (NmStubSplit{1, 2}));
  EXPECT_EQ(transilab::nm_stub_split(1, 1.0), (NmStubSplit{1, 0}));
  for (std::uint32_t k = 0; k < 50; ++k) {
    for (int i = 0; i <= 10; ++i) {
      const auto s = transilab::nm_stub_split(k, i / 10.0);
      EXPECT_EQ(s.singles + 2 * s.triangles, k);
    }
  }
}

TEST(Nm, NoTrianglesWithoutClosure) {
  transilab::NmParams params;
  params.n = 1000;
  params.tau = 0.0;
  const auto result = transilab::nm_generate(params, Seed{1, 0});
  EXPECT_LT(transilab::global_transitivity(result.graph), 0.05);
  EXPECT_EQ(result.graph.degrees(), result.target_degrees);
}

TEST(Nm, DegreesExactAcrossTau) {
  for (int i = 0; i <= 10; ++i) {
    transilab::NmParams params;
    params.n = 1000;
    params.mean_degree = 10.0;
    params.tau = i / 10.0;
    const auto result = transilab::nm_generate(params, Seed{2, static_cast<std::uint64_t>(i)});
    EXPECT_TRUE(result.graph.is_valid());
    EXPECT_EQ(result.single_increments, 0u);
    EXPECT_EQ(result.graph.degrees(), result.target_degrees) << "tau=" << params.tau;
  }
}

TEST(Nm, RegularFullClosureBound) {
  // With every degree equal to k and tau = 1, a node sits in k/2 triangles of
  // its own, giving local clustering 1/(k-1). Only triangles closed by chance
  // between different triples can push a node above that.
  for (std::uint32_t k : {4u, 6u, 10u}) {
    transilab::NmParams params;
    params.n = 600;
    params.gamma = 40.0;
    params.mean_degree = k;
    params.k_max = static_cast<int>(k);
    params.tau = 1.0;
    const auto result = transilab::nm_generate(params, Seed{3, k});
    ASSERT_TRUE(std::all_of(result.target_degrees.begin(), result.target_degrees.end(),
                            [&](std::uint32_t d) { return d == k; }));
    const double bound = 1.0 / (k - 1);
    for (transilab::NodeId v = 0; v < params.n; ++v) {
      EXPECT_GE(transilab::local_clustering(result.graph, v), bound - 1e-12);
    }
    EXPECT_LE(transilab::avg_local_clustering(result.graph), bound + 0.02);
  }
}

TEST(Nm, Deterministic) {
  transilab::NmParams params;
  params.tau = 0.6;
  EXPECT_EQ(transilab::nm_generate(params, Seed{4, 1}).graph.edges(),
            transilab::nm_generate(params, Seed{4, 1}).graph.edges());
}

TEST(Nm, InvalidParameters) {
  transilab::NmParams params;
  params.tau = 1.2;
  EXPECT_THROW(transilab::nm_generate(params, Seed{1, 0}), transilab::Error);
}

TEST(Ht, MinimalRing) {
  transilab::HtParams params;
  params.n = 5;
  params.gamma = 3.0;
  params.mean_degree = 2.0;
  params.k_max = 2;
  const auto result = transilab::ht_generate(params, Seed{1, 0});
  EXPECT_EQ(result.graph.num_edges(), 5u);
  EXPECT_EQ(result.shortfall, 0u);
  EXPECT_EQ(result.graph.degrees(), (std::vector<std::uint32_t>(5, 2)));
  EXPECT_EQ(transilab::triad_census(result.graph).triangles, 0u);
}

TEST(Ht, ConnectedSimpleAndNearTarget) {
  transilab::HtParams params;
  params.n = 2000;
  params.mean_degree = 15.0;
  params.k_max = 45;
  const auto result = transilab::ht_generate(params, Seed{2, 0});
  EXPECT_TRUE(result.graph.is_valid());
  EXPECT_TRUE(transilab::is_connected(result.graph));
  std::uint64_t target = 0;
  for (transilab::NodeId v = 0; v < params.n; ++v) {
    EXPECT_LE(result.graph.degree(v), result.target_degrees[v]);
    target += result.target_degrees[v];
  }
  EXPECT_EQ(2 * result.graph.num_edges() + result.shortfall, target);
  EXPECT_LE(result.shortfall, target / 50);
}

TEST(Ht, ClosureRaisesTransitivity) {
  transilab::HtParams params;
  params.n = 2000;
  params.p_closure = 0.0;
  const double open = transilab::global_transitivity(
      transilab::ht_generate(params, Seed{5, 0}).graph);
  params.p_closure = 0.9;
  const double closed = transilab::global_transitivity(
      transilab::ht_generate(params, Seed{5, 0}).graph);
  EXPECT_GT(closed, open + 0.1);
}

TEST(Ht, InvalidParameters) {
  transilab::HtParams params;
  params.n = 2;
  EXPECT_THROW(transilab::ht_generate(params, Seed{1, 0}), transilab::Error);
  params.n = 100;
  params.p_closure = -0.1;
  EXPECT_THROW(transilab::ht_generate(params, Seed{1, 0}), transilab::Error);
}

}  // namespace
