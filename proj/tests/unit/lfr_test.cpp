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
#include <numeric>

#include <gtest/gtest.h>

#include "../support/fixtures.hpp"
#include "../support/oracles.hpp"
#include "transilab/error.hpp"
#include "transilab/lfr.hpp"
#include "transilab/metrics.hpp"

namespace {

using transilab::OversizedNodePolicy;
using transilab::Seed;

TEST(CommunitySizes, SumAndBounds) {
  for (std::uint64_t r = 0; r < 25; ++r) {
    const auto sizes = transilab::sample_community_sizes(1000, 2.0, 10, 200, Seed{1, r});
    EXPECT_EQ(std::accumulate(sizes.begin(), sizes.end(), std::size_t{0}), 1000u);
    for (auto s : sizes) {
      EXPECT_GE(s, 10u);
      EXPECT_LE(s, 200u);
    }
  }
}

TEST(CommunitySizes, LargerCapMeansFewerCommunities) {
  double small = 0.0, large = 0.0;
  for (std::uint64_t r = 0; r < 25; ++r) {
    small += transilab::sample_community_sizes(1000, 2.0, 10, 200, Seed{2, r}).size();
    large += transilab::sample_community_sizes(1000, 2.0, 10, 600, Seed{2, r}).size();
  }
  EXPECT_GT(small, large);
}

TEST(CommunitySizes, ExactFit) {
  const auto sizes = transilab::sample_community_sizes(10, 2.0, 10, 10, Seed{1, 0});
  EXPECT_EQ(sizes, (std::vector<std::size_t>{10}));
}

TEST(CommunitySizes, InvalidArguments) {
  EXPECT_THROW(transilab::sample_community_sizes(5, 2.0, 10, 20, Seed{1, 0}), transilab::Error);
  EXPECT_THROW(transilab::sample_community_sizes(100, 2.0, 30, 20, Seed{1, 0}),
               transilab::Error);
  EXPECT_THROW(transilab::sample_community_sizes(100, 2.0, 10, 200, Seed{1, 0}),
               transilab::Error);
}

TEST(InternalDegree, Rounding) {
  EXPECT_EQ(transilab::internal_degree_target(10, 0.05), 10u);  // 9.5 rounds up
  EXPECT_EQ(transilab::internal_degree_target(10, 0.5), 5u);
  EXPECT_EQ(transilab::internal_degree_target(3, 0.0), 3u);
  EXPECT_EQ(transilab::internal_degree_target(7, 1.0), 0u);
}

TEST(AssignCommunities, RespectsSizesAndInternalTargets) {
  for (std::uint64_t r = 0; r < 25; ++r) {
    const auto deg =
        transilab::sample_power_law_degrees({3.0, 1, 45, 15.0}, 1000, Seed{3, r}).degrees;
    const auto sizes = transilab::sample_community_sizes(1000, 2.0, 10, 200, Seed{4, r});
    const auto p = transilab::assign_communities(deg, sizes, 0.05, Seed{5, r});
    ASSERT_EQ(p.num_communities(), sizes.size());
    for (std::size_t c = 0; c < sizes.size(); ++c) EXPECT_EQ(p.sizes()[c], sizes[c]);
    for (transilab::NodeId v = 0; v < 1000; ++v) {
      EXPECT_LE(transilab::internal_degree_target(deg[v], 0.05) + 1, sizes[p.community(v)]);
    }
  }
}

TEST(AssignCommunities, OversizedNode) {
  const std::vector<std::uint32_t> deg{5, 1, 1, 1, 1, 1};
  const std::vector<std::size_t> sizes{3, 3};
  EXPECT_THROW(transilab::assign_communities(deg, sizes, 0.0, Seed{1, 0}), transilab::Error);
  const auto p = transilab::assign_communities(deg, sizes, 0.0, Seed{1, 0},
                                               OversizedNodePolicy::kClampToLargest);
  EXPECT_EQ(p.sizes()[0], 3u);
  EXPECT_EQ(p.sizes()[1], 3u);
}

TEST(AssignCommunities, NotEnoughRoom) {
  const std::vector<std::uint32_t> deg{3, 3, 3, 3, 3, 1};
  const std::vector<std::size_t> sizes{4, 2};
  EXPECT_THROW(transilab::assign_communities(deg, sizes, 0.0, Seed{1, 0}), transilab::Error);
  const auto p = transilab::assign_communities(deg, sizes, 0.0, Seed{1, 0},
                                               OversizedNodePolicy::kClampToLargest);
  EXPECT_EQ(p.sizes()[0], 4u);
  EXPECT_EQ(p.sizes()[1], 2u);
}

TEST(AssignCommunities, SizesMustCoverNodes) {
  const std::vector<std::uint32_t> deg{1, 1, 1};
  const std::vector<std::size_t> sizes{2};
  EXPECT_THROW(transilab::assign_communities(deg, sizes, 0.0, Seed{1, 0}), transilab::Error);
}

TEST(Rewire, BridgeFixtureAlreadyOptimal) {
  const auto g = fixtures::two_triangles_bridge();
  const auto p = fixtures::two_triangles_split();
  const auto result = transilab::rewire_to_mixing(g, p, 1.0 / 9.0, 0.02, 50, Seed{1, 0});
  EXPECT_EQ(result.graph.edges(), g.edges());
  EXPECT_NEAR(result.achieved_mu, 1.0 / 9.0, 1e-12);
}

TEST(Rewire, PreservesDegreesAndReportsMixing) {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 10; ++trial) {
    const auto g = oracle::gnp(60, 0.15, rng);
    std::vector<std::uint32_t> labels(60);
    for (std::size_t v = 0; v < 60; ++v) labels[v] = static_cast<std::uint32_t>(v % 4);
    const transilab::Partition p(labels);
    const auto result = transilab::rewire_to_mixing(g, p, 0.2, 0.02, 200, Seed{7, 0});
    EXPECT_EQ(result.graph.degrees(), g.degrees());
    EXPECT_TRUE(result.graph.is_valid());
    const auto a = oracle::to_matrix(result.graph);
    EXPECT_NEAR(result.achieved_mu, oracle::mixing(a, labels), 1e-12);
    EXPECT_LE(result.residual_deficit, result.initial_deficit);
    EXPECT_LT(result.achieved_mu, transilab::mixing_coefficient(g, p));
  }
}

TEST(Lfr, DegreesPreservedAndMixingNearTarget) {
  transilab::LfrParams params;
  params.n = 1000;
  params.mean_degree = 15.0;
  params.k_max = 45;
  params.n_max = 200;
  params.mu = 0.3;
  const auto result = transilab::lfr_generate(params, Seed{11, 0});
  auto degrees = result.graph.degrees();
  std::sort(degrees.begin(), degrees.end());
  EXPECT_EQ(degrees, result.seed_degrees);
  EXPECT_TRUE(result.graph.is_valid());
  EXPECT_NEAR(result.achieved_mu,
              transilab::mixing_coefficient(result.graph, result.partition), 1e-12);
  EXPECT_TRUE(result.within_tolerance || result.residual_deficit > 0);
  EXPECT_NEAR(result.achieved_mu, 0.3, 0.02);
}

TEST(Lfr, CmSeedReachesLowMixing) {
  transilab::LfrParams params;
  params.n = 5000;
  params.mean_degree = 15.0;
  params.k_max = 45;
  params.n_max = 700;
  params.mu = 0.05;
  const auto result = transilab::lfr_generate(params, Seed{12, 0});
  EXPECT_GE(result.achieved_mu, 0.03);
  EXPECT_LE(result.achieved_mu, 0.07);
}

TEST(Lfr, EffectiveMinimumCommunitySize) {
  transilab::LfrParams params;
  params.n = 500;
  params.basic_model = transilab::BasicModel::kBA;
  params.mean_degree = 30.0;
  params.n_min = 10;
  params.n_max = 200;
  params.mu = 0.5;
  const auto result = transilab::lfr_generate(params, Seed{13, 0});
  EXPECT_EQ(result.effective_n_min, 16);
  for (auto s : result.partition.sizes()) EXPECT_GE(s, 16u);
}

TEST(Lfr, Deterministic) {
  transilab::LfrParams params;
  params.n = 600;
  params.n_max = 150;
  params.basic_model = transilab::BasicModel::kEV;
  const auto a = transilab::lfr_generate(params, Seed{14, 2});
  const auto b = transilab::lfr_generate(params, Seed{14, 2});
  EXPECT_EQ(a.graph.edges(), b.graph.edges());
  EXPECT_EQ(a.partition, b.partition);
}

TEST(Lfr, InvalidParameters) {
  transilab::LfrParams params;
  params.mu = 1.5;
  EXPECT_THROW(transilab::lfr_generate(params, Seed{1, 0}), transilab::Error);
  params.mu = 0.1;
  params.n_max = 5000;
  EXPECT_THROW(transilab::lfr_generate(params, Seed{1, 0}), transilab::Error);
}

}  // namespace
