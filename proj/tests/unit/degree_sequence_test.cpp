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


#include <cmath>
#include <map>
#include <numeric>

#include <boost/math/distributions/chi_squared.hpp>
#include <gtest/gtest.h>

#include "../support/oracles.hpp"
#include "transilab/degree_sequence.hpp"
#include "transilab/error.hpp"

namespace {

using transilab::PowerLawSpec;
using transilab::Seed;

// Exact mean of P(k) ∝ k^-g on [lo, hi], summed directly.
double zeta_mean(double g, int lo, int hi) {
  double num = 0.0, den = 0.0;
  for (int k = lo; k <= hi; ++k) {
    num += std::pow(k, 1.0 - g);
    den += std::pow(k, -g);
  }
  return num / den;
}

TEST(BoundedPowerLaw, PmfMatchesDirectNormalization) {
  const transilab::BoundedPowerLaw law(2.5, 3, 20);
  double den = 0.0;
  for (int k = 3; k <= 20; ++k) den += std::pow(k, -2.5);
  double total = 0.0;
  for (int k = 3; k <= 20; ++k) {
    EXPECT_NEAR(law.pmf(k), std::pow(k, -2.5) / den, 1e-14);
    total += law.pmf(k);
  }
  EXPECT_NEAR(total, 1.0, 1e-12);
  EXPECT_EQ(law.pmf(2), 0.0);
  EXPECT_EQ(law.pmf(21), 0.0);
  EXPECT_NEAR(law.mean(), zeta_mean(2.5, 3, 20), 1e-12);
}

TEST(PowerLawSpec, Validation) {
  EXPECT_THROW((PowerLawSpec{1.0, 1, 5, {}}).validate(), transilab::Error);
  EXPECT_THROW((PowerLawSpec{3.0, 0, 5, {}}).validate(), transilab::Error);
  EXPECT_THROW((PowerLawSpec{3.0, 6, 5, {}}).validate(), transilab::Error);
  EXPECT_NO_THROW((PowerLawSpec{3.0, 2, 2, {}}).validate());
}

TEST(SamplePowerLaw, DegenerateSupport) {
  const auto seq = transilab::sample_power_law_degrees({3.0, 2, 2, {}}, 5, Seed{1, 0});
  EXPECT_EQ(seq.degrees, (std::vector<std::uint32_t>(5, 2)));
}

TEST(SamplePowerLaw, ParityInfeasible) {
  EXPECT_THROW(transilab::sample_power_law_degrees({3.0, 3, 3, {}}, 5, Seed{1, 0}),
               transilab::Error);
}

TEST(SamplePowerLaw, NeedsTwoNodes) {
  EXPECT_THROW(transilab::sample_power_law_degrees({3.0, 1, 5, {}}, 1, Seed{1, 0}),
               transilab::Error);
}

TEST(SamplePowerLaw, EvenTotalWithinBounds) {
  for (std::uint64_t r = 0; r < 20; ++r) {
    const auto seq = transilab::sample_power_law_degrees({2.2, 1, 30, {}}, 101, Seed{5, r});
    EXPECT_EQ(seq.total() % 2, 0u);
    for (auto k : seq.degrees) {
      EXPECT_GE(k, 1u);
      EXPECT_LE(k, 30u);
    }
  }
}

TEST(SamplePowerLaw, CalibratedLowerBoundIsClosestMean) {
  const PowerLawSpec spec{3.0, 1, 45, 15.0};
  const int lower = transilab::calibrate_lower_bound(spec);
  double best_gap = 1e9;
  int best = 0;
  for (int lo = 1; lo <= 45; ++lo) {
    const double gap = std::abs(zeta_mean(3.0, lo, 45) - 15.0);
    if (gap < best_gap) {
      best_gap = gap;
      best = lo;
    }
  }
  EXPECT_EQ(lower, best);
  EXPECT_LE(best_gap, 0.05 * 15.0);
}

TEST(SamplePowerLaw, MeanDegreeWithinFivePercent) {
  // Exact mean of the calibrated law must already be within 5% of 15.
  const PowerLawSpec spec{3.0, 1, 45, 15.0};
  const double exact = zeta_mean(3.0, transilab::calibrate_lower_bound(spec), 45);
  ASSERT_NEAR(exact, 15.0, 0.75);
  const auto seq = transilab::sample_power_law_degrees(spec, 5000, Seed{3, 0});
  EXPECT_GE(seq.mean(), 14.25);
  EXPECT_LE(seq.mean(), 15.75);
}

TEST(SamplePowerLaw, UnreachableMeanThrows) {
  // No bound on [1, 15] reaches a mean of 20.
  EXPECT_THROW(transilab::calibrate_lower_bound({3.0, 1, 15, 20.0}), transilab::Error);
  // Lower bounds 3 and 4 give means 4.41 and 5.78, both more than 5% from 5.
  EXPECT_THROW(transilab::sample_power_law_degrees({3.0, 2, 15, 5.0}, 100, Seed{1, 0}),
               transilab::Error);
}

TEST(SamplePowerLaw, Deterministic) {
  const PowerLawSpec spec{3.0, 1, 90, 30.0};
  const auto a = transilab::sample_power_law_degrees(spec, 1000, Seed{42, 3});
  const auto b = transilab::sample_power_law_degrees(spec, 1000, Seed{42, 3});
  const auto c = transilab::sample_power_law_degrees(spec, 1000, Seed{42, 4});
  EXPECT_EQ(a.degrees, b.degrees);
  EXPECT_NE(a.degrees, c.degrees);
}

TEST(SamplePowerLaw, HistogramFitsTruncatedZeta) {
  constexpr int kLower = 1, kUpper = 50;
  constexpr std::size_t kN = 100000;
  const auto seq = transilab::sample_power_law_degrees({3.0, kLower, kUpper, {}}, kN, Seed{9, 0});
  std::map<int, double> observed;
  for (auto k : seq.degrees) observed[static_cast<int>(k)] += 1.0;

  double den = 0.0;
  for (int k = kLower; k <= kUpper; ++k) den += std::pow(k, -3.0);
  // Pool the tail so that every bin expects at least 5 draws.
  std::vector<std::pair<double, double>> bins;  // (observed, expected)
  double obs = 0.0, exp = 0.0;
  for (int k = kLower; k <= kUpper; ++k) {
    obs += observed[k];
    exp += kN * std::pow(k, -3.0) / den;
    if (exp >= 5.0 && k < kUpper) {
      bins.emplace_back(obs, exp);
      obs = exp = 0.0;
    }
  }
  if (exp > 0.0) {
    if (exp < 5.0 && !bins.empty()) {
      bins.back().first += obs;
      bins.back().second += exp;
    } else {
      bins.emplace_back(obs, exp);
    }
  }
  double chi2 = 0.0;
  for (auto [o, e] : bins) chi2 += (o - e) * (o - e) / e;
  const boost::math::chi_squared dist(static_cast<double>(bins.size() - 1));
  const double p_value = 1.0 - boost::math::cdf(dist, chi2);
  EXPECT_GT(p_value, 0.01) << "chi2=" << chi2 << " bins=" << bins.size();
}

TEST(ErdosGallai, AgreesWithExhaustiveEnumeration) {
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto realizable = oracle::realizable_sequences(n);
    // Every non-decreasing sequence with entries in [0, n-1].
    std::vector<std::uint32_t> seq(n, 0);
    for (;;) {
      const bool expected = std::binary_search(realizable.begin(), realizable.end(), seq);
      EXPECT_EQ(transilab::is_graphical(seq), expected);
      // Order must not matter.
      std::vector<std::uint32_t> reversed(seq.rbegin(), seq.rend());
      EXPECT_EQ(transilab::is_graphical(reversed), expected);
      std::size_t i = n;
      while (i > 0 && seq[i - 1] == n - 1) --i;
      if (i == 0) break;
      ++seq[i - 1];
      for (std::size_t j = i; j < n; ++j) seq[j] = seq[i - 1];
    }
  }
}

TEST(ErdosGallai, Examples) {
  EXPECT_TRUE(transilab::is_graphical(std::vector<std::uint32_t>{3, 3, 3, 3}));
  EXPECT_FALSE(transilab::is_graphical(std::vector<std::uint32_t>{1, 1, 1}));
  EXPECT_FALSE(transilab::is_graphical(std::vector<std::uint32_t>{3, 3, 1, 1}));
  EXPECT_TRUE(transilab::is_graphical(std::vector<std::uint32_t>{}));
}

}  // namespace
