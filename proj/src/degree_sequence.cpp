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

#include "transilab/degree_sequence.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <string>

#include "transilab/error.hpp"

namespace transilab {

BoundedPowerLaw::BoundedPowerLaw(double exponent, int lower, int upper)
    : exponent_(exponent), lower_(lower), upper_(upper) {
  if (!(exponent > 1.0)) throw Error("power-law exponent must exceed 1");
  if (lower < 1 || upper < lower) {
    throw Error("power-law support [" + std::to_string(lower) + ", " +
                std::to_string(upper) + "] is infeasible");
  }
  cdf_.reserve(static_cast<std::size_t>(upper - lower + 1));
  double total = 0.0;
  double weighted = 0.0;
  for (int k = lower; k <= upper; ++k) {
    const double w = std::pow(static_cast<double>(k), -exponent);
    total += w;
    weighted += w * k;
    cdf_.push_back(total);
  }
  for (double& c : cdf_) c /= total;
  cdf_.back() = 1.0;
  mean_ = weighted / total;
}

double BoundedPowerLaw::pmf(int k) const {
  if (k < lower_ || k > upper_) return 0.0;
  const auto i = static_cast<std::size_t>(k - lower_);
  return i == 0 ? cdf_[0] : cdf_[i] - cdf_[i - 1];
}

int BoundedPowerLaw::operator()(Rng& rng) const {
  const double u = uniform_real(rng);
  const auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
  const auto i = std::min<std::size_t>(static_cast<std::size_t>(it - cdf_.begin()),
                                       cdf_.size() - 1);
  return lower_ + static_cast<int>(i);
}

void PowerLawSpec::validate() const {
  if (!(exponent > 1.0)) throw Error("power-law exponent must exceed 1");
  if (lower < 1) throw Error("power-law lower bound must be at least 1");
  if (upper < lower) {
    throw Error("power-law upper bound " + std::to_string(upper) +
                " is below lower bound " + std::to_string(lower));
  }
  if (target_mean && !(*target_mean > 0.0)) throw Error("target mean must be positive");
}

std::uint64_t DegreeSequence::total() const {
  return std::accumulate(degrees.begin(), degrees.end(), std::uint64_t{0});
}

double DegreeSequence::mean() const {
  return degrees.empty() ? 0.0 : static_cast<double>(total()) / degrees.size();
}

int calibrate_lower_bound(const PowerLawSpec& spec) {
  spec.validate();
  if (!spec.target_mean) return spec.lower;
  const double target = *spec.target_mean;
  int best = spec.lower;
  double best_gap = std::abs(BoundedPowerLaw(spec.exponent, spec.lower, spec.upper).mean() - target);
  for (int lower = spec.lower + 1; lower <= spec.upper; ++lower) {
    const double gap = std::abs(BoundedPowerLaw(spec.exponent, lower, spec.upper).mean() - target);
    if (gap < best_gap) {
      best_gap = gap;
      best = lower;
    }
  }
  if (best_gap > 0.05 * target) {
    throw Error("no lower bound in [" + std::to_string(spec.lower) + ", " +
                std::to_string(spec.upper) + "] reaches mean degree " +
                std::to_string(target) + " within 5%");
  }
  return best;
}

DegreeSequence sample_power_law_degrees(const PowerLawSpec& spec, std::size_t n,
                                        const Seed& seed) {
  if (n < 2) throw Error("degree sequence needs at least 2 nodes");
  const int lower = calibrate_lower_bound(spec);
  const BoundedPowerLaw law(spec.exponent, lower, spec.upper);
  Rng rng = make_rng(seed);

  DegreeSequence out;
  out.lower = lower;
  out.upper = spec.upper;
  out.degrees.resize(n);
  for (auto& k : out.degrees) k = static_cast<std::uint32_t>(law(rng));

  if (out.total() % 2 == 1) {
    std::vector<std::size_t> candidates;
    for (std::size_t i = 0; i < n; ++i) {
      if (out.degrees[i] < static_cast<std::uint32_t>(spec.upper)) candidates.push_back(i);
    }
    if (candidates.empty()) {
      throw Error("odd degree sum cannot be repaired: every degree is at the upper bound");
    }
    ++out.degrees[candidates[uniform_index(rng, candidates.size())]];
  }
  return out;
}

bool is_graphical(std::span<const std::uint32_t> degrees) {
  std::vector<std::uint64_t> d(degrees.begin(), degrees.end());
  std::sort(d.begin(), d.end(), std::greater<>());
  const std::uint64_t total = std::accumulate(d.begin(), d.end(), std::uint64_t{0});
  if (total % 2 != 0) return false;
  const std::size_t n = d.size();
  if (n > 0 && d[0] >= n) return false;
  // suffix_min[k] = sum_{i>=k} min(d_i, k) evaluated with a moving pointer.
  std::vector<std::uint64_t> suffix(n + 1, 0);
  for (std::size_t i = n; i-- > 0;) suffix[i] = suffix[i + 1] + d[i];
  std::uint64_t lhs = 0;
  std::size_t split = n;  // first index with d[i] < k+1 among i > k
  for (std::size_t k = 0; k < n; ++k) {
    lhs += d[k];
    const std::uint64_t kk = k + 1;
    while (split > 0 && d[split - 1] < kk) --split;
    // indices in (k, n): those >= split have d < kk and contribute d_i,
    // those in (k, split) contribute kk.
    const std::size_t start = std::max(split, k + 1);
    const std::uint64_t capped = (start > k + 1 ? (start - k - 1) * kk : 0) + suffix[start];
    if (lhs > kk * (kk - 1) + capped) return false;
  }
  return true;
}

}  // namespace transilab
