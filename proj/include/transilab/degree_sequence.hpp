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

#ifndef TRANSILAB_DEGREE_SEQUENCE_HPP_
#define TRANSILAB_DEGREE_SEQUENCE_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "transilab/random.hpp"

namespace transilab {

// Discrete power law P(k) ∝ k^-exponent on the integers [lower, upper].
// Sampling inverts the exact normalized CDF.
class BoundedPowerLaw {
 public:
  BoundedPowerLaw(double exponent, int lower, int upper);

  int lower() const { return lower_; }
  int upper() const { return upper_; }
  double exponent() const { return exponent_; }

  double pmf(int k) const;
  double mean() const { return mean_; }

  int operator()(Rng& rng) const;

 private:
  double exponent_;
  int lower_;
  int upper_;
  std::vector<double> cdf_;
  double mean_ = 0.0;
};

struct PowerLawSpec {
  double exponent = 3.0;
  // When target_mean is set, `lower` is only the smallest admissible lower
  // bound; the effective bound is calibrated against the target.
  int lower = 1;
  int upper = 1;
  std::optional<double> target_mean;

  // Throws Error unless exponent > 1 and 1 <= lower <= upper.
  void validate() const;
};

struct DegreeSequence {
  std::vector<std::uint32_t> degrees;
  // Effective support actually sampled from.
  int lower = 0;
  int upper = 0;

  std::size_t size() const { return degrees.size(); }
  std::uint64_t total() const;
  double mean() const;
};

// Integer lower bound in [spec.lower, spec.upper] whose truncated-law mean is
// closest to spec.target_mean. Throws Error if even the best bound misses the
// target by more than 5%.
int calibrate_lower_bound(const PowerLawSpec& spec);

// Draws n i.i.d. degrees. An odd total is repaired by incrementing one
// uniformly chosen node whose degree is below the upper bound.
DegreeSequence sample_power_law_degrees(const PowerLawSpec& spec, std::size_t n,
                                        const Seed& seed);

// Erdős–Gallai test.
bool is_graphical(std::span<const std::uint32_t> degrees);

}  // namespace transilab

#endif  // TRANSILAB_DEGREE_SEQUENCE_HPP_
