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

#ifndef TRANSILAB_RANDOM_HPP_
#define TRANSILAB_RANDOM_HPP_

#include <cstdint>
#include <random>
#include <string_view>

namespace transilab {

using Rng = std::mt19937_64;

// SplitMix64 finalizer; a bijective 64-bit mixer.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// FNV-1a over the bytes of `text`. Stable across platforms and runs.
constexpr std::uint64_t stable_hash(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : text) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return h;
}

// Identifies one random stream. Equal seeds always yield identical streams.
struct Seed {
  std::uint64_t base = 0;
  std::uint64_t replicate = 0;

  // Independent sub-stream for one stage of a composite pipeline.
  constexpr Seed derive(std::uint64_t stream) const {
    return Seed{splitmix64(base ^ splitmix64(stream + 0x5851f42d4c957f2dULL)),
                replicate};
  }

  friend constexpr bool operator==(const Seed&, const Seed&) = default;
};

inline Rng make_rng(const Seed& seed) {
  const std::uint64_t a = splitmix64(seed.base);
  const std::uint64_t b = splitmix64(a ^ splitmix64(seed.replicate + 1));
  std::seed_seq seq{static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(a >> 32),
                    static_cast<std::uint32_t>(b), static_cast<std::uint32_t>(b >> 32)};
  return Rng(seq);
}

// Uniform index in [0, n). n must be positive. Lemire's multiply-and-reject
// method; exact and independent of the standard library's distributions.
template <typename Int>
Int uniform_index(Rng& rng, Int n) {
  __extension__ using U128 = unsigned __int128;
  const auto range = static_cast<std::uint64_t>(n);
  U128 product = static_cast<U128>(rng()) * range;
  auto low = static_cast<std::uint64_t>(product);
  if (low < range) {
    const std::uint64_t threshold = (0 - range) % range;
    while (low < threshold) {
      product = static_cast<U128>(rng()) * range;
      low = static_cast<std::uint64_t>(product);
    }
  }
  return static_cast<Int>(product >> 64);
}

// Uniform double in [0, 1) with 53 random bits.
inline double uniform_real(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

inline bool bernoulli(Rng& rng, double p) { return uniform_real(rng) < p; }

}  // namespace transilab

#endif  // TRANSILAB_RANDOM_HPP_
