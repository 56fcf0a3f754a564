// Copyright 2026 The smti Authors
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

#ifndef SMTI_RNG_HPP_
#define SMTI_RNG_HPP_

#include <cstdint>
#include <random>
#include <span>
#include <utility>

namespace smti {

// Portable random source.
//
// The engine is std::mt19937_64, whose output sequence is fixed by the C++
// standard. The standard distributions are not portable, so the integer and
// real draws below are defined here:
//
//   below(b):  rejection sampling on the raw 64-bit output. Let
//              limit = b * floor((2^64 - 1) / b); draw until x < limit,
//              return x % b.
//   unit():    (x >> 11) * 2^-53, a double in [0, 1).
//   shuffle:   Fisher-Yates from the back, swapping i with below(i + 1).
//
// Two builds on any platform produce identical streams for the same seed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform integer in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = bound * ((~std::uint64_t{0}) / bound);
    std::uint64_t x = engine_();
    while (x >= limit) x = engine_();
    return x % bound;
  }

  int index(std::size_t size) { return static_cast<int>(below(size)); }

  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  bool chance(double p) { return unit() < p; }

  template <typename T>
  void shuffle(std::span<T> items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      const auto j = static_cast<std::size_t>(below(i));
      std::swap(items[i - 1], items[j]);
    }
  }

  // Fresh seed for a sub-computation, drawn from this stream.
  std::uint64_t fork() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

// SplitMix64 finalizer (Steele, Lea, Flood 2014).
constexpr std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Seed of one instance in a benchmark grid:
//   h = mix64(base_seed)
//   h = mix64(h ^ p1_index)
//   h = mix64(h ^ p2_index)
//   h = mix64(h ^ replicate)
constexpr std::uint64_t grid_seed(std::uint64_t base_seed, std::uint64_t p1_index,
                                  std::uint64_t p2_index, std::uint64_t replicate) {
  std::uint64_t h = mix64(base_seed);
  h = mix64(h ^ p1_index);
  h = mix64(h ^ p2_index);
  return mix64(h ^ replicate);
}

}  // namespace smti

#endif  // SMTI_RNG_HPP_
