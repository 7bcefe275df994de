// Copyright 2026 The Cardlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CARDLAB_RNG_H_
#define CARDLAB_RNG_H_

#include <cstdint>
#include <random>
#include <span>
#include <string_view>
#include <utility>

namespace cardlab {

using Seed = std::uint64_t;

// SplitMix64 finalizer.
std::uint64_t mix64(std::uint64_t x);

// Independent stream seed for (seed, index); used for per-match and
// per-seat streams.
Seed derive_seed(Seed seed, std::uint64_t index);

// Portable generator: std::mt19937_64 has a fully specified output sequence,
// and every distribution here is implemented locally so results do not
// depend on the standard library vendor.
class Rng {
 public:
  explicit Rng(Seed seed = 0) : engine_(mix64(seed)) {}

  std::uint64_t next() { return engine_(); }

  // Uniform integer in [0, n). n must be > 0.
  std::uint64_t uniform(std::uint64_t n);

  // Uniform double in [0, 1).
  double uniform_real() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

  template <typename T>
  void shuffle(std::span<T> items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::size_t j = uniform(i);
      std::swap(items[i - 1], items[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

// FNV-1a, for state fingerprints.
std::uint64_t fnv1a(std::string_view data);

}  // namespace cardlab

#endif  // CARDLAB_RNG_H_
