// Copyright 2026 The mda-solvers Authors.
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

#ifndef MDA_RNG_H_
#define MDA_RNG_H_

#include <cmath>
#include <cstdint>
#include <random>
#include <string_view>

namespace mda {

// Seedable generator with named stream splitting: the pair (seed, purpose)
// selects an independent stream, so concurrent sweeps draw reproducible
// numbers regardless of scheduling. Floating-point draws are derived from
// raw 64-bit words, not std::uniform_real_distribution, to keep byte-level
// reproducibility independent of the standard library.
class Rng {
 public:
  Rng(std::uint64_t seed, std::string_view purpose)
      : gen_(MixSeed(seed, purpose)) {}

  std::uint64_t NextU64() { return gen_(); }

  // Uniform in [0, 1).
  double Uniform() {
    return static_cast<double>(NextU64() >> 11) * 0x1.0p-53;
  }

  double Uniform(double lo, double hi) { return lo + (hi - lo) * Uniform(); }

  // Standard exponential; strictly positive.
  double Exponential() { return -std::log1p(-Uniform()); }

  // Uniform integer in [0, n).
  std::uint64_t Below(std::uint64_t n) { return NextU64() % n; }

 private:
  static std::uint64_t SplitMix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  }

  static std::uint64_t MixSeed(std::uint64_t seed, std::string_view purpose) {
    // FNV-1a over the purpose name, then diffused together with the seed.
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (char c : purpose) {
      h ^= static_cast<unsigned char>(c);
      h *= 0x100000001b3ULL;
    }
    return SplitMix(SplitMix(seed) ^ h);
  }

  std::mt19937_64 gen_;
};

}  // namespace mda

#endif  // MDA_RNG_H_
