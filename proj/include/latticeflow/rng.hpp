//  Copyright 2026 The Latticeflow Authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.

#ifndef LATTICEFLOW_RNG_HPP_
#define LATTICEFLOW_RNG_HPP_

#include <cstdint>
#include <limits>
#include <random>
#include <vector>

namespace latticeflow {

// Seeded deterministic generator. Bounded draws are hand-rolled because
// std::uniform_int_distribution is implementation-defined, which would make
// traces differ between standard libraries for the same seed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform integer in [lo, hi], both inclusive. Unbiased via rejection.
  std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi) {
    const std::uint64_t range = hi - lo + 1;
    if (range == 0) return engine_();  // full 64-bit range
    std::uint64_t x = engine_();
    std::uint64_t r = x % range;
    while (x - r > std::uint64_t(0) - range) {
      x = engine_();
      r = x % range;
    }
    return lo + r;
  }

  // Uniform double in [0, 1) with 53 bits of precision.
  double uniform_unit() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  // True with probability p. Always consumes exactly one draw.
  bool chance(double p) { return uniform_unit() < p; }

  // Moves a uniformly chosen k-subset into v[0..k), order randomized.
  template <typename T>
  void choose_prefix(std::vector<T>& v, std::size_t k) {
    for (std::size_t i = 0; i < k && i + 1 < v.size(); ++i) {
      const std::size_t j =
          static_cast<std::size_t>(uniform(i, v.size() - 1));
      std::swap(v[i], v[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace latticeflow

#endif  // LATTICEFLOW_RNG_HPP_
