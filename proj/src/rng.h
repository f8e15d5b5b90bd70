// Copyright 2026 The covlll Authors
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

#ifndef COVLLL_SRC_RNG_H_
#define COVLLL_SRC_RNG_H_

#include <cstdint>
#include <initializer_list>
#include <limits>

namespace covlll {

// SplitMix64 (Steele, Lea, Flood). Small state, so a fresh stream per
// (row, tile, generation) costs nothing.
class SplitMix64 {
 public:
  using result_type = uint64_t;

  explicit SplitMix64(uint64_t seed) : state_(seed) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() {
    return std::numeric_limits<result_type>::max();
  }

  result_type operator()() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

 private:
  uint64_t state_;
};

// Counter-style seed derivation: the same key always yields the same stream,
// independent of the order in which streams are requested.
inline uint64_t DeriveSeed(uint64_t seed, std::initializer_list<uint64_t> key) {
  uint64_t h = SplitMix64(seed)();
  for (uint64_t part : key) {
    h = SplitMix64(h ^ (part + 0x632be59bd9b4e019ULL))();
  }
  return h;
}

}  // namespace covlll

#endif  // COVLLL_SRC_RNG_H_
