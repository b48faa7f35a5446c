// Copyright 2026 The wcrte Authors
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

#ifndef WCRTE_RANDOM_H_
#define WCRTE_RANDOM_H_

#include <array>
#include <cstdint>
#include <initializer_list>
#include <limits>

namespace wcrte {

// xoshiro256** generator whose state is derived from a master seed and a
// list of integer keys through SplitMix64. Streams for different key tuples
// are statistically independent, which lets every Monte Carlo replication own
// a stream that does not depend on thread scheduling.
//
// Satisfies UniformRandomBitGenerator.
class RandomStream {
 public:
  using result_type = std::uint64_t;

  explicit RandomStream(std::uint64_t seed);

  // Stream keyed by (master, keys...). Equal inputs give equal streams.
  static RandomStream derive(std::uint64_t master,
                             std::initializer_list<std::uint64_t> keys);

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() {
    return std::numeric_limits<result_type>::max();
  }

  result_type operator()();

  // Uniform variate on the open interval (0, 1) with 53 random bits.
  double uniform();

 private:
  std::array<std::uint64_t, 4> state_;
};

// Seed used whenever the caller does not supply one.
inline constexpr std::uint64_t kDefaultSeed = 0xC0FFEE;

}  // namespace wcrte

#endif  // WCRTE_RANDOM_H_
