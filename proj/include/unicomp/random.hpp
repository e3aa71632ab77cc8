// Copyright 2026 The unicomp Authors. All Rights Reserved.
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

#ifndef UNICOMP_RANDOM_HPP_
#define UNICOMP_RANDOM_HPP_

#include <cmath>
#include <cstdint>
#include <numbers>

namespace unicomp {

// Named substreams. Every draw is a pure function of
// (seed, stream, agent, iteration, draw index).
enum class Stream : std::uint64_t {
  kGraph = 1,
  kInitial = 2,
  kCompressor = 3,
  kNoise = 4,
  kDirection = 5,
  kProblem = 6,
  kVerify = 7,
};

constexpr std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

constexpr std::uint64_t hash_key(std::uint64_t seed, std::uint64_t stream,
                                 std::uint64_t agent,
                                 std::uint64_t iteration) {
  std::uint64_t h = splitmix64(seed);
  h = splitmix64(h ^ (stream * 0xd6e8feb86659fd93ULL));
  h = splitmix64(h ^ (agent * 0xa0761d6478bd642fULL));
  h = splitmix64(h ^ (iteration * 0xe7037ed1a0b428dbULL));
  return h;
}

class CounterRng {
 public:
  CounterRng(std::uint64_t seed, Stream stream, std::uint64_t agent,
             std::uint64_t iteration, std::uint64_t salt = 0)
      : key_(hash_key(seed ^ splitmix64(salt), static_cast<std::uint64_t>(stream),
                      agent, iteration)) {}

  std::uint64_t next_u64() {
    return splitmix64(key_ + 0x632be59bd9b4e019ULL * (++counter_));
  }

  // Uniform on [0, 1).
  double uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // Uniform on (0, 1].
  double uniform_open_zero() { return 1.0 - uniform(); }

  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    const double u1 = uniform_open_zero();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double t = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(t);
    has_spare_ = true;
    return r * std::cos(t);
  }

  double exponential() { return -std::log(uniform_open_zero()); }

  // Uniform integer in [0, bound).
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t v;
    do {
      v = next_u64();
    } while (v >= limit);
    return v % bound;
  }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace unicomp

#endif  // UNICOMP_RANDOM_HPP_
