// Copyright 2026 The stablearn Authors
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

#ifndef STABLEARN_RNG_HPP_
#define STABLEARN_RNG_HPP_

#include <cstdint>
#include <string_view>

namespace stablearn {

// Counter-based pseudorandom generator (SplitMix64 output function over a
// keyed counter). Deterministic across platforms and compilers, which the
// standard <random> distributions are not, so all randomness in this library
// flows through this type.
//
// Independent streams are derived by hashing a text label (and optionally an
// index) into the key. The same (seed, label, index) always yields the same
// stream regardless of how many draws other streams have consumed.
class Rng {
 public:
  explicit Rng(std::uint64_t key) : key_(key) {}

  // Derives an independent stream from a label such as "group" or "copy".
  Rng stream(std::string_view label) const {
    return Rng(mix(key_ ^ fnv1a(label)));
  }
  Rng stream(std::string_view label, std::uint64_t index) const {
    return Rng(mix(mix(key_ ^ fnv1a(label)) + index * kGamma));
  }

  std::uint64_t next_u64() { return mix(key_ + (++ctr_) * kGamma); }

  // Uniform in [0, bound). bound must be nonzero.
  std::uint64_t next_below(std::uint64_t bound) {
    // Rejection sampling over the largest multiple of bound keeps the draw
    // exactly uniform.
    const std::uint64_t limit = bound * (~std::uint64_t{0} / bound);
    std::uint64_t v = next_u64();
    while (v >= limit) v = next_u64();
    return v % bound;
  }

  bool next_bit() { return next_u64() >> 63; }

  // Uniform in [0, 1) with 53 bits of precision.
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

 private:
  static constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ULL;

  static constexpr std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  static constexpr std::uint64_t fnv1a(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (char c : s) {
      h ^= static_cast<unsigned char>(c);
      h *= 0x100000001b3ULL;
    }
    return h;
  }

  std::uint64_t key_;
  std::uint64_t ctr_ = 0;
};

}  // namespace stablearn

#endif  // STABLEARN_RNG_HPP_
