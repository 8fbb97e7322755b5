/*
 *    Copyright (c) 2026 The Authlab Authors.
 *
 *    Licensed under the Apache License, Version 2.0 (the "License");
 *    you may not use this file except in compliance with the License.
 *    You may obtain a copy of the License at
 *
 *        http://www.apache.org/licenses/LICENSE-2.0
 *
 *    Unless required by applicable law or agreed to in writing, software
 *    distributed under the License is distributed on an "AS IS" BASIS,
 *    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 *    See the License for the specific language governing permissions and
 *    limitations under the License.
 */

#pragma once

#include <cstdint>
#include <random>

#include "authlab/bigint.hpp"
#include "authlab/bytes.hpp"

namespace authlab {

// Deterministic random source. mt19937_64 is fully specified by the
// standard, so a fixed seed reproduces the same byte stream on every
// platform; scenario transcripts rely on this.
//
// Not cryptographically secure. This laboratory trades a real CSPRNG for
// replayable experiments; see the non-goals in the README.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  std::uint64_t next_word();

  Bytes bytes(std::size_t n);

  // Uniform integer in [0, bound), bound > 0. Rejection-sampled.
  BigInt below(const BigInt& bound);

  // Random integer with exactly `bits` bits (top bit set), bits >= 1.
  BigInt exact_bits(unsigned bits);

  // Independent deterministic substream. Derivation depends only on the
  // original seed and `salt`, not on how much has been drawn so far.
  Rng fork(std::uint64_t salt) const;

  std::uint64_t seed() const { return seed_; }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

}  // namespace authlab
