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

#include "authlab/rng.hpp"

#include <stdexcept>

namespace authlab {

namespace {

// splitmix64; used only to derive substream seeds.
std::uint64_t mix(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

}  // namespace

Rng::Rng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

std::uint64_t Rng::next_word() { return engine_(); }

Bytes Rng::bytes(std::size_t n) {
  Bytes out;
  out.reserve(n);
  while (out.size() < n) {
    std::uint64_t w = next_word();
    for (int i = 0; i < 8 && out.size() < n; ++i) {
      out.push_back(static_cast<std::uint8_t>(w >> (8 * i)));
    }
  }
  return out;
}

BigInt Rng::below(const BigInt& bound) {
  if (bound <= 0) throw std::invalid_argument("Rng::below: bound must be > 0");
  unsigned bits = bit_length(bound);
  BigInt mask = (BigInt(1) << bits) - 1;
  for (;;) {
    BigInt v = 0;
    for (unsigned got = 0; got < bits; got += 64) {
      v <<= 64;
      v |= next_word();
    }
    v &= mask;
    if (v < bound) return v;
  }
}

BigInt Rng::exact_bits(unsigned bits) {
  if (bits == 0) throw std::invalid_argument("Rng::exact_bits: bits == 0");
  BigInt v = 0;
  for (unsigned got = 0; got < bits; got += 64) {
    v <<= 64;
    v |= next_word();
  }
  v &= (BigInt(1) << bits) - 1;
  v |= BigInt(1) << (bits - 1);
  return v;
}

Rng Rng::fork(std::uint64_t salt) const {
  return Rng(mix(seed_ ^ mix(salt)));
}

}  // namespace authlab
