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

#include <memory>
#include <stdexcept>

#include "authlab/bigint.hpp"
#include "authlab/counters.hpp"
#include "authlab/rng.hpp"

namespace authlab {

// Safe-prime group: p = 2q + 1 with p, q prime. Exponentiation is done in
// the order-q subgroup of quadratic residues, so exponent arithmetic is
// well-defined modulo q.
enum class SecurityLabel : std::uint8_t {
  test_tiny = 0,  // p = 23, q = 11, truncated hash. Insecure, test-only.
  test_512 = 1,
  demo_1024 = 2,
};

const char* to_string(SecurityLabel label);

struct GroupParams {
  BigInt p;
  BigInt q;
  std::size_t digest_len = 0;  // hash output length in bytes
  SecurityLabel label = SecurityLabel::test_tiny;

  bool operator==(const GroupParams&) const = default;
};

using GroupParamsPtr = std::shared_ptr<const GroupParams>;

// Element of Z_p^*, value in [1, p-1]. Interpreted relative to the params
// every operation takes alongside it.
struct GroupElement {
  BigInt value;
  bool operator==(const GroupElement&) const = default;
};

// Exponent in [1, q-1].
struct Scalar {
  BigInt value;
  bool operator==(const Scalar&) const = default;
};

struct GenOptions {
  // Upper bound on sieved candidates examined before giving up.
  std::uint64_t max_candidates = 4'000'000;
};

// Raised when safe-prime generation exhausts its candidate budget.
class GenerationTimeout : public std::runtime_error {
 public:
  GenerationTimeout(std::uint64_t attempts, std::uint64_t budget);
  std::uint64_t attempts;
};

// Miller-Rabin with `rounds` random bases; error probability below
// 4^-rounds (rounds = 32 gives < 2^-64).
bool is_probable_prime(const BigInt& n, Rng& rng, int rounds = 32);

// test_tiny returns the fixed pair (p=23, q=11). The other labels search
// for a fresh safe prime of exactly 512 / 1024 bits using `rng`.
GroupParams gen_group_params(SecurityLabel label, Rng& rng,
                             const GenOptions& opts = {});

// base^exponent mod p. exponent must be non-negative; base must be in
// [1, p-1]. Tallies one exponentiation.
GroupElement mod_exp(const GroupElement& base, const BigInt& exponent,
                     const GroupParams& g, OpCounter* ctr);
GroupElement mod_exp(const GroupElement& base, const Scalar& exponent,
                     const GroupParams& g, OpCounter* ctr);

// a * b mod p / a * b^-1 mod p. Each tallies one multiplication.
GroupElement mod_mul(const GroupElement& a, const GroupElement& b,
                     const GroupParams& g, OpCounter* ctr);
GroupElement mod_div(const GroupElement& a, const GroupElement& b,
                     const GroupParams& g, OpCounter* ctr);

// Uniform over [1, q-1].
Scalar sample_exponent(const GroupParams& g, Rng& rng);

// Fixed-width big-endian encoding; width is the byte length of p, so a
// value has exactly one encoding.
std::size_t element_width(const GroupParams& g);
std::size_t scalar_width(const GroupParams& g);
Bytes encode_element(const GroupElement& e, const GroupParams& g);
Bytes encode_scalar(const Scalar& s, const GroupParams& g);

// Validates the range invariant; nullopt for values outside [1, p-1].
std::optional<GroupElement> decode_element(ByteView bytes,
                                           const GroupParams& g);

}  // namespace authlab
