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

#include <vector>

#include "authlab/counters.hpp"
#include "authlab/group.hpp"

namespace authlab {

// Fixed-length hash output (digest_len bytes of the active params).
struct Digest {
  Bytes bytes;

  bool operator==(const Digest&) const = default;
  std::string hex() const;
  std::size_t size() const { return bytes.size(); }
};

// Hash of an ordered list of parts. Every part is length-prefixed before
// hashing, so the framing is injective: ("ab","c") and ("a","bc") hash
// differently. Tallies one hash.
Digest digest(const std::vector<Bytes>& parts, const GroupParams& g,
              OpCounter* ctr);

// Bytewise XOR; both inputs must have equal length (std::domain_error
// otherwise). Self-inverse. Tallies one XOR.
Digest xor_digest(const Digest& a, const Digest& b, OpCounter* ctr);

// Hash into the order-q subgroup of Z_p^*: reduce the digest mod p and
// square it. Squaring lands in the quadratic residues, whose order is q,
// so exponents act modulo q. The rare 0/1 results are rehashed with a
// counter byte appended. Tallies one hash per digest evaluation.
GroupElement hash_to_group(const Bytes& data, const GroupParams& g,
                           OpCounter* ctr);

// XOR of two variable-length strings, each first normalized to
// digest_len bytes with the raw hash primitive. Used where a protocol
// XORs an identity with a password. Normalization is internal plumbing
// and is not tallied; the surrounding digest() call is.
Bytes hashed_xor(ByteView a, ByteView b, const GroupParams& g);

// Maps a password string to an exponent in [0, q-1] (hash, then reduce
// mod q). Untallied: the mapping is representation plumbing, not a
// protocol hash evaluation.
BigInt password_exponent(ByteView password, const GroupParams& g);

Digest zero_digest(const GroupParams& g);

}  // namespace authlab
