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

#include "authlab/hash.hpp"

#include <openssl/evp.h>

#include <stdexcept>

namespace authlab {

namespace {

// One-shot SHA-1, truncated to out_len. The tiny test label truncates to
// 8 bytes, which is insecure and exists only to make exhaustive protocol
// runs cheap; both non-tiny labels use the full 20 bytes.
Bytes raw_hash(ByteView data, std::size_t out_len) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int md_len = 0;
  if (out_len > 20) throw std::length_error("raw_hash: out_len > 20");
  if (EVP_Digest(data.data(), data.size(), md, &md_len, EVP_sha1(),
                 nullptr) != 1) {
    throw std::runtime_error("raw_hash: EVP_Digest failed");
  }
  return Bytes(md, md + out_len);
}

}  // namespace

std::string Digest::hex() const { return to_hex(bytes); }

Digest digest(const std::vector<Bytes>& parts, const GroupParams& g,
              OpCounter* ctr) {
  Bytes framed;
  for (const Bytes& part : parts) append_field(framed, part);
  count_hash(ctr);
  return Digest{raw_hash(framed, g.digest_len)};
}

Digest xor_digest(const Digest& a, const Digest& b, OpCounter* ctr) {
  if (a.bytes.size() != b.bytes.size()) {
    throw std::domain_error("xor_digest: length mismatch");
  }
  Digest out{a.bytes};
  for (std::size_t i = 0; i < out.bytes.size(); ++i) out.bytes[i] ^= b.bytes[i];
  count_xor(ctr);
  return out;
}

GroupElement hash_to_group(const Bytes& data, const GroupParams& g,
                           OpCounter* ctr) {
  Bytes input = data;
  for (std::uint8_t round = 0;; ++round) {
    BigInt v = decode_be(digest({input}, g, ctr).bytes) % g.p;
    v = v * v % g.p;  // land in the order-q quadratic-residue subgroup
    if (v > 1) return GroupElement{std::move(v)};
    // 0 or 1 are useless as bases; rehash with a counter byte appended.
    input = data;
    input.push_back(round);
  }
}

Bytes hashed_xor(ByteView a, ByteView b, const GroupParams& g) {
  Bytes ha = raw_hash(a, g.digest_len);
  Bytes hb = raw_hash(b, g.digest_len);
  for (std::size_t i = 0; i < ha.size(); ++i) ha[i] ^= hb[i];
  return ha;
}

BigInt password_exponent(ByteView password, const GroupParams& g) {
  return decode_be(raw_hash(password, g.digest_len)) % g.q;
}

Digest zero_digest(const GroupParams& g) {
  return Digest{Bytes(g.digest_len, 0)};
}

}  // namespace authlab
