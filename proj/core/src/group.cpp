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

#include "authlab/group.hpp"

#include <boost/multiprecision/integer.hpp>

#include <vector>

namespace authlab {

using boost::multiprecision::powm;

const char* to_string(SecurityLabel label) {
  switch (label) {
    case SecurityLabel::test_tiny: return "test-tiny";
    case SecurityLabel::test_512: return "test-512";
    case SecurityLabel::demo_1024: return "demo-1024";
  }
  return "?";
}

GenerationTimeout::GenerationTimeout(std::uint64_t attempts_,
                                     std::uint64_t budget)
    : std::runtime_error("safe-prime generation exceeded candidate budget (" +
                         std::to_string(attempts_) + " of " +
                         std::to_string(budget) + " candidates examined)"),
      attempts(attempts_) {}

namespace {

const std::vector<std::uint32_t>& small_primes() {
  static const std::vector<std::uint32_t> primes = [] {
    constexpr std::uint32_t kLimit = 50000;
    std::vector<bool> composite(kLimit, false);
    std::vector<std::uint32_t> out;
    for (std::uint32_t i = 2; i < kLimit; ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (std::uint64_t j = std::uint64_t(i) * i; j < kLimit; j += i) {
        composite[j] = true;
      }
    }
    return out;
  }();
  return primes;
}

bool miller_rabin_round(const BigInt& n, const BigInt& base, const BigInt& d,
                        unsigned r) {
  BigInt x = powm(base, d, n);
  if (x == 1 || x == n - 1) return true;
  for (unsigned i = 1; i < r; ++i) {
    x = powm(x, 2, n);
    if (x == n - 1) return true;
  }
  return false;
}

// Searches a window of odd candidates starting at q0 (odd), sieving both
// q and p = 2q + 1 against the small primes first. Returns the first q in
// the window such that q and 2q+1 are both probable primes and q has
// exactly `bits` bits, or nullopt.
std::optional<BigInt> scan_window(const BigInt& q0, unsigned bits, Rng& rng,
                                  std::uint64_t& attempts,
                                  std::uint64_t budget) {
  constexpr std::uint32_t kWindow = 1u << 14;  // odd steps
  std::vector<bool> bad(kWindow, false);
  for (std::uint32_t s : small_primes()) {
    if (s == 2) continue;
    auto rq = static_cast<std::uint32_t>(q0 % s);
    std::uint32_t inv2 = (s + 1) / 2;  // inverse of 2 mod odd s
    // q0 + 2i == 0 (mod s)
    std::uint32_t first_q = std::uint32_t(std::uint64_t(s - rq) * inv2 % s);
    for (std::uint64_t i = first_q; i < kWindow; i += s) bad[i] = true;
    // 2(q0 + 2i) + 1 == 0 (mod s)
    std::uint32_t rp = (2 * rq + 1) % s;
    std::uint32_t inv4 = std::uint32_t(std::uint64_t(inv2) * inv2 % s);
    std::uint32_t first_p = std::uint32_t(std::uint64_t(s - rp) * inv4 % s);
    for (std::uint64_t i = first_p; i < kWindow; i += s) bad[i] = true;
  }
  for (std::uint32_t i = 0; i < kWindow; ++i) {
    if (bad[i]) continue;
    if (++attempts > budget) throw GenerationTimeout(attempts, budget);
    BigInt q = q0 + 2 * BigInt(i);
    if (bit_length(q) != bits) break;  // walked off the top of the range
    // Cheap two-round screen before the full-strength test.
    if (!is_probable_prime(q, rng, 2)) continue;
    BigInt p = 2 * q + 1;
    if (!is_probable_prime(p, rng, 2)) continue;
    if (is_probable_prime(q, rng) && is_probable_prime(p, rng)) return q;
  }
  return std::nullopt;
}

GroupParams tiny_params() {
  return GroupParams{BigInt(23), BigInt(11), 8, SecurityLabel::test_tiny};
}

}  // namespace

bool is_probable_prime(const BigInt& n, Rng& rng, int rounds) {
  if (n < 2) return false;
  for (std::uint32_t s : small_primes()) {
    if (n == s) return true;
    if (n % s == 0) return false;
  }
  BigInt d = n - 1;
  unsigned r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  for (int i = 0; i < rounds; ++i) {
    BigInt base = rng.below(n - 3) + 2;  // [2, n-2]
    if (!miller_rabin_round(n, base, d, r)) return false;
  }
  return true;
}

GroupParams gen_group_params(SecurityLabel label, Rng& rng,
                             const GenOptions& opts) {
  if (label == SecurityLabel::test_tiny) return tiny_params();

  const unsigned p_bits = label == SecurityLabel::test_512 ? 512 : 1024;
  const unsigned q_bits = p_bits - 1;
  std::uint64_t attempts = 0;
  for (;;) {
    BigInt q0 = rng.exact_bits(q_bits) | 1;
    if (auto q = scan_window(q0, q_bits, rng, attempts, opts.max_candidates)) {
      return GroupParams{2 * *q + 1, *q, 20, label};
    }
  }
}

GroupElement mod_exp(const GroupElement& base, const BigInt& exponent,
                     const GroupParams& g, OpCounter* ctr) {
  if (base.value <= 0 || base.value >= g.p) {
    throw std::domain_error("mod_exp: base outside [1, p-1]");
  }
  if (exponent < 0) throw std::domain_error("mod_exp: negative exponent");
  count_exp(ctr);
  return GroupElement{powm(base.value, exponent, g.p)};
}

GroupElement mod_exp(const GroupElement& base, const Scalar& exponent,
                     const GroupParams& g, OpCounter* ctr) {
  return mod_exp(base, exponent.value, g, ctr);
}

GroupElement mod_mul(const GroupElement& a, const GroupElement& b,
                     const GroupParams& g, OpCounter* ctr) {
  count_mul(ctr);
  return GroupElement{a.value * b.value % g.p};
}

namespace {

// Extended Euclid; valid for 0 < b < p with p prime.
BigInt mod_inverse(const BigInt& b, const BigInt& p) {
  BigInt r0 = p, r1 = b;
  BigInt t0 = 0, t1 = 1;
  while (r1 != 0) {
    BigInt quot = r0 / r1;
    BigInt r2 = r0 - quot * r1;
    r0 = r1;
    r1 = r2;
    BigInt t2 = t0 - quot * t1;
    t0 = t1;
    t1 = t2;
  }
  if (t0 < 0) t0 += p;
  return t0;
}

}  // namespace

GroupElement mod_div(const GroupElement& a, const GroupElement& b,
                     const GroupParams& g, OpCounter* ctr) {
  if (b.value % g.p == 0) throw std::domain_error("mod_div: divisor is 0");
  count_mul(ctr);
  return GroupElement{a.value * mod_inverse(b.value % g.p, g.p) % g.p};
}

Scalar sample_exponent(const GroupParams& g, Rng& rng) {
  return Scalar{rng.below(g.q - 1) + 1};
}

std::size_t element_width(const GroupParams& g) {
  return (bit_length(g.p) + 7) / 8;
}

std::size_t scalar_width(const GroupParams& g) {
  return (bit_length(g.q) + 7) / 8;
}

Bytes encode_element(const GroupElement& e, const GroupParams& g) {
  return encode_be(e.value, element_width(g));
}

Bytes encode_scalar(const Scalar& s, const GroupParams& g) {
  return encode_be(s.value, scalar_width(g));
}

std::optional<GroupElement> decode_element(ByteView bytes,
                                           const GroupParams& g) {
  if (bytes.size() != element_width(g)) return std::nullopt;
  BigInt v = decode_be(bytes);
  if (v < 1 || v >= g.p) return std::nullopt;
  return GroupElement{std::move(v)};
}

}  // namespace authlab
