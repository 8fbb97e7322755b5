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

#include "authlab/bigint.hpp"

#include <stdexcept>

namespace authlab {

unsigned bit_length(const BigInt& n) {
  if (n == 0) return 0;
  return boost::multiprecision::msb(n) + 1;
}

Bytes encode_be(const BigInt& n, std::size_t width) {
  if (n < 0) throw std::length_error("encode_be: negative value");
  if ((bit_length(n) + 7) / 8 > width) {
    throw std::length_error("encode_be: value does not fit width");
  }
  Bytes out(width, 0);
  BigInt v = n;
  for (std::size_t i = width; i-- > 0 && v != 0;) {
    out[i] = static_cast<std::uint8_t>(v & 0xff);
    v >>= 8;
  }
  return out;
}

BigInt decode_be(ByteView bytes) {
  BigInt v = 0;
  for (std::uint8_t b : bytes) {
    v <<= 8;
    v |= b;
  }
  return v;
}

}  // namespace authlab
