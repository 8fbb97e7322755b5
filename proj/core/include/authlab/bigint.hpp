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

#include <boost/multiprecision/cpp_int.hpp>

#include "authlab/bytes.hpp"

namespace authlab {

using BigInt = boost::multiprecision::cpp_int;

// Number of bits in n (0 for n == 0).
unsigned bit_length(const BigInt& n);

// Canonical big-endian encoding, zero-padded on the left to `width` bytes.
// Throws std::length_error if n does not fit.
Bytes encode_be(const BigInt& n, std::size_t width);

BigInt decode_be(ByteView bytes);

}  // namespace authlab
