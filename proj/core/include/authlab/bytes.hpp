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
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace authlab {

using Bytes = std::vector<std::uint8_t>;
using ByteView = std::span<const std::uint8_t>;

Bytes to_bytes(std::string_view s);
std::string to_string(ByteView b);

std::string to_hex(ByteView b);
std::optional<Bytes> from_hex(std::string_view hex);

void append_u32_be(Bytes& out, std::uint32_t v);
void append_u64_be(Bytes& out, std::uint64_t v);
void append_bytes(Bytes& out, ByteView b);

// Length-prefixed field: u32 big-endian size followed by the raw bytes.
void append_field(Bytes& out, ByteView b);

// Sequential reader over an immutable byte buffer. All read_* methods
// return nullopt on truncation instead of throwing.
class ByteReader {
 public:
  explicit ByteReader(ByteView data) : data_(data) {}

  std::optional<std::uint8_t> read_u8();
  std::optional<std::uint32_t> read_u32_be();
  std::optional<std::uint64_t> read_u64_be();
  std::optional<Bytes> read_exact(std::size_t n);
  std::optional<Bytes> read_field();

  bool empty() const { return pos_ >= data_.size(); }
  std::size_t remaining() const { return data_.size() - pos_; }

 private:
  ByteView data_;
  std::size_t pos_ = 0;
};

// True when `needle` occurs as a contiguous substring of `haystack`.
bool contains_bytes(ByteView haystack, ByteView needle);

}  // namespace authlab
