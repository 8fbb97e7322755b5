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

#include "authlab/wire.hpp"

namespace authlab::wire {

namespace {

constexpr std::size_t kNidLen = 16;

Bytes with_tag(Tag tag) { return Bytes{static_cast<std::uint8_t>(tag)}; }

void append_timestamp(Bytes& out, std::int64_t t) {
  Bytes field;
  append_u64_be(field, static_cast<std::uint64_t>(t));
  append_field(out, field);
}

std::optional<ByteReader> open(ByteView payload, Tag expected) {
  ByteReader r(payload);
  auto tag = r.read_u8();
  if (!tag || *tag != static_cast<std::uint8_t>(expected)) return std::nullopt;
  return r;
}

std::optional<std::int64_t> read_timestamp(ByteReader& r) {
  auto field = r.read_field();
  if (!field || field->size() != 8) return std::nullopt;
  return static_cast<std::int64_t>(decode_be(*field).convert_to<std::uint64_t>());
}

std::optional<Digest> read_digest(ByteReader& r, const GroupParams& g) {
  auto field = r.read_field();
  if (!field || field->size() != g.digest_len) return std::nullopt;
  return Digest{std::move(*field)};
}

std::optional<GroupElement> read_element(ByteReader& r, const GroupParams& g) {
  auto field = r.read_field();
  if (!field) return std::nullopt;
  return decode_element(*field, g);
}

}  // namespace

std::optional<Tag> peek_tag(ByteView payload) {
  if (payload.empty()) return std::nullopt;
  switch (payload[0]) {
    case 0x01: case 0x02: case 0x03: case 0x04:
    case 0x11: case 0x12: case 0x13: case 0x14: case 0x15:
      return static_cast<Tag>(payload[0]);
    default:
      return std::nullopt;
  }
}

Bytes encode(const JiangRegRequest& m) {
  Bytes out = with_tag(Tag::jiang_reg_request);
  append_field(out, to_bytes(m.id));
  append_field(out, to_bytes(m.password));
  return out;
}

Bytes encode(const JiangLoginMessage& m, const GroupParams& g) {
  Bytes out = with_tag(Tag::jiang_login);
  append_field(out, to_bytes(m.id));
  append_field(out, encode_element(m.ephemeral, g));
  append_field(out, m.mac.bytes);
  append_timestamp(out, m.timestamp);
  return out;
}

Bytes encode(const JiangServerReply& m) {
  Bytes out = with_tag(Tag::jiang_reply);
  append_field(out, to_bytes(m.id));
  append_field(out, m.mac.bytes);
  append_timestamp(out, m.timestamp);
  return out;
}

Bytes encode(const ProposedRegRequest& m) {
  Bytes out = with_tag(Tag::prop_reg_request);
  append_field(out, to_bytes(m.id));
  append_field(out, m.masked_password.bytes);
  return out;
}

Bytes encode(const ProposedLoginMessage& m, const GroupParams& g) {
  Bytes out = with_tag(Tag::prop_login);
  append_field(out, m.nid);
  append_field(out, encode_element(m.ephemeral, g));
  append_field(out, m.mac.bytes);
  return out;
}

Bytes encode(const ProposedReplyMessage& m, const GroupParams& g) {
  Bytes out = with_tag(Tag::prop_reply);
  append_field(out, encode_element(m.ephemeral, g));
  append_field(out, m.mac.bytes);
  return out;
}

Bytes encode(const ProposedConfirmMessage& m) {
  Bytes out = with_tag(Tag::prop_confirm);
  append_field(out, m.mac.bytes);
  return out;
}

std::optional<JiangRegRequest> decode_jiang_reg_request(ByteView payload) {
  auto r = open(payload, Tag::jiang_reg_request);
  if (!r) return std::nullopt;
  auto id = r->read_field();
  auto pw = r->read_field();
  if (!id || !pw || !r->empty()) return std::nullopt;
  return JiangRegRequest{to_string(*id), to_string(*pw)};
}

std::optional<JiangLoginMessage> decode_jiang_login(ByteView payload,
                                                    const GroupParams& g) {
  auto r = open(payload, Tag::jiang_login);
  if (!r) return std::nullopt;
  auto id = r->read_field();
  if (!id) return std::nullopt;
  auto ephemeral = read_element(*r, g);
  auto mac = read_digest(*r, g);
  auto ts = read_timestamp(*r);
  if (!ephemeral || !mac || !ts || !r->empty()) return std::nullopt;
  return JiangLoginMessage{to_string(*id), *ephemeral, *mac, *ts};
}

std::optional<JiangServerReply> decode_jiang_reply(ByteView payload,
                                                   const GroupParams& g) {
  auto r = open(payload, Tag::jiang_reply);
  if (!r) return std::nullopt;
  auto id = r->read_field();
  if (!id) return std::nullopt;
  auto mac = read_digest(*r, g);
  auto ts = read_timestamp(*r);
  if (!mac || !ts || !r->empty()) return std::nullopt;
  return JiangServerReply{to_string(*id), *mac, *ts};
}

std::optional<ProposedRegRequest> decode_prop_reg_request(
    ByteView payload, const GroupParams& g) {
  auto r = open(payload, Tag::prop_reg_request);
  if (!r) return std::nullopt;
  auto id = r->read_field();
  if (!id) return std::nullopt;
  auto w = read_digest(*r, g);
  if (!w || !r->empty()) return std::nullopt;
  return ProposedRegRequest{to_string(*id), *w};
}

std::optional<ProposedLoginMessage> decode_prop_login(ByteView payload,
                                                      const GroupParams& g) {
  auto r = open(payload, Tag::prop_login);
  if (!r) return std::nullopt;
  auto nid = r->read_field();
  if (!nid || nid->size() != kNidLen) return std::nullopt;
  auto ephemeral = read_element(*r, g);
  auto mac = read_digest(*r, g);
  if (!ephemeral || !mac || !r->empty()) return std::nullopt;
  return ProposedLoginMessage{std::move(*nid), *ephemeral, *mac};
}

std::optional<ProposedReplyMessage> decode_prop_reply(ByteView payload,
                                                      const GroupParams& g) {
  auto r = open(payload, Tag::prop_reply);
  if (!r) return std::nullopt;
  auto ephemeral = read_element(*r, g);
  auto mac = read_digest(*r, g);
  if (!ephemeral || !mac || !r->empty()) return std::nullopt;
  return ProposedReplyMessage{*ephemeral, *mac};
}

std::optional<ProposedConfirmMessage> decode_prop_confirm(
    ByteView payload, const GroupParams& g) {
  auto r = open(payload, Tag::prop_confirm);
  if (!r) return std::nullopt;
  auto mac = read_digest(*r, g);
  if (!mac || !r->empty()) return std::nullopt;
  return ProposedConfirmMessage{*mac};
}

}  // namespace authlab::wire
