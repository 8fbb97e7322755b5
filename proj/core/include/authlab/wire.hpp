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

#include <optional>
#include <string>

#include "authlab/group.hpp"
#include "authlab/hash.hpp"

// Byte-exact wire encoding shared by both schemes and by transcript logs:
// a one-byte tag followed by length-prefixed fields. Group elements use
// the canonical fixed-width big-endian encoding; timestamps are 8-byte
// big-endian two's complement.

namespace authlab::wire {

enum class Tag : std::uint8_t {
  jiang_reg_request = 0x01,
  jiang_login = 0x02,
  jiang_reply = 0x03,
  jiang_card = 0x04,
  prop_reg_request = 0x11,
  prop_login = 0x12,
  prop_reply = 0x13,
  prop_confirm = 0x14,
  prop_partial_card = 0x15,
};

std::optional<Tag> peek_tag(ByteView payload);

// --- Jiang et al.'s scheme ---

// Registration travels over the secure enrollment channel and carries the
// password in the clear; that is the point of the insider experiment.
struct JiangRegRequest {
  std::string id;
  std::string password;
  bool operator==(const JiangRegRequest&) const = default;
};

struct JiangLoginMessage {
  std::string id;           // real identity, transmitted verbatim
  GroupElement ephemeral;   // h(id)^alpha
  Digest mac;
  std::int64_t timestamp;
  bool operator==(const JiangLoginMessage&) const = default;
};

struct JiangServerReply {
  std::string id;
  Digest mac;
  std::int64_t timestamp;
  bool operator==(const JiangServerReply&) const = default;
};

// --- proposed scheme ---

struct ProposedRegRequest {
  std::string id;
  Digest masked_password;  // W = h(pw || a); the password never leaves the user
  bool operator==(const ProposedRegRequest&) const = default;
};

struct ProposedLoginMessage {
  Bytes nid;               // pseudonym; the only identifier on the wire
  GroupElement ephemeral;  // h(id)^alpha
  Digest mac;              // M1
  bool operator==(const ProposedLoginMessage&) const = default;
};

struct ProposedReplyMessage {
  GroupElement ephemeral;  // h(id)^beta
  Digest mac;              // M2, binds the server's session key
  bool operator==(const ProposedReplyMessage&) const = default;
};

struct ProposedConfirmMessage {
  Digest mac;  // M3, binds the client's session key
  bool operator==(const ProposedConfirmMessage&) const = default;
};

Bytes encode(const JiangRegRequest& m);
Bytes encode(const JiangLoginMessage& m, const GroupParams& g);
Bytes encode(const JiangServerReply& m);
Bytes encode(const ProposedRegRequest& m);
Bytes encode(const ProposedLoginMessage& m, const GroupParams& g);
Bytes encode(const ProposedReplyMessage& m, const GroupParams& g);
Bytes encode(const ProposedConfirmMessage& m);

// Decoders validate structure, digest lengths and element ranges and
// return nullopt for anything malformed.
std::optional<JiangRegRequest> decode_jiang_reg_request(ByteView payload);
std::optional<JiangLoginMessage> decode_jiang_login(ByteView payload,
                                                    const GroupParams& g);
std::optional<JiangServerReply> decode_jiang_reply(ByteView payload,
                                                   const GroupParams& g);
std::optional<ProposedRegRequest> decode_prop_reg_request(
    ByteView payload, const GroupParams& g);
std::optional<ProposedLoginMessage> decode_prop_login(ByteView payload,
                                                      const GroupParams& g);
std::optional<ProposedReplyMessage> decode_prop_reply(ByteView payload,
                                                      const GroupParams& g);
std::optional<ProposedConfirmMessage> decode_prop_confirm(
    ByteView payload, const GroupParams& g);

}  // namespace authlab::wire
