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

#include <map>

#include "authlab/outcome.hpp"
#include "authlab/wire.hpp"

// Nonce-based mutual authentication with session-key verification, local
// password change and card revocation.
//
// Registration: user picks nonce a, sends (id, W = h(pw || a)); server
// keeps record N || id_sc || id under pseudonym nid and returns
// {nid, B = X xor W} with X = h(id || N || id_sc || x). The user adds
// L = a xor h(id xor pw) and V = h(id || a || pw) to the card.
//
// Login/AKA: the card first checks V locally and sends nothing on bad
// input. Then, with fresh alpha/beta, D_i = h(id)^alpha, D_s = h(id)^beta,
// K = h(id)^(alpha*beta), SK = h(id || K || X); M2 and M3 confirm SK in
// both directions.
//
// Neither the card nor any transmitted message contains the identity; a
// login is linkable only through the static pseudonym nid.

namespace authlab::proposed {

inline constexpr std::size_t kNidLen = 16;
inline constexpr std::size_t kCardIdLen = 16;

struct Card {
  Bytes nid;            // pseudonym, the card's wire identifier
  Digest masked_secret; // B = X xor W
  Digest masked_nonce;  // L = a xor h(id xor pw)
  Digest verifier;      // V = h(id || a || pw)
  GroupParamsPtr params;
};

// Server-issued half of a card, before the user adds L and V.
struct PartialCard {
  Bytes nid;
  Digest masked_secret;
  bool operator==(const PartialCard&) const = default;
};

enum class RecordStatus : std::uint8_t { active = 0, revoked = 1 };

struct UserRecord {
  Bytes nid;
  std::uint64_t reissue_count = 0;  // N
  Bytes card_id;                    // id_sc, secret card identity
  std::string id;
  RecordStatus status = RecordStatus::active;

  bool operator==(const UserRecord&) const = default;
};

// Record table is keyed by pseudonym (lookups during login); the id
// index serves registration and revocation. Reads may run concurrently;
// registration and revocation need exclusive access.
struct ServerState {
  Scalar master_key;
  GroupParamsPtr params;
  std::map<Bytes, UserRecord> records;          // nid -> record
  std::map<std::string, std::uint64_t> id_index;  // id -> N of active record

  bool operator==(const ServerState& o) const {
    return master_key == o.master_key && *params == *o.params &&
           records == o.records && id_index == o.id_index;
  }
};

using RegistrationRequest = wire::ProposedRegRequest;

struct ClientSession {
  Scalar alpha;
  std::string id;
  Digest user_key;  // X
  GroupElement ephemeral;  // D_i
  GroupParamsPtr params;
};

struct ServerSession {
  Scalar beta;
  std::string id;
  Bytes nid;
  Digest user_key;             // X
  GroupElement shared;         // K = D_i^beta
  GroupElement ephemeral_user;    // D_i
  GroupElement ephemeral_server;  // D_s
  Digest session_key;
  GroupParamsPtr params;
};

struct BeginRegistration {
  RegistrationRequest request;
  Digest user_secret;  // nonce a; never leaves the user
};

struct ClientFinish {
  wire::ProposedConfirmMessage confirm;
  Digest session_key;
};

// The scheme's derivations, public so the adversary harness can mount
// guessing and forgery attempts with the genuine constructions.
Digest id_pw_mask(const std::string& id, const std::string& password,
                  const GroupParams& g, OpCounter* ctr);  // h(id xor pw)
Digest masked_password(const std::string& password, const Digest& user_secret,
                       const GroupParams& g, OpCounter* ctr);  // W
Digest card_verifier(const std::string& id, const Digest& user_secret,
                     const std::string& password, const GroupParams& g,
                     OpCounter* ctr);  // V
Digest user_key_digest(const std::string& id, std::uint64_t reissue_count,
                       const Bytes& card_id, const Scalar& master_key,
                       const GroupParams& g, OpCounter* ctr);  // X
Digest login_mac(const std::string& id, const GroupElement& ephemeral,
                 const Digest& user_key, const GroupParams& g,
                 OpCounter* ctr);  // M1
Digest session_key_digest(const std::string& id, const GroupElement& shared,
                          const Digest& user_key, const GroupParams& g,
                          OpCounter* ctr);  // SK
Digest reply_mac(const std::string& id, const Digest& session_key,
                 const GroupElement& ephemeral_user,
                 const GroupElement& ephemeral_server, const GroupParams& g,
                 OpCounter* ctr);  // M2
Digest confirm_mac(const std::string& id, const Digest& session_key,
                   const GroupElement& shared,
                   const GroupElement& ephemeral_server, const GroupParams& g,
                   OpCounter* ctr);  // M3

ServerState setup(GroupParamsPtr params, Rng& rng);

BeginRegistration begin_registration(const std::string& id,
                                     const std::string& password,
                                     const GroupParams& g, Rng& rng,
                                     OpCounter* ctr);

// Rejects with duplicate-id when the identity already has an active
// record ("asks for a new identity").
Outcome<PartialCard> server_register(ServerState& server,
                                     const RegistrationRequest& request,
                                     Rng& rng, OpCounter* ctr);

Card finalize_card(const PartialCard& partial, const std::string& id,
                   const std::string& password, const Digest& user_secret,
                   GroupParamsPtr params, OpCounter* ctr);

// Verifies the credentials on-card before anything is sent. Wrong id,
// wrong password and both report the same bad-credentials, so the card
// cannot be used as an identity-confirmation oracle.
Outcome<std::pair<wire::ProposedLoginMessage, ClientSession>> login_start(
    const Card& card, const std::string& id, const std::string& password,
    Rng& rng, OpCounter* ctr);

Outcome<std::pair<wire::ProposedReplyMessage, ServerSession>> server_respond(
    ServerState& server, const wire::ProposedLoginMessage& msg, Rng& rng,
    OpCounter* ctr);

Outcome<ClientFinish> client_finish(const ClientSession& session,
                                    const wire::ProposedReplyMessage& reply,
                                    OpCounter* ctr);

Outcome<Digest> server_confirm(const ServerSession& session,
                               const wire::ProposedConfirmMessage& confirm,
                               OpCounter* ctr);

// Entirely local: no server, no messages. Wrong credentials leave the
// card untouched.
Status change_password(Card& card, const std::string& id,
                       const std::string& old_password,
                       const std::string& new_password, OpCounter* ctr);

// Revokes the identity's active card and issues a fresh one under a new
// pseudonym and incremented reissue counter. The old pseudonym stops
// resolving, so a lost card cannot log in anymore.
Outcome<PartialCard> revoke_and_reissue(ServerState& server,
                                        const std::string& id,
                                        const RegistrationRequest& request,
                                        Rng& rng, OpCounter* ctr);

// Versioned binary card blob (nid, B, L, V, params label).
Bytes export_card(const Card& card);
std::optional<Card> import_card(ByteView blob, GroupParamsPtr params);

}  // namespace authlab::proposed
