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
#include <set>

#include "authlab/channel.hpp"
#include "authlab/clock.hpp"
#include "authlab/outcome.hpp"
#include "authlab/wire.hpp"

// Jiang et al.'s timestamp-based smart-card authentication scheme.
//
// Registration:    B = h(id)^(x + pw) mod p, card stores {B, h, p, q}.
// Login:           C = B / h(id)^pw, D = h(id)^a, W = C^a,
//                  M = h(id || C || D || W || T); send {id, D, M, T}.
// Authentication:  server recomputes C' = h(id)^x, W' = D^x, checks M,
//                  replies {id, h(id || W' || Ts), Ts}; SK = h(W).
// Password change: full login round-trip, then
//                  B' = B * h(id)^pw_new / h(id)^pw_old.
//
// This implementation keeps the scheme's weaknesses intact on purpose:
// the card validates nothing before sending, the identity travels in the
// clear, the server happily re-registers known identities and keeps no
// record of failed logins. The adversary harness depends on each of
// these.

namespace authlab::jiang {

struct Card {
  GroupElement credential;  // B = h(id)^(x+pw)
  GroupParamsPtr params;
};

struct ServerState {
  Scalar master_key;
  std::set<std::string> id_table;
  GroupParamsPtr params;
  SimClock* clock = nullptr;
  std::string party = "server";
  std::int64_t max_delay = 2;  // accepted transmission delay in ticks
  bool allow_duplicate_registration = true;
  bool track_failures = false;
  std::map<std::string, std::uint64_t> failure_counts;  // only if tracking

  PartyClock party_clock() const { return PartyClock{clock, party}; }
};

// Ephemeral client-side state; discard once the session finishes.
struct ClientSession {
  Scalar alpha;
  GroupElement server_key;    // C as computed from the typed password
  GroupElement key_material;  // W = C^alpha
  std::int64_t timestamp = 0;
  std::string id;             // as typed, not necessarily as registered
  GroupParamsPtr params;
};

struct ServerSession {
  GroupElement key_material;  // W' = D^x
  Digest session_key;
  std::string id;
};

// MAC and key derivations, public because a network adversary knows the
// protocol and the harness forges structurally valid values with them.
Digest login_mac(const std::string& id, const GroupElement& server_key,
                 const GroupElement& ephemeral,
                 const GroupElement& key_material, std::int64_t timestamp,
                 const GroupParams& g, OpCounter* ctr);
Digest reply_mac(const std::string& id, const GroupElement& key_material,
                 std::int64_t timestamp, const GroupParams& g, OpCounter* ctr);
Digest session_key(const GroupElement& key_material, const GroupParams& g,
                   OpCounter* ctr);

ServerState setup(GroupParamsPtr params, Rng& rng, SimClock* clock);

// Issues a card for (id, pw). Duplicate identities are accepted unless
// the server was explicitly configured otherwise, in which case this
// rejects with duplicate-id.
Outcome<Card> register_user(ServerState& server, const std::string& id,
                            const std::string& password, OpCounter* ctr);

// Builds the login message. The card has no way to check the input, so
// wrong credentials still produce a (doomed) message.
std::pair<wire::JiangLoginMessage, ClientSession> login(
    const Card& card, const std::string& id, const std::string& password,
    const PartyClock& clock, Rng& rng, OpCounter* ctr);

Outcome<std::pair<wire::JiangServerReply, ServerSession>> authenticate(
    ServerState& server, const wire::JiangLoginMessage& msg, OpCounter* ctr);

// Verifies the server reply; on success returns the session key h(W).
Outcome<Digest> client_finish(const ClientSession& session,
                              const wire::JiangServerReply& reply,
                              const std::string& id, const PartyClock& clock,
                              std::int64_t max_delay, OpCounter* ctr);

// Changing the password requires a complete online login/authentication
// round-trip; the messages go through `channel` so the cost is visible.
// A null server models the server being unreachable.
Status change_password(Card& card, const std::string& id,
                       const std::string& old_password,
                       const std::string& new_password, ServerState* server,
                       Channel& channel, const PartyClock& user_clock,
                       Rng& rng, OpCounter* ctr);

}  // namespace authlab::jiang
