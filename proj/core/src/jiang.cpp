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

#include "authlab/jiang.hpp"

namespace authlab::jiang {

Digest login_mac(const std::string& id, const GroupElement& server_key,
                 const GroupElement& ephemeral,
                 const GroupElement& key_material, std::int64_t timestamp,
                 const GroupParams& g, OpCounter* ctr) {
  Bytes ts;
  append_u64_be(ts, static_cast<std::uint64_t>(timestamp));
  return digest({to_bytes(id), encode_element(server_key, g),
                 encode_element(ephemeral, g),
                 encode_element(key_material, g), ts},
                g, ctr);
}

Digest reply_mac(const std::string& id, const GroupElement& key_material,
                 std::int64_t timestamp, const GroupParams& g,
                 OpCounter* ctr) {
  Bytes ts;
  append_u64_be(ts, static_cast<std::uint64_t>(timestamp));
  return digest({to_bytes(id), encode_element(key_material, g), ts}, g, ctr);
}

Digest session_key(const GroupElement& key_material, const GroupParams& g,
                   OpCounter* ctr) {
  return digest({encode_element(key_material, g)}, g, ctr);
}

ServerState setup(GroupParamsPtr params, Rng& rng, SimClock* clock) {
  ServerState s;
  s.master_key = sample_exponent(*params, rng);
  s.params = std::move(params);
  s.clock = clock;
  return s;
}

Outcome<Card> register_user(ServerState& server, const std::string& id,
                            const std::string& password, OpCounter* ctr) {
  const GroupParams& g = *server.params;
  if (!server.allow_duplicate_registration && server.id_table.contains(id)) {
    return Reject::duplicate_id;
  }
  GroupElement base = hash_to_group(to_bytes(id), g, ctr);
  BigInt exponent = server.master_key.value + password_exponent(to_bytes(password), g);
  Card card{mod_exp(base, exponent, g, ctr), server.params};
  server.id_table.insert(id);
  return card;
}

std::pair<wire::JiangLoginMessage, ClientSession> login(
    const Card& card, const std::string& id, const std::string& password,
    const PartyClock& clock, Rng& rng, OpCounter* ctr) {
  const GroupParams& g = *card.params;
  // No input validation: whatever was typed is used as-is.
  GroupElement base = hash_to_group(to_bytes(id), g, ctr);
  GroupElement pw_part =
      mod_exp(base, password_exponent(to_bytes(password), g), g, ctr);
  GroupElement server_key = mod_div(card.credential, pw_part, g, ctr);
  Scalar alpha = sample_exponent(g, rng);
  GroupElement ephemeral = mod_exp(base, alpha, g, ctr);
  GroupElement key_material = mod_exp(server_key, alpha, g, ctr);
  std::int64_t now = clock.now();
  Digest mac = login_mac(id, server_key, ephemeral, key_material, now, g, ctr);
  return {wire::JiangLoginMessage{id, ephemeral, mac, now},
          ClientSession{alpha, server_key, key_material, now, id, card.params}};
}

Outcome<std::pair<wire::JiangServerReply, ServerSession>> authenticate(
    ServerState& server, const wire::JiangLoginMessage& msg, OpCounter* ctr) {
  const GroupParams& g = *server.params;
  auto fail = [&server, &msg](Reject r) -> Reject {
    if (server.track_failures) server.failure_counts[msg.id]++;
    return r;
  };
  if (!server.id_table.contains(msg.id)) return fail(Reject::unknown_id);
  std::int64_t received = server.party_clock().now();
  if (received - msg.timestamp > server.max_delay) {
    return fail(Reject::stale_timestamp);
  }
  GroupElement server_key =
      mod_exp(hash_to_group(to_bytes(msg.id), g, ctr), server.master_key, g, ctr);
  GroupElement key_material = mod_exp(msg.ephemeral, server.master_key, g, ctr);
  Digest expected = login_mac(msg.id, server_key, msg.ephemeral, key_material,
                              msg.timestamp, g, ctr);
  if (expected != msg.mac) return fail(Reject::bad_mac);

  std::int64_t reply_time = server.party_clock().now();
  Digest reply = reply_mac(msg.id, key_material, reply_time, g, ctr);
  Digest sk = session_key(key_material, g, ctr);
  return std::pair{wire::JiangServerReply{msg.id, reply, reply_time},
                   ServerSession{key_material, sk, msg.id}};
}

Outcome<Digest> client_finish(const ClientSession& session,
                              const wire::JiangServerReply& reply,
                              const std::string& id, const PartyClock& clock,
                              std::int64_t max_delay, OpCounter* ctr) {
  const GroupParams& g = *session.params;
  std::int64_t received = clock.now();
  if (received - reply.timestamp > max_delay) return Reject::stale_timestamp;
  Digest expected =
      reply_mac(id, session.key_material, reply.timestamp, g, ctr);
  if (expected != reply.mac) return Reject::bad_mac;
  return session_key(session.key_material, g, ctr);
}

Status change_password(Card& card, const std::string& id,
                       const std::string& old_password,
                       const std::string& new_password, ServerState* server,
                       Channel& channel, const PartyClock& user_clock,
                       Rng& rng, OpCounter* ctr) {
  const GroupParams& g = *card.params;
  // Old-password confirmation is a full online login round.
  auto [msg, session] = login(card, id, old_password, user_clock, rng, ctr);
  channel.send("user", "server", wire::encode(msg, g));
  if (server == nullptr) {
    return Reject::no_reply;  // message stays in flight, nobody answers
  }
  if (user_clock.clock) user_clock.clock->advance(1);
  auto delivered = channel.deliver();
  auto decoded = wire::decode_jiang_login(delivered->payload, g);
  if (!decoded) return Reject::bad_mac;
  auto auth = authenticate(*server, *decoded, ctr);
  if (!auth) return auth.reject();
  channel.send(server->party, "user", wire::encode(auth->first));
  if (user_clock.clock) user_clock.clock->advance(1);
  auto reply_msg = channel.deliver();
  auto reply = wire::decode_jiang_reply(reply_msg->payload, g);
  if (!reply) return Reject::bad_mac;
  auto finished = client_finish(session, *reply, id, user_clock,
                                server->max_delay, ctr);
  if (!finished) return finished.reject();

  GroupElement base = hash_to_group(to_bytes(id), g, ctr);
  GroupElement new_part =
      mod_exp(base, password_exponent(to_bytes(new_password), g), g, ctr);
  GroupElement old_part =
      mod_exp(base, password_exponent(to_bytes(old_password), g), g, ctr);
  card.credential =
      mod_div(mod_mul(card.credential, new_part, g, ctr), old_part, g, ctr);
  return ok_status();
}

}  // namespace authlab::jiang
