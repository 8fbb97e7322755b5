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

#include "authlab/proposed.hpp"

namespace authlab::proposed {

namespace {

// h(id xor pw): both operands normalized to digest length first, since
// XOR of variable-length strings is otherwise undefined.
Digest id_pw_mask(const std::string& id, const std::string& password,
                  const GroupParams& g, OpCounter* ctr) {
  return digest({hashed_xor(to_bytes(id), to_bytes(password), g)}, g, ctr);
}

// W = h(pw || a)
Digest masked_password(const std::string& password, const Digest& user_secret,
                       const GroupParams& g, OpCounter* ctr) {
  return digest({to_bytes(password), user_secret.bytes}, g, ctr);
}

// V = h(id || a || pw)
Digest card_verifier(const std::string& id, const Digest& user_secret,
                     const std::string& password, const GroupParams& g,
                     OpCounter* ctr) {
  return digest({to_bytes(id), user_secret.bytes, to_bytes(password)}, g, ctr);
}

// X = h(id || N || id_sc || x)
Digest user_key(const std::string& id, std::uint64_t reissue_count,
                const Bytes& card_id, const Scalar& master_key,
                const GroupParams& g, OpCounter* ctr) {
  Bytes n;
  append_u64_be(n, reissue_count);
  return digest({to_bytes(id), n, card_id, encode_scalar(master_key, g)}, g,
                ctr);
}

Digest login_mac(const std::string& id, const GroupElement& ephemeral,
                 const Digest& user_key, const GroupParams& g,
                 OpCounter* ctr) {
  return digest({to_bytes(id), encode_element(ephemeral, g), user_key.bytes},
                g, ctr);
}

Digest session_key_digest(const std::string& id, const GroupElement& shared,
                          const Digest& user_key, const GroupParams& g,
                          OpCounter* ctr) {
  return digest({to_bytes(id), encode_element(shared, g), user_key.bytes}, g,
                ctr);
}

Digest reply_mac(const std::string& id, const Digest& session_key,
                 const GroupElement& ephemeral_user,
                 const GroupElement& ephemeral_server, const GroupParams& g,
                 OpCounter* ctr) {
  return digest({to_bytes(id), session_key.bytes,
                 encode_element(ephemeral_user, g),
                 encode_element(ephemeral_server, g)},
                g, ctr);
}

Digest confirm_mac(const std::string& id, const Digest& session_key,
                   const GroupElement& shared,
                   const GroupElement& ephemeral_server, const GroupParams& g,
                   OpCounter* ctr) {
  return digest({to_bytes(id), session_key.bytes, encode_element(shared, g),
                 encode_element(ephemeral_server, g)},
                g, ctr);
}

Bytes fresh_nid(const ServerState& server, Rng& rng) {
  for (;;) {
    Bytes nid = rng.bytes(kNidLen);
    if (!server.records.contains(nid)) return nid;
  }
}

}  // namespace

ServerState setup(GroupParamsPtr params, Rng& rng) {
  ServerState s;
  s.master_key = sample_exponent(*params, rng);
  s.params = std::move(params);
  return s;
}

BeginRegistration begin_registration(const std::string& id,
                                     const std::string& password,
                                     const GroupParams& g, Rng& rng,
                                     OpCounter* ctr) {
  Digest user_secret{rng.bytes(g.digest_len)};
  Digest w = masked_password(password, user_secret, g, ctr);
  return BeginRegistration{RegistrationRequest{id, w}, user_secret};
}

Outcome<PartialCard> server_register(ServerState& server,
                                     const RegistrationRequest& request,
                                     Rng& rng, OpCounter* ctr) {
  const GroupParams& g = *server.params;
  if (server.id_index.contains(request.id)) return Reject::duplicate_id;

  UserRecord record;
  record.nid = fresh_nid(server, rng);
  record.reissue_count = 0;
  record.card_id = rng.bytes(kCardIdLen);
  record.id = request.id;
  record.status = RecordStatus::active;

  Digest x = user_key(record.id, record.reissue_count, record.card_id,
                      server.master_key, g, ctr);
  Digest b = xor_digest(x, request.masked_password, ctr);

  server.id_index[record.id] = record.reissue_count;
  Bytes nid = record.nid;
  server.records.emplace(nid, std::move(record));
  return PartialCard{nid, b};
}

Card finalize_card(const PartialCard& partial, const std::string& id,
                   const std::string& password, const Digest& user_secret,
                   GroupParamsPtr params, OpCounter* ctr) {
  const GroupParams& g = *params;
  Digest l = xor_digest(user_secret, id_pw_mask(id, password, g, ctr), ctr);
  Digest v = card_verifier(id, user_secret, password, g, ctr);
  return Card{partial.nid, partial.masked_secret, l, v, std::move(params)};
}

Outcome<std::pair<wire::ProposedLoginMessage, ClientSession>> login_start(
    const Card& card, const std::string& id, const std::string& password,
    Rng& rng, OpCounter* ctr) {
  const GroupParams& g = *card.params;
  Digest user_secret =
      xor_digest(card.masked_nonce, id_pw_mask(id, password, g, ctr), ctr);
  if (card_verifier(id, user_secret, password, g, ctr) != card.verifier) {
    // One uniform rejection for wrong id, wrong password, or both.
    return Reject::bad_credentials;
  }
  Digest w = masked_password(password, user_secret, g, ctr);
  Digest x = xor_digest(card.masked_secret, w, ctr);
  Scalar alpha = sample_exponent(g, rng);
  GroupElement ephemeral =
      mod_exp(hash_to_group(to_bytes(id), g, ctr), alpha, g, ctr);
  Digest mac = login_mac(id, ephemeral, x, g, ctr);
  return std::pair{wire::ProposedLoginMessage{card.nid, ephemeral, mac},
                   ClientSession{alpha, id, x, ephemeral, card.params}};
}

Outcome<std::pair<wire::ProposedReplyMessage, ServerSession>> server_respond(
    ServerState& server, const wire::ProposedLoginMessage& msg, Rng& rng,
    OpCounter* ctr) {
  const GroupParams& g = *server.params;
  auto it = server.records.find(msg.nid);
  if (it == server.records.end() ||
      it->second.status == RecordStatus::revoked) {
    return Reject::unknown_nid;
  }
  const UserRecord& record = it->second;
  Digest x = user_key(record.id, record.reissue_count, record.card_id,
                      server.master_key, g, ctr);
  if (login_mac(record.id, msg.ephemeral, x, g, ctr) != msg.mac) {
    return Reject::bad_mac;
  }
  Scalar beta = sample_exponent(g, rng);
  GroupElement ephemeral_server =
      mod_exp(hash_to_group(to_bytes(record.id), g, ctr), beta, g, ctr);
  GroupElement shared = mod_exp(msg.ephemeral, beta, g, ctr);
  Digest session_key = session_key_digest(record.id, shared, x, g, ctr);
  Digest mac =
      reply_mac(record.id, session_key, msg.ephemeral, ephemeral_server, g, ctr);
  return std::pair{
      wire::ProposedReplyMessage{ephemeral_server, mac},
      ServerSession{beta, record.id, record.nid, x, shared, msg.ephemeral,
                    ephemeral_server, session_key, server.params}};
}

Outcome<ClientFinish> client_finish(const ClientSession& session,
                                    const wire::ProposedReplyMessage& reply,
                                    OpCounter* ctr) {
  const GroupParams& g = *session.params;
  GroupElement shared = mod_exp(reply.ephemeral, session.alpha, g, ctr);
  Digest session_key =
      session_key_digest(session.id, shared, session.user_key, g, ctr);
  // M2 authenticates the server and confirms its session key in one step.
  if (reply_mac(session.id, session_key, session.ephemeral, reply.ephemeral, g,
                ctr) != reply.mac) {
    return Reject::bad_mac;
  }
  Digest confirm =
      confirm_mac(session.id, session_key, shared, reply.ephemeral, g, ctr);
  return ClientFinish{wire::ProposedConfirmMessage{confirm}, session_key};
}

Outcome<Digest> server_confirm(const ServerSession& session,
                               const wire::ProposedConfirmMessage& confirm,
                               OpCounter* ctr) {
  const GroupParams& g = *session.params;
  if (confirm_mac(session.id, session.session_key, session.shared,
                  session.ephemeral_server, g, ctr) != confirm.mac) {
    return Reject::bad_mac;
  }
  return session.session_key;
}

Status change_password(Card& card, const std::string& id,
                       const std::string& old_password,
                       const std::string& new_password, OpCounter* ctr) {
  const GroupParams& g = *card.params;
  Digest user_secret =
      xor_digest(card.masked_nonce, id_pw_mask(id, old_password, g, ctr), ctr);
  if (card_verifier(id, user_secret, old_password, g, ctr) != card.verifier) {
    return Reject::bad_credentials;
  }
  Digest w_old = masked_password(old_password, user_secret, g, ctr);
  Digest w_new = masked_password(new_password, user_secret, g, ctr);
  card.masked_secret =
      xor_digest(xor_digest(card.masked_secret, w_old, ctr), w_new, ctr);
  card.masked_nonce =
      xor_digest(user_secret, id_pw_mask(id, new_password, g, ctr), ctr);
  card.verifier = card_verifier(id, user_secret, new_password, g, ctr);
  return ok_status();
}

Outcome<PartialCard> revoke_and_reissue(ServerState& server,
                                        const std::string& id,
                                        const RegistrationRequest& request,
                                        Rng& rng, OpCounter* ctr) {
  const GroupParams& g = *server.params;
  auto idx = server.id_index.find(id);
  if (idx == server.id_index.end()) return Reject::unknown_id;

  // Invalidate the lost card: its pseudonym stops resolving.
  for (auto& [nid, record] : server.records) {
    if (record.id == id && record.status == RecordStatus::active) {
      record.status = RecordStatus::revoked;
    }
  }

  UserRecord record;
  record.nid = fresh_nid(server, rng);
  record.reissue_count = idx->second + 1;
  record.card_id = rng.bytes(kCardIdLen);
  record.id = id;
  record.status = RecordStatus::active;

  Digest x = user_key(record.id, record.reissue_count, record.card_id,
                      server.master_key, g, ctr);
  Digest b = xor_digest(x, request.masked_password, ctr);

  idx->second = record.reissue_count;
  Bytes nid = record.nid;
  server.records.emplace(nid, std::move(record));
  return PartialCard{nid, b};
}

Bytes export_card(const Card& card) {
  Bytes out;
  out.push_back(0x01);  // format version
  out.push_back(static_cast<std::uint8_t>(card.params->label));
  append_field(out, card.nid);
  append_field(out, card.masked_secret.bytes);
  append_field(out, card.masked_nonce.bytes);
  append_field(out, card.verifier.bytes);
  return out;
}

std::optional<Card> import_card(ByteView blob, GroupParamsPtr params) {
  ByteReader r(blob);
  auto version = r.read_u8();
  if (!version || *version != 0x01) return std::nullopt;
  auto label = r.read_u8();
  if (!label || *label != static_cast<std::uint8_t>(params->label)) {
    return std::nullopt;
  }
  auto nid = r.read_field();
  auto b = r.read_field();
  auto l = r.read_field();
  auto v = r.read_field();
  if (!nid || nid->size() != kNidLen) return std::nullopt;
  for (const auto* d : {&b, &l, &v}) {
    if (!*d || (*d)->size() != params->digest_len) return std::nullopt;
  }
  if (!r.empty()) return std::nullopt;
  return Card{std::move(*nid), Digest{std::move(*b)}, Digest{std::move(*l)},
              Digest{std::move(*v)}, std::move(params)};
}

}  // namespace authlab::proposed
