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

#include "authlab/channel.hpp"
#include "authlab/jiang.hpp"
#include "authlab/proposed.hpp"

// Drives honest protocol runs end to end through a channel: every message
// crosses the (adversary-observable) wire, the clock advances one tick per
// hop. Both the attack suite and the test suites build on these.

namespace authlab::harness {

// 64-symbol credential alphabet used for random identities, passwords and
// dictionary words.
inline constexpr std::string_view kAlphabet =
    "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789_-";

std::string random_word(Rng& rng, std::size_t length);

// Distinct words, deterministic for a given rng state.
std::vector<std::string> make_dictionary(Rng& rng, std::size_t size,
                                         std::size_t min_len = 6,
                                         std::size_t max_len = 12);

struct SessionResult {
  bool accepted = false;
  Reject reason = Reject::bad_mac;  // meaningful only when !accepted
  Digest user_key;
  Digest server_key;
  std::uint64_t messages = 0;  // messages sent on the channel by this run
};

struct JiangSessionTrace {
  SessionResult result;
  wire::JiangLoginMessage login;
  std::optional<wire::JiangServerReply> reply;
  std::optional<jiang::ClientSession> client_session;
  std::optional<jiang::ServerSession> server_session;
};

struct ProposedSessionTrace {
  SessionResult result;
  std::optional<wire::ProposedLoginMessage> login;
  std::optional<wire::ProposedReplyMessage> reply;
  std::optional<wire::ProposedConfirmMessage> confirm;
  std::optional<proposed::ClientSession> client_session;
  std::optional<proposed::ServerSession> server_session;
};

// Registration over the enrollment channel. The request message is what
// an insider gets to see.
Outcome<jiang::Card> enroll_jiang(jiang::ServerState& server,
                                  Channel& reg_channel, const std::string& id,
                                  const std::string& password, OpCounter* ctr);

Outcome<proposed::Card> enroll_proposed(proposed::ServerState& server,
                                        Channel& reg_channel,
                                        const std::string& id,
                                        const std::string& password, Rng& rng,
                                        OpCounter* ctr);

// Full login + authentication round. Sets the counter phase to `login`
// for the card's message and `authentication` for everything after.
JiangSessionTrace run_jiang_session(jiang::ServerState& server,
                                    const jiang::Card& card,
                                    const std::string& id,
                                    const std::string& password,
                                    Channel& channel,
                                    const PartyClock& user_clock, Rng& rng,
                                    OpCounter* ctr);

// Full login + authenticated key agreement (three messages) with mutual
// session-key confirmation.
ProposedSessionTrace run_proposed_session(proposed::ServerState& server,
                                          const proposed::Card& card,
                                          const std::string& id,
                                          const std::string& password,
                                          Channel& channel, SimClock* clock,
                                          Rng& rng, OpCounter* ctr);

}  // namespace authlab::harness
