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

#include "authlab/channel.hpp"

namespace authlab {

void Channel::log(const char* direction, const std::string& party,
                  const Bytes& payload) {
  if (!log_) return;
  log_->append(TranscriptEvent{
      clock_ ? clock_->now() : 0,
      direction,
      party,
      counters_ ? counters_->total() : OpTally{},
      payload,
  });
}

void Channel::send(const std::string& from, const std::string& to,
                   Bytes payload) {
  ++sent_;
  log("send", from, payload);
  if (recording_) recorded_.push_back(WireMessage{from, to, payload});
  queue_.push_back(WireMessage{from, to, std::move(payload)});
}

std::optional<WireMessage> Channel::deliver() {
  if (queue_.empty()) return std::nullopt;
  WireMessage m = std::move(queue_.front());
  queue_.pop_front();
  ++delivered_;
  log("recv", m.to, m.payload);
  return m;
}

std::optional<WireMessage> Channel::intercept() {
  if (queue_.empty()) return std::nullopt;
  WireMessage m = std::move(queue_.front());
  queue_.pop_front();
  log("intercept", "adversary", m.payload);
  if (recording_) recorded_.push_back(m);
  return m;
}

void Channel::inject(const std::string& from, const std::string& to,
                     Bytes payload) {
  ++sent_;
  log("inject", "adversary", payload);
  queue_.push_back(WireMessage{from, to, std::move(payload)});
}

}  // namespace authlab
