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

#include <deque>
#include <optional>

#include "authlab/clock.hpp"
#include "authlab/transcript.hpp"

namespace authlab {

struct WireMessage {
  std::string from;
  std::string to;
  Bytes payload;

  bool operator==(const WireMessage&) const = default;
};

// Simulated network under full adversary control: messages can be
// observed, removed, injected and replayed. With no hooks engaged it is a
// plain FIFO that delivers every message unmodified, in order.
class Channel {
 public:
  Channel() = default;
  Channel(Transcript* log, SimClock* clock, OpCounter* counters)
      : log_(log), clock_(clock), counters_(counters) {}

  void send(const std::string& from, const std::string& to, Bytes payload);
  std::optional<WireMessage> deliver();

  // Adversary hooks.
  void start_recording() { recording_ = true; }
  const std::vector<WireMessage>& recorded() const { return recorded_; }
  std::optional<WireMessage> intercept();  // removes the in-flight head
  void inject(const std::string& from, const std::string& to, Bytes payload);

  std::size_t in_flight() const { return queue_.size(); }
  std::uint64_t sent_count() const { return sent_; }
  std::uint64_t delivered_count() const { return delivered_; }

 private:
  void log(const char* direction, const std::string& party,
           const Bytes& payload);

  std::deque<WireMessage> queue_;
  std::vector<WireMessage> recorded_;
  bool recording_ = false;
  std::uint64_t sent_ = 0;
  std::uint64_t delivered_ = 0;

  Transcript* log_ = nullptr;
  SimClock* clock_ = nullptr;
  OpCounter* counters_ = nullptr;
};

}  // namespace authlab
