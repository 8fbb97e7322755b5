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

#include <filesystem>
#include <string>
#include <vector>

#include "authlab/bytes.hpp"
#include "authlab/counters.hpp"

namespace authlab {

// Append-only log of everything that crossed a channel, with the clock
// tick and the cumulative operation tally at the moment of the event.
// The text serialization is line-oriented (one event per line, tab
// separated, hex payloads) so attack write-ups diff cleanly.
struct TranscriptEvent {
  std::int64_t tick = 0;
  std::string direction;  // send / recv / inject / intercept / note
  std::string party;
  OpTally counters;
  Bytes payload;

  bool operator==(const TranscriptEvent&) const = default;
};

class Transcript {
 public:
  void append(TranscriptEvent ev) { events_.push_back(std::move(ev)); }
  void note(const std::string& party, std::string text);

  const std::vector<TranscriptEvent>& events() const { return events_; }
  bool operator==(const Transcript&) const = default;

 private:
  std::vector<TranscriptEvent> events_;
};

std::string render_transcript(const Transcript& t);
void export_transcript(const Transcript& t, const std::filesystem::path& path);
Transcript parse_transcript(const std::string& text);
Transcript import_transcript(const std::filesystem::path& path);

}  // namespace authlab
