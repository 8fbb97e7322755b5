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

#include <cstdint>
#include <map>
#include <string>

namespace authlab {

// Simulated time in integer ticks. Each party reads the global counter
// through its own constant skew offset, which makes clock-drift scenarios
// deterministic. Skews are configured before a scenario starts so each
// party's observed time stays monotone.
class SimClock {
 public:
  void advance(std::int64_t ticks);
  std::int64_t now() const { return now_; }

  void set_skew(const std::string& party, std::int64_t offset);
  std::int64_t skew(const std::string& party) const;

  // Local time as observed by `party` (now + skew).
  std::int64_t read(const std::string& party) const;

 private:
  std::int64_t now_ = 0;
  std::map<std::string, std::int64_t> skew_;
};

// A party's view of the simulated clock.
struct PartyClock {
  SimClock* clock = nullptr;
  std::string party;

  std::int64_t now() const { return clock->read(party); }
};

}  // namespace authlab
