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

#include "authlab/clock.hpp"

#include <stdexcept>

namespace authlab {

void SimClock::advance(std::int64_t ticks) {
  if (ticks < 0) throw std::invalid_argument("SimClock::advance: ticks < 0");
  now_ += ticks;
}

void SimClock::set_skew(const std::string& party, std::int64_t offset) {
  skew_[party] = offset;
}

std::int64_t SimClock::skew(const std::string& party) const {
  auto it = skew_.find(party);
  return it == skew_.end() ? 0 : it->second;
}

std::int64_t SimClock::read(const std::string& party) const {
  return now_ + skew(party);
}

}  // namespace authlab
