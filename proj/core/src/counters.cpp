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

#include "authlab/counters.hpp"

namespace authlab {

const char* to_string(Phase p) {
  switch (p) {
    case Phase::registration: return "registration";
    case Phase::login: return "login";
    case Phase::authentication: return "authentication";
    case Phase::password_change: return "password-change";
  }
  return "?";
}

OpTally& OpTally::operator+=(const OpTally& o) {
  hashes += o.hashes;
  exps += o.exps;
  muls += o.muls;
  xors += o.xors;
  return *this;
}

OpTally OpCounter::total() const {
  OpTally sum;
  for (const auto& t : tallies_) sum += t;
  return sum;
}

void OpCounter::reset() {
  tallies_ = {};
  phase_ = Phase::registration;
}

}  // namespace authlab
