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

#include "authlab/outcome.hpp"

namespace authlab {

const char* to_string(Reject r) {
  switch (r) {
    case Reject::unknown_id: return "unknown-id";
    case Reject::stale_timestamp: return "stale-timestamp";
    case Reject::bad_mac: return "bad-mac";
    case Reject::bad_credentials: return "bad-credentials";
    case Reject::unknown_nid: return "unknown-nid";
    case Reject::duplicate_id: return "duplicate-id";
    case Reject::no_reply: return "no-reply";
  }
  return "?";
}

}  // namespace authlab
