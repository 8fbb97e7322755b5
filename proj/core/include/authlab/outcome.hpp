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

#include <cassert>
#include <variant>

namespace authlab {

// Protocol-level rejection reasons. Rejections are ordinary control flow
// (a server refusing a login is not an exceptional condition), so protocol
// operations return Outcome<T> instead of throwing.
enum class Reject {
  unknown_id,
  stale_timestamp,
  bad_mac,
  bad_credentials,
  unknown_nid,
  duplicate_id,
  no_reply,
};

const char* to_string(Reject r);

template <typename T>
class [[nodiscard]] Outcome {
 public:
  Outcome(T value) : v_(std::move(value)) {}
  Outcome(Reject r) : v_(r) {}

  bool ok() const { return std::holds_alternative<T>(v_); }
  explicit operator bool() const { return ok(); }

  const T& value() const {
    assert(ok());
    return std::get<T>(v_);
  }
  T& value() {
    assert(ok());
    return std::get<T>(v_);
  }

  Reject reject() const {
    assert(!ok());
    return std::get<Reject>(v_);
  }

  const T& operator*() const { return value(); }
  T& operator*() { return value(); }
  const T* operator->() const { return &value(); }
  T* operator->() { return &value(); }

 private:
  std::variant<T, Reject> v_;
};

using Status = Outcome<std::monostate>;

inline Status ok_status() { return Status(std::monostate{}); }

}  // namespace authlab
