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
#include <functional>
#include <optional>

#include "authlab/proposed.hpp"

namespace authlab {

class RegistryError : public std::runtime_error {
 public:
  enum class Kind {
    io,
    checksum_mismatch,
    missing_master_key,
    unsupported_version,
    parse,
  };

  RegistryError(Kind kind, const std::string& what, int line = 0)
      : std::runtime_error(what), kind(kind), line(line) {}

  Kind kind;
  int line;  // 1-based, for parse errors
};

struct SaveOptions {
  // The master key stays out of the file unless explicitly requested;
  // loading then requires re-supplying it.
  bool persist_master_key = false;
  // Allow overwriting a destination that exists but fails validation.
  bool force = false;
  // Test hook, invoked after the temp file is written and before the
  // rename. Throwing here simulates a crash at the worst moment.
  std::function<void()> pre_rename_hook;
};

// Record-table file: "APLAB01" magic, version byte, group params, the
// user records, and a trailing digest of all preceding bytes. Written
// atomically (temp file + rename).
void save_state(const proposed::ServerState& state,
                const std::filesystem::path& path,
                const SaveOptions& options = {});

proposed::ServerState load_state(const std::filesystem::path& path,
                                 std::optional<Scalar> master_key = {});

}  // namespace authlab
