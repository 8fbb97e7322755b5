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

#include <array>
#include <cstdint>
#include <string>

namespace authlab {

// Protocol phases used to attribute operation costs. The driver sets the
// active phase; crypto primitives only ever tally into the current one.
enum class Phase : std::uint8_t {
  registration = 0,
  login = 1,
  authentication = 2,
  password_change = 3,
};

inline constexpr std::size_t kPhaseCount = 4;
const char* to_string(Phase p);

// hashes/exps/muls/xors correspond to the usual T_h / T_E / T_M / T_X cost
// units: hash evaluations, modular exponentiations, modular
// multiplications or divisions, and XOR operations.
struct OpTally {
  std::uint64_t hashes = 0;
  std::uint64_t exps = 0;
  std::uint64_t muls = 0;
  std::uint64_t xors = 0;

  bool operator==(const OpTally&) const = default;
  OpTally& operator+=(const OpTally& o);
};

// Per-phase operation tally. Counting is opt-in: primitives take an
// OpCounter* and a null pointer disables it, so there is no global state
// and counting is race-free by construction.
class OpCounter {
 public:
  void set_phase(Phase p) { phase_ = p; }
  Phase phase() const { return phase_; }

  void add_hash() { tallies_[index()].hashes++; }
  void add_exp() { tallies_[index()].exps++; }
  void add_mul() { tallies_[index()].muls++; }
  void add_xor() { tallies_[index()].xors++; }

  const OpTally& tally(Phase p) const {
    return tallies_[static_cast<std::size_t>(p)];
  }
  OpTally total() const;
  void reset();

 private:
  std::size_t index() const { return static_cast<std::size_t>(phase_); }

  Phase phase_ = Phase::registration;
  std::array<OpTally, kPhaseCount> tallies_{};
};

inline void count_hash(OpCounter* c) { if (c) c->add_hash(); }
inline void count_exp(OpCounter* c) { if (c) c->add_exp(); }
inline void count_mul(OpCounter* c) { if (c) c->add_mul(); }
inline void count_xor(OpCounter* c) { if (c) c->add_xor(); }

}  // namespace authlab
