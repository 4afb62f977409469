// Copyright 2026 The lfgraph Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <chrono>
#include <cstdint>
#include <optional>

#include "lfg/common/error.hpp"

namespace lfg {

// Cooperative time budget. Searches call poll() in their inner loops; the
// clock is only consulted every few thousand polls.
class Deadline {
 public:
  using Clock = std::chrono::steady_clock;

  Deadline() = default;
  explicit Deadline(std::chrono::duration<double> budget)
      : until_(Clock::now() +
               std::chrono::duration_cast<Clock::duration>(budget)) {}

  static Deadline none() { return Deadline(); }

  bool unlimited() const { return !until_.has_value(); }

  bool expired() const { return until_ && Clock::now() >= *until_; }

  void poll() {
    if (!until_) return;
    if ((++ticks_ & 0xFFF) != 0) return;
    if (Clock::now() >= *until_) throw TimeoutError();
  }

  void check() const {
    if (expired()) throw TimeoutError();
  }

 private:
  std::optional<Clock::time_point> until_;
  std::uint64_t ticks_ = 0;
};

}  // namespace lfg
