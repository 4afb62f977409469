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

#include <stdexcept>
#include <string>

namespace lfg {

// Raised when an instance exceeds a configured size guard. Callers that
// expose a CLI map this to a usage/environment error.
class SizeGuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised by long-running searches when their Deadline expires.
class TimeoutError : public std::runtime_error {
 public:
  TimeoutError() : std::runtime_error("time budget exceeded") {}
};

}  // namespace lfg
