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

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "lfg/common/bigcount.hpp"

namespace lfg::harness {

using Json = nlohmann::ordered_json;

inline constexpr std::uint64_t kDefaultSeed = 20260101;

// Vertex limit for the vertex-level orbit count used as a second oracle for
// the group order; full_oracles lifts it to the stabilizer limit.
inline constexpr std::uint32_t kOrbitOracleVertices = 64;
// Automorphisms examined per exhaustive structural or decomposition check.
inline constexpr std::uint64_t kExhaustiveCap = 20000;

enum class Verdict { kMatch, kMismatch, kPropertyPass, kPropertyFail, kSkipped };

struct ClaimResult {
  std::string id;
  std::string locus;
  std::optional<BigCount> formula;
  std::optional<BigCount> oracle;
  Verdict verdict = Verdict::kSkipped;
  std::string skip_reason;
  Json witness;  // null when absent
  std::optional<double> ms;

  std::string verdict_string() const;
  bool failed() const {
    return verdict == Verdict::kMismatch || verdict == Verdict::kPropertyFail;
  }
};

struct Report {
  unsigned q = 0;
  unsigned n = 0;
  std::uint64_t seed = 0;
  std::vector<ClaimResult> claims;

  bool ok() const;
};

struct VerifyOptions {
  std::vector<std::string> claims;  // empty: all
  std::uint64_t seed = kDefaultSeed;
  std::optional<double> budget_seconds;
  bool timings = false;
  bool full_oracles = false;
  unsigned samples = 100;
};

// Throws std::invalid_argument for an unsupported q or n < 2 and
// SizeGuardError when the graph is too large to build.
Report run_verify(unsigned q, unsigned n, const VerifyOptions& options);

const std::vector<std::pair<unsigned, unsigned>>& default_matrix();

Json to_json(const Report& report);
std::string render_text(const Report& report);

}  // namespace lfg::harness
