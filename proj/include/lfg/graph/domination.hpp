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
#include <string>
#include <vector>

#include "lfg/common/deadline.hpp"
#include "lfg/graph/lf_graph.hpp"

namespace lfg::graph {

// Which vertices must be dominated. For a side target the dominators are
// drawn from the opposite side, so standard and total coincide there.
enum class DomTarget { kVecSide, kFunSide, kWhole };

// kStandard: every vertex outside D has a neighbor in D.
// kTotal: every vertex has a neighbor in D, members of D included.
enum class DomMode { kStandard, kTotal };

std::string to_string(DomTarget target);
std::string to_string(DomMode mode);

struct DominationResult {
  std::uint32_t size = 0;
  std::vector<VertexId> witness;  // sorted
};

// Largest graph the exact solvers accept.
inline constexpr std::uint32_t kMaxDominationVertices = 256;
inline constexpr std::uint32_t kMaxExhaustiveVertices = 20;

// Exact minimum by branch and bound over the vertex with the fewest
// remaining dominators, seeded with a greedy upper bound and pruned with
// ceil(uncovered / best gain). Throws SizeGuardError above
// kMaxDominationVertices and TimeoutError when the deadline expires.
DominationResult domination_number(const LfGraph& g, DomTarget target,
                                   DomMode mode, Deadline& deadline);
DominationResult domination_number(const LfGraph& g, DomTarget target,
                                   DomMode mode);

// Subset enumeration by increasing size; only for graphs with at most
// kMaxExhaustiveVertices vertices (SizeGuardError otherwise).
DominationResult domination_exhaustive(const LfGraph& g, DomTarget target,
                                       DomMode mode);

bool dominates(const LfGraph& g, DomTarget target, DomMode mode,
               const std::vector<VertexId>& set);

// {f_(e1 + a e2) : a in F_q} U {f_e2}: a Vec-side dominating set of size q+1.
std::vector<VertexId> explicit_side_dominator(const LfGraph& g);

}  // namespace lfg::graph
