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

#include "lfg/autos/permutation.hpp"

namespace lfg::autos {

// A pair (x, y) whose adjacency differs from that of (rho(x), rho(y)).
std::optional<std::pair<VertexId, VertexId>> find_adjacency_violation(
    const LfGraph& g, const Permutation& perm);

bool is_automorphism(const LfGraph& g, const Permutation& perm);

// Induced action on twin classes (line ids).
struct LineAction {
  bool ok = false;
  std::vector<std::uint32_t> image;  // line id -> line id, when ok
  std::string reason;
  std::vector<VertexId> witness;
};

LineAction line_action(const LfGraph& g, const Permutation& perm);

enum class SideBehavior { kPreserving, kSwapping, kMixed };

SideBehavior side_behavior(const LfGraph& g, const Permutation& perm);

struct StructureVerdict {
  bool line_action = false;
  // rho(N(S)) = N(rho(S)) for every line S on either side.
  bool n_commutation = false;
  // rho(F_H) = intersection of N(rho(S)) over S with F_H in N(S).
  bool intersection_identity = false;
  // Same identity for sigma o rho; only evaluated for side-swapping rho and
  // recorded without affecting first_failure.
  std::optional<bool> intersection_via_sigma;
  SideBehavior sides = SideBehavior::kMixed;
  bool side_pure = false;
  // n = 2: components map onto components with S going to S' or N(S').
  std::optional<bool> componentwise;
  std::string first_failure;
};

// Throws std::invalid_argument when perm is not an automorphism.
StructureVerdict check_structure(const LfGraph& g, const Permutation& perm);

// Whether every structural claim applicable to the graph's dimension holds:
// side purity for n >= 3, component behavior for n = 2.
bool structure_holds(const LfGraph& g, const StructureVerdict& v);

}  // namespace lfg::autos
