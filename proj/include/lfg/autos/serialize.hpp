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

#include <string>

#include "json.hpp"
#include "lfg/autos/decompose.hpp"

namespace lfg::autos {

using Json = nlohmann::ordered_json;

// {"q":, "n":, "image":[...]}
Json permutation_to_json(const LfGraph& g, const Permutation& perm);

struct PermutationFile {
  unsigned q = 0;
  unsigned n = 0;
  std::vector<VertexId> image;
};
// Throws std::invalid_argument on missing or mistyped fields.
PermutationFile permutation_from_json(const Json& j);

// {"q","n","swap","delta","P","frob","phi","tau"}; P is a list of rows and
// tau is keyed by the vertex id of each class's monic representative.
Json decomposition_to_json(const LfGraph& g, const Decomposition& d);
Decomposition decomposition_from_json(const LfGraph& g, const Json& j);

Json failure_to_json(const DecompositionFailure& f);

}  // namespace lfg::autos
