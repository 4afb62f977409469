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

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "lfg/autos/generators.hpp"

namespace lfg::autos {

// rho = (sigma or delta) o chi_P o (pi_j or phi_bar) o tau.
struct Decomposition {
  bool swap = false;
  std::optional<Permutation> delta;       // n = 2
  Matrix p;
  std::optional<unsigned> frob_exponent;  // n >= 3
  std::optional<std::vector<Felt>> phi;   // n = 2, indexed by element value
  TauTable tau;                           // non-identity classes only
};

// Failure step ids.
inline constexpr const char* kStepNotAutomorphism = "not-automorphism";
inline constexpr const char* kStepSidePurity = "side-purity";
inline constexpr const char* kStepBasisIndependence = "basis-independence";
inline constexpr const char* kStepScalarNormalForm = "scalar-normal-form";
inline constexpr const char* kStepFieldAutomorphism = "field-automorphism";
inline constexpr const char* kStepTwinResidual = "twin-residual";
inline constexpr const char* kStepRoundTrip = "round-trip";

struct DecompositionFailure {
  std::string step;
  std::string message;
  std::vector<VertexId> witness;
};

using DecomposeResult = std::variant<Decomposition, DecompositionFailure>;

DecomposeResult decompose(const LfGraph& g, const Permutation& rho);

// Throws std::invalid_argument for malformed data (wrong shapes, missing
// parts for the dimension, singular P).
Permutation compose(const LfGraph& g, const Decomposition& d);

}  // namespace lfg::autos
