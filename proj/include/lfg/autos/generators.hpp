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
#include <map>
#include <vector>

#include "lfg/autos/permutation.hpp"
#include "lfg/common/rng.hpp"
#include "lfg/linalg/linalg.hpp"

namespace lfg::autos {

using gf::Felt;
using linalg::Matrix;

// Per twin class (line id): images of the class members, listed in member
// order. Classes without an entry are fixed pointwise.
using TauTable = std::map<std::uint32_t, std::vector<VertexId>>;

// Vec(v) -> Vec(P v), Fun(u) -> Fun((P^-1)^T u). Throws std::invalid_argument
// for a singular or wrongly shaped P.
Permutation chi_p(const LfGraph& g, const Matrix& p);

// Coordinatewise a -> a^(p^j) on both sides. Throws std::out_of_range unless
// 0 <= j < k.
Permutation pi_extend(const LfGraph& g, unsigned j);

// Vec(u) <-> Fun(u).
Permutation sigma_swap(const LfGraph& g);

// Throws std::invalid_argument when an entry leaves its class or is not a
// bijection of it.
Permutation tau_from_table(const LfGraph& g, const TauTable& table);

// n = 2 only. For u = (a, b): Fun(u) -> Fun((a, a phi(b/a))) when a != 0.
// For v = (c, d): Vec(v) -> Vec((c, -c / phi(-c/d))) when cd != 0. Other
// vertices are fixed. phi is indexed by canonical element value and must be
// a permutation of F_q with phi(0) = 0 (std::invalid_argument otherwise).
Permutation phi_bar(const LfGraph& g, const std::vector<Felt>& phi);

// n = 2 only. Side swap on exactly the components whose Vec or Fun part is
// the image of the other side under rho: inside such a component with Vec
// line S, Vec(v) <-> Fun(J v) where J(a, b) = (-b, a) maps S onto the
// perpendicular line. delta is an involutive automorphism and
// delta^-1 o rho maps the Vec side onto itself. Throws std::invalid_argument
// when rho is not an automorphism.
Permutation delta_for(const LfGraph& g, const Permutation& rho);

// Component of an n = 2 graph: Vec line S with the Fun line N(S).
struct N2Component {
  std::uint32_t vec_line;
  std::uint32_t fun_line;
};
std::vector<N2Component> n2_components(const LfGraph& g);

// Random data for property checks.
TauTable random_tau_table(const LfGraph& g, Rng& rng);
std::vector<Felt> random_phi(const gf::Field& field, Rng& rng);
// Uniform over the automorphisms of an n = 2 graph: a random permutation of
// components, a random orientation per component and random bijections of
// the parts.
Permutation random_n2_automorphism(const LfGraph& g, Rng& rng);

}  // namespace lfg::autos
