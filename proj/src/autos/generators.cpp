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

#include "lfg/autos/generators.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "lfg/autos/check.hpp"

namespace lfg::autos {

using graph::Side;
using linalg::Vector;

Permutation chi_p(const LfGraph& g, const Matrix& p) {
  if (p.rows() != g.n() || p.cols() != g.n()) {
    throw std::invalid_argument("matrix shape does not match the dimension");
  }
  if (!linalg::is_invertible(p)) {
    throw std::invalid_argument("chi_p requires an invertible matrix");
  }
  const Matrix dual = linalg::transpose(linalg::mat_inv(p));
  std::vector<VertexId> image(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const Vector c = g.coords(v);
    image[v] = g.side(v) == Side::kVec
                   ? g.id_of(Side::kVec, linalg::mat_vec(p, c))
                   : g.id_of(Side::kFun, linalg::mat_vec(dual, c));
  }
  return Permutation(std::move(image));
}

Permutation pi_extend(const LfGraph& g, unsigned j) {
  if (j >= g.field().k()) {
    throw std::out_of_range("Frobenius exponent out of range");
  }
  std::vector<VertexId> image(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    image[v] = g.id_of(g.side(v), linalg::frobenius(g.coords(v), j));
  }
  return Permutation(std::move(image));
}

Permutation sigma_swap(const LfGraph& g) {
  std::vector<VertexId> image(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) image[v] = g.mate(v);
  return Permutation(std::move(image));
}

Permutation tau_from_table(const LfGraph& g, const TauTable& table) {
  std::vector<VertexId> image(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) image[v] = v;
  for (const auto& [line_id, images] : table) {
    if (line_id >= g.lines().size()) {
      throw std::invalid_argument("tau entry for an unknown class");
    }
    const auto& members = g.line(line_id).members;
    if (images.size() != members.size()) {
      throw std::invalid_argument("tau entry has the wrong length");
    }
    std::vector<bool> used(members.size(), false);
    for (std::size_t i = 0; i < members.size(); ++i) {
      const VertexId to = images[i];
      if (to >= g.vertex_count() || g.line_of(to) != line_id) {
        throw std::invalid_argument("tau entry maps outside its class");
      }
      const std::size_t slot = static_cast<std::size_t>(
          std::find(members.begin(), members.end(), to) - members.begin());
      if (used[slot]) throw std::invalid_argument("tau entry is not a bijection");
      used[slot] = true;
      image[members[i]] = to;
    }
  }
  return Permutation(std::move(image));
}

namespace {

void require_dimension_two(const LfGraph& g, const char* what) {
  if (g.n() != 2) {
    throw std::invalid_argument(std::string(what) + " is defined only for n = 2");
  }
}

}  // namespace

Permutation phi_bar(const LfGraph& g, const std::vector<Felt>& phi) {
  require_dimension_two(g, "phi_bar");
  const gf::Field& f = g.field();
  if (phi.size() != f.q()) throw std::invalid_argument("phi has the wrong length");
  if (phi[0].value != 0) throw std::invalid_argument("phi must fix zero");
  std::vector<bool> seen(f.q(), false);
  for (Felt x : phi) {
    if (x.value >= f.q() || seen[x.value]) {
      throw std::invalid_argument("phi is not a permutation of the field");
    }
    seen[x.value] = true;
  }
  auto apply_phi = [&](Felt x) { return phi[x.value]; };

  std::vector<VertexId> image(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const Vector c = g.coords(v);
    const Felt a = c[0];
    const Felt b = c[1];
    Vector out = c;
    if (g.side(v) == Side::kFun) {
      if (a.value != 0) out[1] = f.mul(a, apply_phi(f.div(b, a)));
    } else if (a.value != 0 && b.value != 0) {
      // v = (c, d) with c = a, d = b.
      const Felt t = apply_phi(f.neg(f.div(a, b)));
      out[1] = f.neg(f.div(a, t));
    }
    image[v] = g.id_of(g.side(v), out);
  }
  return Permutation(std::move(image));
}

std::vector<N2Component> n2_components(const LfGraph& g) {
  require_dimension_two(g, "component pairing");
  std::vector<N2Component> out;
  for (std::uint32_t s = 0; s < g.line_count_per_side(); ++s) {
    const Bitset nbrs = graph::neighbor_set(g, g.line(s));
    out.push_back({s, g.line_of(static_cast<VertexId>(nbrs.first()))});
  }
  return out;
}

Permutation delta_for(const LfGraph& g, const Permutation& rho) {
  require_dimension_two(g, "delta");
  if (rho.size() != g.vertex_count() || !is_automorphism(g, rho)) {
    throw std::invalid_argument("delta_for requires an automorphism");
  }
  const auto comps = n2_components(g);
  std::vector<std::uint32_t> comp_of_line(g.lines().size());
  for (std::uint32_t i = 0; i < comps.size(); ++i) {
    comp_of_line[comps[i].vec_line] = i;
    comp_of_line[comps[i].fun_line] = i;
  }
  std::vector<bool> crossing(comps.size(), false);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (g.side(rho(v)) != g.side(v)) crossing[comp_of_line[g.line_of(rho(v))]] = true;
  }
  const gf::Field& f = g.field();
  std::vector<VertexId> image(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) image[v] = v;
  for (std::uint32_t i = 0; i < comps.size(); ++i) {
    if (!crossing[i]) continue;
    for (VertexId v : g.line(comps[i].vec_line).members) {
      const Vector c = g.coords(v);
      const Vector jv(g.field_ptr(), {f.neg(c[1]), c[0]});
      const VertexId partner = g.id_of(Side::kFun, jv);
      image[v] = partner;
      image[partner] = v;
    }
  }
  return Permutation(std::move(image));
}

TauTable random_tau_table(const LfGraph& g, Rng& rng) {
  TauTable table;
  for (const auto& line : g.lines()) {
    std::vector<VertexId> images = line.members;
    rng.shuffle(images);
    table.emplace(line.id, std::move(images));
  }
  return table;
}

std::vector<Felt> random_phi(const gf::Field& field, Rng& rng) {
  std::vector<Felt> nonzero;
  for (unsigned a = 1; a < field.q(); ++a) nonzero.push_back(gf::felt(a));
  rng.shuffle(nonzero);
  std::vector<Felt> phi(field.q());
  for (unsigned a = 1; a < field.q(); ++a) phi[a] = nonzero[a - 1];
  return phi;
}

Permutation random_n2_automorphism(const LfGraph& g, Rng& rng) {
  const auto comps = n2_components(g);
  std::vector<std::uint32_t> target(comps.size());
  for (std::uint32_t i = 0; i < comps.size(); ++i) target[i] = i;
  rng.shuffle(target);
  std::vector<VertexId> image(g.vertex_count());
  auto map_part = [&](std::uint32_t from_line, std::uint32_t to_line) {
    std::vector<VertexId> dest = g.line(to_line).members;
    rng.shuffle(dest);
    const auto& src = g.line(from_line).members;
    for (std::size_t k = 0; k < src.size(); ++k) image[src[k]] = dest[k];
  };
  for (std::uint32_t i = 0; i < comps.size(); ++i) {
    const N2Component& to = comps[target[i]];
    if (rng.coin()) {
      map_part(comps[i].vec_line, to.vec_line);
      map_part(comps[i].fun_line, to.fun_line);
    } else {
      map_part(comps[i].vec_line, to.fun_line);
      map_part(comps[i].fun_line, to.vec_line);
    }
  }
  return Permutation(std::move(image));
}

}  // namespace lfg::autos
