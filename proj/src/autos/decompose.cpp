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

#include "lfg/autos/decompose.hpp"

#include <stdexcept>

#include "lfg/autos/check.hpp"

namespace lfg::autos {

using graph::Side;
using linalg::Vector;

namespace {

DecompositionFailure fail(const char* step, std::string message,
                          std::vector<VertexId> witness = {}) {
  return {step, std::move(message), std::move(witness)};
}

TauTable table_of(const LfGraph& g, const Permutation& tau) {
  TauTable table;
  for (const auto& line : g.lines()) {
    std::vector<VertexId> images;
    bool moved = false;
    for (VertexId m : line.members) {
      images.push_back(tau(m));
      moved = moved || tau(m) != m;
    }
    if (moved) table.emplace(line.id, std::move(images));
  }
  return table;
}

std::optional<VertexId> leaves_class(const LfGraph& g, const Permutation& perm) {
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (g.line_of(perm(v)) != g.line_of(v)) return v;
  }
  return std::nullopt;
}

std::optional<VertexId> side_crossing(const LfGraph& g, const Permutation& perm,
                                      bool want_swap) {
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if ((g.side(perm(v)) != g.side(v)) != want_swap) return v;
  }
  return std::nullopt;
}

// Columns are the images of e_1..e_n, which must lie on the Vec side.
std::variant<Matrix, DecompositionFailure> basis_matrix(const LfGraph& g,
                                                        const Permutation& rho) {
  std::vector<Vector> cols;
  std::vector<VertexId> witness;
  for (unsigned i = 0; i < g.n(); ++i) {
    const VertexId e = g.id_of(Side::kVec, Vector::basis(g.field_ptr(), g.n(), i));
    witness.push_back(rho(e));
    if (g.side(rho(e)) != Side::kVec) {
      return fail(kStepSidePurity, "basis vector leaves the Vec side", {e, rho(e)});
    }
    cols.push_back(g.coords(rho(e)));
  }
  Matrix p = Matrix::from_columns(cols);
  if (!linalg::is_invertible(p)) {
    return fail(kStepBasisIndependence, "images of the standard basis are dependent",
                witness);
  }
  return p;
}

// monic_rep(coords(rho1(v))) must be e_1 + c e_j; returns c.
std::optional<Felt> normal_coefficient(const Vector& image, unsigned j) {
  const Vector m = linalg::monic_rep(image);
  if (m[0].value != 1) return std::nullopt;
  for (unsigned i = 1; i < m.size(); ++i) {
    if (i != j && m[i].value != 0) return std::nullopt;
  }
  return m[j];
}

DecomposeResult finish(const LfGraph& g, const Permutation& rho, Decomposition d) {
  const Permutation back = compose(g, d);
  if (!(back == rho)) {
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      if (back(v) != rho(v)) {
        return fail(kStepRoundTrip, "recomposed map differs from the input", {v});
      }
    }
  }
  return d;
}

DecomposeResult decompose_general(const LfGraph& g, const Permutation& rho) {
  const gf::Field& f = g.field();
  const unsigned n = g.n();
  Decomposition d;
  const SideBehavior sides = side_behavior(g, rho);
  if (sides == SideBehavior::kMixed) {
    const VertexId a = *side_crossing(g, rho, true);
    const VertexId b = *side_crossing(g, rho, false);
    return fail(kStepSidePurity, "map neither preserves nor swaps the sides", {a, b});
  }
  d.swap = sides == SideBehavior::kSwapping;
  const Permutation rho_vec = d.swap ? compose(sigma_swap(g), rho) : rho;

  auto basis = basis_matrix(g, rho_vec);
  if (auto* bad = std::get_if<DecompositionFailure>(&basis)) return *bad;
  const Matrix p = std::get<Matrix>(basis);
  const Permutation rho1 = compose(chi_p(g, linalg::mat_inv(p)), rho_vec);

  // pi_{1j}(a) from rho1(e_1 + a e_j) = e_1 + pi_{1j}(a) e_j up to scalars.
  std::vector<std::vector<Felt>> pis(n);
  const Vector e1 = Vector::basis(g.field_ptr(), n, 0);
  for (unsigned j = 1; j < n; ++j) {
    pis[j].resize(f.q());
    std::vector<bool> seen(f.q(), false);
    for (unsigned a = 0; a < f.q(); ++a) {
      const Vector v = linalg::add(e1, linalg::scale(gf::felt(a),
                                                     Vector::basis(g.field_ptr(), n, j)));
      const VertexId id = g.id_of(Side::kVec, v);
      const auto c = normal_coefficient(g.coords(rho1(id)), j);
      if (!c) {
        return fail(kStepScalarNormalForm, "image of e_1 + a e_j is off the expected line",
                    {id, rho1(id)});
      }
      if (seen[c->value]) {
        return fail(kStepScalarNormalForm, "recovered coefficient map is not injective",
                    {id});
      }
      seen[c->value] = true;
      pis[j][a] = *c;
    }
  }

  std::vector<Felt> diag(n, f.one());
  for (unsigned j = 1; j < n; ++j) diag[j] = pis[j][1];
  const Matrix q_mat = Matrix::diagonal(g.field_ptr(), diag);

  std::optional<unsigned> exponent;
  for (unsigned e : f.automorphisms()) {
    bool match = true;
    for (unsigned a = 0; a < f.q() && match; ++a) {
      match = f.div(pis[1][a], pis[1][1]) == f.frobenius(gf::felt(a), e);
    }
    if (match) {
      exponent = e;
      break;
    }
  }
  if (!exponent) {
    return fail(kStepFieldAutomorphism,
                "normalized coefficient map is not a power of Frobenius");
  }
  d.frob_exponent = *exponent;

  const unsigned k = f.k();
  const Permutation pi_inv = pi_extend(g, (k - *exponent) % k);
  const Permutation chi_q_inv = chi_p(g, linalg::mat_inv(q_mat));
  const Permutation tau = compose_all({&pi_inv, &chi_q_inv, &rho1});
  if (auto v = leaves_class(g, tau)) {
    return fail(kStepTwinResidual, "residual map moves a vertex out of its class",
                {*v, tau(*v)});
  }
  d.p = linalg::mat_mul(p, q_mat);
  d.tau = table_of(g, tau);
  return finish(g, rho, std::move(d));
}

DecomposeResult decompose_n2(const LfGraph& g, const Permutation& rho) {
  const gf::Field& f = g.field();
  Decomposition d;
  const Permutation delta = delta_for(g, rho);
  const Permutation rho_vec = compose(delta.inverse(), rho);
  for (VertexId v = 0; v < g.side_size(); ++v) {
    if (g.side(rho_vec(v)) != Side::kVec) {
      return fail(kStepSidePurity, "delta does not restore the Vec side", {v, rho_vec(v)});
    }
  }
  d.swap = !delta.is_identity();
  d.delta = delta;

  auto basis = basis_matrix(g, rho_vec);
  if (auto* bad = std::get_if<DecompositionFailure>(&basis)) return *bad;
  const Matrix p = std::get<Matrix>(basis);
  const Permutation rho1 = compose(chi_p(g, linalg::mat_inv(p)), rho_vec);

  // phi(a) from rho1(f_{e_1 + a e_2}) = f_{e_1 + phi(a) e_2} up to scalars.
  std::vector<Felt> phi(f.q());
  std::vector<bool> seen(f.q(), false);
  for (unsigned a = 0; a < f.q(); ++a) {
    const Vector u(g.field_ptr(), {f.one(), gf::felt(a)});
    const VertexId id = g.id_of(Side::kFun, u);
    const VertexId to = rho1(id);
    const auto c = g.side(to) == Side::kFun ? normal_coefficient(g.coords(to), 1)
                                            : std::nullopt;
    if (!c || seen[c->value] || (a == 0 && c->value != 0)) {
      return fail(kStepScalarNormalForm, "functional image is off the expected line",
                  {id, to});
    }
    seen[c->value] = true;
    phi[a] = *c;
  }
  const Permutation tau = compose(phi_bar(g, phi).inverse(), rho1);
  if (auto v = leaves_class(g, tau)) {
    return fail(kStepTwinResidual, "residual map moves a vertex out of its class",
                {*v, tau(*v)});
  }
  d.p = p;
  d.phi = std::move(phi);
  d.tau = table_of(g, tau);
  return finish(g, rho, std::move(d));
}

}  // namespace

DecomposeResult decompose(const LfGraph& g, const Permutation& rho) {
  if (rho.size() != g.vertex_count()) {
    return fail(kStepNotAutomorphism, "permutation size does not match the graph");
  }
  if (auto bad = find_adjacency_violation(g, rho)) {
    return fail(kStepNotAutomorphism, "adjacency is not preserved",
                {bad->first, bad->second});
  }
  return g.n() == 2 ? decompose_n2(g, rho) : decompose_general(g, rho);
}

Permutation compose(const LfGraph& g, const Decomposition& d) {
  if (d.p.rows() != g.n() || d.p.cols() != g.n()) {
    throw std::invalid_argument("P has the wrong shape");
  }
  const Permutation tau = tau_from_table(g, d.tau);
  const Permutation chi = chi_p(g, d.p);
  if (g.n() == 2) {
    if (!d.phi) throw std::invalid_argument("n = 2 decomposition needs phi");
    const Permutation inner = phi_bar(g, *d.phi);
    Permutation out = compose_all({&chi, &inner, &tau});
    if (d.delta) {
      if (d.delta->size() != g.vertex_count() || !is_automorphism(g, *d.delta)) {
        throw std::invalid_argument("delta is not an automorphism");
      }
      out = compose(*d.delta, out);
    } else if (d.swap) {
      throw std::invalid_argument("swap flagged without a delta table");
    }
    return out;
  }
  if (!d.frob_exponent) throw std::invalid_argument("decomposition needs a Frobenius exponent");
  const Permutation inner = pi_extend(g, *d.frob_exponent);
  Permutation out = compose_all({&chi, &inner, &tau});
  if (d.swap) out = compose(sigma_swap(g), out);
  return out;
}

}  // namespace lfg::autos
