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

#include <gtest/gtest.h>

#include "lfg/autos/check.hpp"
#include "lfg/autos/decompose.hpp"
#include "lfg/autos/enumerate.hpp"
#include "lfg/autos/formulas.hpp"
#include "lfg/autos/generators.hpp"
#include "lfg/autos/serialize.hpp"

namespace lfg::autos {
namespace {

using gf::felt;
using graph::Side;
using linalg::Vector;

LfGraph make(unsigned q, unsigned n) { return LfGraph::build(gf::Field::of_order(q), n); }

VertexId vid(const LfGraph& g, Side side, std::initializer_list<unsigned> xs) {
  std::vector<Felt> c;
  for (unsigned x : xs) c.push_back(felt(x));
  return g.id_of(side, Vector(g.field_ptr(), c));
}

Matrix mat(const LfGraph& g, std::initializer_list<unsigned> xs) {
  std::vector<Felt> c;
  for (unsigned x : xs) c.push_back(felt(x));
  return Matrix(g.field_ptr(), g.n(), g.n(), c);
}

std::vector<Permutation> all_automorphisms(const LfGraph& g) {
  std::vector<Permutation> out;
  Deadline none;
  for_each_automorphism(
      g,
      [&](std::span<const std::uint32_t> m) {
        out.emplace_back(std::vector<VertexId>(m.begin(), m.end()));
        return true;
      },
      none);
  return out;
}

Permutation transposition(std::uint32_t size, VertexId a, VertexId b) {
  std::vector<VertexId> img(size);
  for (VertexId v = 0; v < size; ++v) img[v] = v;
  std::swap(img[a], img[b]);
  return Permutation(img);
}

// --- permutations ------------------------------------------------------------

TEST(PermutationTest, BasicAlgebra) {
  const Permutation p(std::vector<VertexId>{1, 2, 0});
  EXPECT_EQ(compose(p, p.inverse()), Permutation::identity(3));
  EXPECT_EQ(compose(p, p)(0), 2u);
  EXPECT_TRUE(Permutation::identity(4).is_identity());
  EXPECT_THROW(Permutation(std::vector<VertexId>{0, 0}), std::invalid_argument);
  EXPECT_THROW(Permutation(std::vector<VertexId>{0, 2}), std::invalid_argument);
}

// --- generators ----------------------------------------------------------------

TEST(ChiP, Examples) {
  const LfGraph g = make(2, 2);
  EXPECT_TRUE(chi_p(g, Matrix::identity(g.field_ptr(), 2)).is_identity());
  const Permutation swap = chi_p(g, mat(g, {0, 1, 1, 0}));
  for (Side s : {Side::kVec, Side::kFun}) {
    EXPECT_EQ(swap(vid(g, s, {1, 0})), vid(g, s, {0, 1}));
    EXPECT_EQ(swap(vid(g, s, {0, 1})), vid(g, s, {1, 0}));
    EXPECT_EQ(swap(vid(g, s, {1, 1})), vid(g, s, {1, 1}));
  }
  EXPECT_THROW(chi_p(g, mat(g, {1, 1, 1, 1})), std::invalid_argument);
}

TEST(PiExtend, Examples) {
  const LfGraph g = make(4, 2);
  EXPECT_TRUE(pi_extend(g, 0).is_identity());
  EXPECT_EQ(pi_extend(g, 1)(vid(g, Side::kVec, {2, 1})), vid(g, Side::kVec, {3, 1}));
  EXPECT_THROW(pi_extend(g, 2), std::out_of_range);
  EXPECT_THROW(pi_extend(make(5, 2), 1), std::out_of_range);
}

TEST(SigmaSwap, Examples) {
  const LfGraph g = make(2, 3);
  const Permutation s = sigma_swap(g);
  EXPECT_TRUE(compose(s, s).is_identity());
  EXPECT_TRUE(is_automorphism(g, s));
  for (VertexId v = 0; v < g.side_size(); ++v) EXPECT_EQ(g.side(s(v)), Side::kFun);
}

TEST(TauFromTable, Examples) {
  const LfGraph g3 = make(3, 2);
  EXPECT_TRUE(tau_from_table(g3, {}).is_identity());
  const auto& line = g3.line(2);
  const Permutation t =
      tau_from_table(g3, {{line.id, {line.members[1], line.members[0]}}});
  EXPECT_TRUE(is_automorphism(g3, t));
  EXPECT_FALSE(t.is_identity());

  const LfGraph g2 = make(2, 3);
  Rng rng(1);
  EXPECT_TRUE(tau_from_table(g2, random_tau_table(g2, rng)).is_identity());

  EXPECT_THROW(tau_from_table(g3, {{line.id, {line.members[0], line.members[0]}}}),
               std::invalid_argument);
  EXPECT_THROW(tau_from_table(g3, {{line.id, {line.members[0], g3.line(3).members[0]}}}),
               std::invalid_argument);
  EXPECT_THROW(tau_from_table(g3, {{line.id, {line.members[0]}}}), std::invalid_argument);
}

TEST(PhiBar, Examples) {
  const LfGraph g = make(3, 2);
  EXPECT_TRUE(phi_bar(g, {felt(0), felt(1), felt(2)}).is_identity());
  const Permutation p = phi_bar(g, {felt(0), felt(2), felt(1)});
  EXPECT_EQ(p(vid(g, Side::kFun, {1, 1})), vid(g, Side::kFun, {1, 2}));
  EXPECT_TRUE(is_automorphism(g, p));
  EXPECT_THROW(phi_bar(g, {felt(1), felt(0), felt(2)}), std::invalid_argument);
  EXPECT_THROW(phi_bar(g, {felt(0), felt(1), felt(1)}), std::invalid_argument);
  EXPECT_THROW(phi_bar(make(2, 3), {felt(0), felt(1)}), std::invalid_argument);
}

TEST(PhiBar, IdentityAcrossFields) {
  for (unsigned q : {2u, 4u, 5u, 7u, 8u, 9u}) {
    const LfGraph g = make(q, 2);
    std::vector<Felt> id;
    for (unsigned a = 0; a < q; ++a) id.push_back(felt(a));
    EXPECT_TRUE(phi_bar(g, id).is_identity()) << q;
  }
}

TEST(DeltaFor, Examples) {
  const LfGraph g = make(3, 2);
  Rng rng(5);
  const Permutation chi = chi_p(g, linalg::random_invertible(g.field_ptr(), 2, rng));
  EXPECT_TRUE(delta_for(g, chi).is_identity());

  // Full side swap: every component crosses.
  const Permutation full = delta_for(g, sigma_swap(g));
  for (VertexId v = 0; v < g.vertex_count(); ++v) EXPECT_NE(g.side(full(v)), g.side(v));
  EXPECT_TRUE(is_automorphism(g, full));

  // One component swapped in place, the others fixed.
  const auto comps = n2_components(g);
  TauTable swap_one;
  std::vector<VertexId> img(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) img[v] = v;
  const auto& s = g.line(comps[1].vec_line).members;
  const auto& f = g.line(comps[1].fun_line).members;
  for (std::size_t i = 0; i < s.size(); ++i) {
    img[s[i]] = f[i];
    img[f[i]] = s[i];
  }
  const Permutation mixed(img);
  ASSERT_TRUE(is_automorphism(g, mixed));
  const Permutation delta = delta_for(g, mixed);
  EXPECT_TRUE(is_automorphism(g, delta));
  EXPECT_TRUE(compose(delta, delta).is_identity());
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const bool in_swapped = g.line_of(v) == comps[1].vec_line || g.line_of(v) == comps[1].fun_line;
    EXPECT_EQ(delta(v) != v, in_swapped);
  }
  const Permutation rest = compose(delta.inverse(), mixed);
  for (VertexId v = 0; v < g.side_size(); ++v) EXPECT_EQ(g.side(rest(v)), Side::kVec);

  EXPECT_THROW(delta_for(g, transposition(g.vertex_count(), 0, 2)), std::invalid_argument);
}

TEST(IsAutomorphism, Examples) {
  const LfGraph g = make(2, 2);
  EXPECT_TRUE(is_automorphism(g, Permutation::identity(6)));
  const Permutation bad =
      transposition(6, vid(g, Side::kVec, {1, 0}), vid(g, Side::kVec, {1, 1}));
  EXPECT_FALSE(is_automorphism(g, bad));
  EXPECT_TRUE(find_adjacency_violation(g, bad).has_value());
}

// 100+ random instances per generator.
TEST(GeneratorSoundness, RandomInstances) {
  Rng rng(2026);
  for (auto [q, n] : {std::pair{2u, 2u}, {3u, 2u}, {4u, 2u}, {5u, 2u}, {2u, 3u}, {3u, 3u},
                      {4u, 3u}}) {
    const LfGraph g = make(q, n);
    for (int i = 0; i < 100; ++i) {
      ASSERT_TRUE(is_automorphism(g, chi_p(g, linalg::random_invertible(g.field_ptr(), n, rng))));
      ASSERT_TRUE(is_automorphism(g, pi_extend(g, rng.below(g.field().k()))));
      ASSERT_TRUE(is_automorphism(g, tau_from_table(g, random_tau_table(g, rng))));
      if (n == 2) {
        ASSERT_TRUE(is_automorphism(g, phi_bar(g, random_phi(g.field(), rng))));
        const Permutation rho = random_n2_automorphism(g, rng);
        ASSERT_TRUE(is_automorphism(g, rho));
        ASSERT_TRUE(is_automorphism(g, delta_for(g, rho)));
      }
    }
    ASSERT_TRUE(is_automorphism(g, sigma_swap(g)));
  }
}

TEST(GeneratorSoundness, ChiPIsAHomomorphism) {
  Rng rng(99);
  for (auto [q, n] : {std::pair{3u, 2u}, {2u, 3u}, {4u, 3u}}) {
    const LfGraph g = make(q, n);
    for (int i = 0; i < 100; ++i) {
      const Matrix a = linalg::random_invertible(g.field_ptr(), n, rng);
      const Matrix b = linalg::random_invertible(g.field_ptr(), n, rng);
      ASSERT_EQ(compose(chi_p(g, a), chi_p(g, b)), chi_p(g, linalg::mat_mul(a, b)));
    }
  }
}

TEST(GeneratorSoundness, ClosureUnderCompositionAndInverse) {
  Rng rng(17);
  const LfGraph g = make(3, 3);
  for (int i = 0; i < 50; ++i) {
    const Permutation a = compose(sigma_swap(g), chi_p(g, linalg::random_invertible(g.field_ptr(), 3, rng)));
    const Permutation b = tau_from_table(g, random_tau_table(g, rng));
    ASSERT_TRUE(is_automorphism(g, compose(a, b)));
    ASSERT_TRUE(is_automorphism(g, compose(b, a).inverse()));
  }
}

// --- line action and structure ---------------------------------------------------

TEST(LineActionTest, Examples) {
  const LfGraph g = make(2, 3);
  const LineAction id = line_action(g, Permutation::identity(g.vertex_count()));
  ASSERT_TRUE(id.ok);
  ASSERT_EQ(id.image.size(), 14u);
  for (std::uint32_t i = 0; i < 14; ++i) EXPECT_EQ(id.image[i], i);

  const LineAction s = line_action(g, sigma_swap(g));
  ASSERT_TRUE(s.ok);
  for (std::uint32_t i = 0; i < 7; ++i) EXPECT_EQ(s.image[i], i + 7);

  Rng rng(3);
  const LineAction c =
      line_action(g, chi_p(g, linalg::random_invertible(g.field_ptr(), 3, rng)));
  ASSERT_TRUE(c.ok);
  for (std::uint32_t i = 0; i < 7; ++i) EXPECT_LT(c.image[i], 7u);

  const LfGraph g3 = make(3, 2);
  const Permutation split = transposition(16, g3.line(0).members[0], g3.line(1).members[0]);
  EXPECT_FALSE(line_action(g3, split).ok);
}

TEST(Structure, Examples) {
  const LfGraph g = make(3, 2);
  const StructureVerdict id = check_structure(g, Permutation::identity(16));
  EXPECT_TRUE(id.line_action && id.n_commutation && id.intersection_identity && id.side_pure);
  EXPECT_TRUE(structure_holds(g, id));
  EXPECT_THROW(check_structure(g, transposition(16, 0, 2)), std::invalid_argument);

  // Swap one component in place: componentwise yes, globally mixed.
  const auto comps = n2_components(g);
  std::vector<VertexId> img(16);
  for (VertexId v = 0; v < 16; ++v) img[v] = v;
  const auto& s = g.line(comps[0].vec_line).members;
  const auto& f = g.line(comps[0].fun_line).members;
  for (std::size_t i = 0; i < s.size(); ++i) {
    img[s[i]] = f[i];
    img[f[i]] = s[i];
  }
  const StructureVerdict mixed = check_structure(g, Permutation(img));
  EXPECT_EQ(mixed.sides, SideBehavior::kMixed);
  EXPECT_FALSE(mixed.side_pure);
  ASSERT_TRUE(mixed.componentwise.has_value());
  EXPECT_TRUE(*mixed.componentwise);
  EXPECT_TRUE(structure_holds(g, mixed));
}

TEST(Structure, ExhaustiveSmallGroups) {
  for (auto [q, n] : {std::pair{2u, 2u}, {3u, 2u}, {2u, 3u}}) {
    const LfGraph g = make(q, n);
    for (const auto& p : all_automorphisms(g)) {
      const StructureVerdict v = check_structure(g, p);
      ASSERT_TRUE(v.line_action);
      ASSERT_TRUE(v.n_commutation);
      ASSERT_TRUE(v.intersection_identity);
      if (n == 3) {
        ASSERT_TRUE(v.side_pure);
        if (v.sides == SideBehavior::kSwapping) ASSERT_TRUE(v.intersection_via_sigma);
      }
      ASSERT_TRUE(structure_holds(g, v)) << v.first_failure;
    }
  }
}

// --- counting -----------------------------------------------------------------------

TEST(Formulas, Examples) {
  EXPECT_EQ(formula_card_n2(2), 48);
  EXPECT_EQ(formula_card_general(2, 3), 10080);
  EXPECT_EQ(formula_twin_stabilizer(3, 2), 256);
  EXPECT_EQ(formula_component_isos(3), 8);
  EXPECT_EQ(formula_card_n2(3), 98304);
  EXPECT_EQ(line_count(4, 3), 21);
  EXPECT_GT(formula_card_n2(5), BigCount(std::numeric_limits<std::uint64_t>::max()));
  EXPECT_THROW(formula_card_n2(6), std::invalid_argument);
  EXPECT_THROW(formula_card_general(3, 2), std::invalid_argument);
  EXPECT_THROW(formula_twin_stabilizer(3, 1), std::invalid_argument);
}

TEST(Enumerate, DirectCounts) {
  Deadline none;
  EXPECT_EQ(count_automorphisms_direct(make(2, 2), none), 48);
  EXPECT_EQ(count_automorphisms_direct(make(3, 2), none), 98304);
  // Fano incidence graph: PGL(3,2) extended by the duality.
  EXPECT_EQ(count_automorphisms_direct(make(2, 3), none), 336);
  EXPECT_THROW(count_automorphisms_direct(make(4, 2), none), SizeGuardError);
}

TEST(Enumerate, QuotientCounts) {
  Deadline none;
  struct Case { unsigned q, n; long long quotient; };
  for (const Case c : {Case{2, 2, 48}, Case{3, 2, 384}, Case{4, 2, 3840}, Case{2, 3, 336},
                       Case{3, 3, 11232}, Case{4, 3, 241920}}) {
    const LfGraph g = make(c.q, c.n);
    const QuotientCount qc = count_automorphisms_quotient(g, none);
    EXPECT_EQ(qc.quotient, c.quotient) << c.q << "," << c.n;
    EXPECT_EQ(qc.within, formula_twin_stabilizer(c.q, c.n));
    EXPECT_EQ(qc.total, qc.quotient * qc.within);
  }
}

TEST(Enumerate, QuotientAndDirectAgree) {
  Deadline none;
  for (auto [q, n] : {std::pair{2u, 2u}, {3u, 2u}, {2u, 3u}}) {
    const LfGraph g = make(q, n);
    EXPECT_EQ(count_automorphisms_quotient(g, none).total, count_automorphisms_direct(g, none));
  }
}

TEST(Enumerate, N2MatchesFormula) {
  Deadline none;
  for (unsigned q : {2u, 3u, 4u, 5u, 7u}) {
    EXPECT_EQ(count_automorphisms_quotient(make(q, 2), none).total, formula_card_n2(q)) << q;
  }
}

TEST(Enumerate, TwinStabilizerMatchesFormula) {
  Deadline none;
  for (auto [q, n] : {std::pair{2u, 2u}, {3u, 2u}, {2u, 3u}, {4u, 2u}, {3u, 3u}}) {
    const LfGraph g = make(q, n);
    EXPECT_EQ(count_twin_stabilizer(g, none), formula_twin_stabilizer(q, n));
  }
  // Cross-check by filtering the full group.
  const LfGraph g = make(3, 2);
  std::uint64_t fixing = 0;
  for (const auto& p : all_automorphisms(g)) {
    const LineAction a = line_action(g, p);
    bool all = true;
    for (std::uint32_t i = 0; i < a.image.size(); ++i) all = all && a.image[i] == i;
    fixing += all;
  }
  EXPECT_EQ(fixing, 256u);
}

TEST(Enumerate, ComponentIsomorphisms) {
  Deadline none;
  for (unsigned q : {2u, 3u, 4u}) {
    const LfGraph g = make(q, 2);
    EXPECT_EQ(count_component_isomorphisms(g, 0, 1, none), formula_component_isos(q));
    EXPECT_EQ(count_component_isomorphisms(g, 0, 0, none), formula_component_isos(q));
  }
  EXPECT_THROW(count_component_isomorphisms(make(2, 3), 0, 1, none), std::invalid_argument);
}

TEST(Enumerate, LiftIsAutomorphism) {
  Deadline none;
  const LfGraph g = make(3, 3);
  const TwinQuotient tq = twin_quotient(g);
  std::uint64_t seen = 0;
  for_each_quotient_automorphism(
      g, tq,
      [&](std::span<const std::uint32_t> m) {
        EXPECT_TRUE(is_automorphism(g, lift(g, tq, m)));
        return ++seen < 200;
      },
      none);
  EXPECT_EQ(seen, 200u);
}

TEST(Enumerate, IsoSearchOnExternalGraph) {
  // 4-cycle: dihedral group of order 8.
  AdjacencyRows c4(4, Bitset(4));
  for (std::uint32_t i = 0; i < 4; ++i) {
    c4[i].set((i + 1) % 4);
    c4[(i + 1) % 4].set(i);
  }
  Deadline none;
  IsoSearch s(c4, c4, none);
  EXPECT_EQ(s.enumerate([](std::span<const std::uint32_t>) { return true; }), 8u);
  IsoSearch t(c4, c4, none);
  EXPECT_EQ(t.count_group(), 8);
  AdjacencyRows path(4, Bitset(4));
  for (std::uint32_t i = 0; i + 1 < 4; ++i) {
    path[i].set(i + 1);
    path[i + 1].set(i);
  }
  IsoSearch u(c4, path, none);
  EXPECT_FALSE(u.first().has_value());
}

// --- decomposition --------------------------------------------------------------------

void expect_round_trip(const LfGraph& g, const Permutation& rho) {
  const DecomposeResult r = decompose(g, rho);
  if (const auto* f = std::get_if<DecompositionFailure>(&r)) {
    FAIL() << f->step << ": " << f->message;
  }
  const Decomposition& d = std::get<Decomposition>(r);
  EXPECT_EQ(compose(g, d), rho);
  EXPECT_TRUE(linalg::is_invertible(d.p));
  if (d.phi) {
    EXPECT_EQ((*d.phi)[0].value, 0);
  }
  for (const auto& [line_id, images] : d.tau) {
    for (VertexId v : images) EXPECT_EQ(g.line_of(v), line_id);
  }
}

TEST(Decompose, Identity) {
  const LfGraph g = make(3, 3);
  const auto r = decompose(g, Permutation::identity(g.vertex_count()));
  const Decomposition& d = std::get<Decomposition>(r);
  EXPECT_FALSE(d.swap);
  EXPECT_EQ(d.p, Matrix::identity(g.field_ptr(), 3));
  EXPECT_EQ(d.frob_exponent, 0u);
  EXPECT_TRUE(d.tau.empty());
}

TEST(Decompose, GeneratedInputWithSwapF4) {
  const LfGraph g = make(4, 3);
  Rng rng(41);
  const Permutation chi = chi_p(g, linalg::random_invertible(g.field_ptr(), 3, rng));
  const Permutation pi = pi_extend(g, 1);
  const Permutation tau = tau_from_table(g, random_tau_table(g, rng));
  const Permutation s = sigma_swap(g);
  const Permutation rho = compose_all({&s, &chi, &pi, &tau});
  const auto r = decompose(g, rho);
  ASSERT_TRUE(std::holds_alternative<Decomposition>(r));
  EXPECT_TRUE(std::get<Decomposition>(r).swap);
  EXPECT_EQ(std::get<Decomposition>(r).frob_exponent, 1u);
  EXPECT_EQ(compose(g, std::get<Decomposition>(r)), rho);
}

TEST(Decompose, EveryAutomorphismOfSmallInstances) {
  for (auto [q, n] : {std::pair{2u, 2u}, {2u, 3u}, {3u, 2u}}) {
    const LfGraph g = make(q, n);
    for (const auto& p : all_automorphisms(g)) expect_round_trip(g, p);
  }
}

TEST(Decompose, RandomGeneratorProducts) {
  Rng rng(7);
  for (auto [q, n] : {std::pair{3u, 3u}, {4u, 3u}, {8u, 3u}, {9u, 3u}}) {
    const LfGraph g = make(q, n);
    for (int i = 0; i < 100; ++i) {
      const Permutation chi = chi_p(g, linalg::random_invertible(g.field_ptr(), n, rng));
      const Permutation pi = pi_extend(g, rng.below(g.field().k()));
      const Permutation tau = tau_from_table(g, random_tau_table(g, rng));
      Permutation rho = compose_all({&chi, &pi, &tau});
      if (rng.coin()) rho = compose(sigma_swap(g), rho);
      expect_round_trip(g, rho);
    }
  }
  for (unsigned q : {4u, 5u, 8u, 9u}) {
    const LfGraph g = make(q, 2);
    for (int i = 0; i < 100; ++i) expect_round_trip(g, random_n2_automorphism(g, rng));
  }
}

TEST(Decompose, Failures) {
  const LfGraph g = make(3, 3);
  const auto bad = decompose(g, transposition(g.vertex_count(), 0, 2));
  ASSERT_TRUE(std::holds_alternative<DecompositionFailure>(bad));
  EXPECT_EQ(std::get<DecompositionFailure>(bad).step, kStepNotAutomorphism);
  EXPECT_FALSE(std::get<DecompositionFailure>(bad).witness.empty());
}

TEST(Compose, Examples) {
  const LfGraph g = make(2, 3);
  Decomposition d;
  d.p = Matrix::identity(g.field_ptr(), 3);
  d.frob_exponent = 0;
  EXPECT_TRUE(compose(g, d).is_identity());
  d.swap = true;
  EXPECT_EQ(compose(g, d), sigma_swap(g));
  d.frob_exponent.reset();
  EXPECT_THROW(compose(g, d), std::invalid_argument);
  const LfGraph g2 = make(3, 2);
  Decomposition e;
  e.p = Matrix::identity(g2.field_ptr(), 2);
  EXPECT_THROW(compose(g2, e), std::invalid_argument);
}

// --- serialization --------------------------------------------------------------------

TEST(Serialize, PermutationRoundTrip) {
  const LfGraph g = make(2, 2);
  const Permutation p = sigma_swap(g);
  const Json j = permutation_to_json(g, p);
  EXPECT_EQ(j.dump(), R"({"q":2,"n":2,"image":[3,4,5,0,1,2]})");
  const PermutationFile f = permutation_from_json(j);
  EXPECT_EQ(Permutation(f.image), p);
  EXPECT_THROW(permutation_from_json(Json::parse(R"({"q":2})")), std::invalid_argument);
  EXPECT_THROW(permutation_from_json(Json::parse(R"({"q":2,"n":2,"image":[-1]})")),
               std::invalid_argument);
}

TEST(Serialize, DecompositionRoundTrip) {
  Rng rng(8);
  for (auto [q, n] : {std::pair{3u, 2u}, {4u, 2u}, {4u, 3u}}) {
    const LfGraph g = make(q, n);
    const Permutation rho =
        n == 2 ? random_n2_automorphism(g, rng)
               : compose(sigma_swap(g), tau_from_table(g, random_tau_table(g, rng)));
    const auto d = std::get<Decomposition>(decompose(g, rho));
    const Json j = decomposition_to_json(g, d);
    const Decomposition back = decomposition_from_json(g, Json::parse(j.dump()));
    EXPECT_EQ(compose(g, back), rho);
    EXPECT_EQ(decomposition_to_json(g, back), j);
  }
}

}  // namespace
}  // namespace lfg::autos
