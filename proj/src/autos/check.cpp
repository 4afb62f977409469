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

#include "lfg/autos/check.hpp"

#include <stdexcept>

#include "lfg/autos/generators.hpp"

namespace lfg::autos {

using graph::Side;

std::optional<std::pair<VertexId, VertexId>> find_adjacency_violation(
    const LfGraph& g, const Permutation& perm) {
  if (perm.size() != g.vertex_count()) {
    throw std::invalid_argument("permutation size does not match the graph");
  }
  for (VertexId x = 0; x < g.vertex_count(); ++x) {
    const Bitset mapped = apply(perm, g.neighbors(x));
    const Bitset& expected = g.neighbors(perm(x));
    if (mapped == expected) continue;
    // Some y has adjacency to x that differs from rho(y) to rho(x).
    const Permutation inv = perm.inverse();
    for (VertexId z = 0; z < g.vertex_count(); ++z) {
      if (mapped.test(z) != expected.test(z)) return std::make_pair(x, inv(z));
    }
  }
  return std::nullopt;
}

bool is_automorphism(const LfGraph& g, const Permutation& perm) {
  return !find_adjacency_violation(g, perm).has_value();
}

LineAction line_action(const LfGraph& g, const Permutation& perm) {
  LineAction out;
  out.image.resize(g.lines().size());
  std::vector<bool> hit(g.lines().size(), false);
  for (const auto& line : g.lines()) {
    const std::uint32_t target = g.line_of(perm(line.members.front()));
    for (VertexId m : line.members) {
      if (g.line_of(perm(m)) != target) {
        out.reason = "class " + std::to_string(line.id) + " is split";
        out.witness = {line.members.front(), m};
        out.image.clear();
        return out;
      }
    }
    if (hit[target]) {
      out.reason = "two classes share the image class " + std::to_string(target);
      out.witness = {line.members.front()};
      out.image.clear();
      return out;
    }
    hit[target] = true;
    out.image[line.id] = target;
  }
  out.ok = true;
  return out;
}

SideBehavior side_behavior(const LfGraph& g, const Permutation& perm) {
  bool same = false;
  bool cross = false;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    (g.side(perm(v)) == g.side(v) ? same : cross) = true;
  }
  if (same && cross) return SideBehavior::kMixed;
  return cross ? SideBehavior::kSwapping : SideBehavior::kPreserving;
}

namespace {

std::vector<Bitset> line_neighborhoods(const LfGraph& g) {
  std::vector<Bitset> out;
  out.reserve(g.lines().size());
  for (const auto& line : g.lines()) out.push_back(graph::neighbor_set(g, line));
  return out;
}

bool intersection_identity_holds(const LfGraph& g, const Permutation& perm,
                                 const std::vector<Bitset>& nbhd) {
  for (const auto& target : g.lines()) {
    Bitset meet = g.empty_set();
    meet.set_all();
    bool any = false;
    for (const auto& s : g.lines()) {
      if (!nbhd[s.id].test(target.members.front())) continue;
      any = true;
      meet &= graph::neighbor_set(g, apply(perm, g.line_members(s.id)));
    }
    if (!any) return false;
    if (!(meet == apply(perm, g.line_members(target.id)))) return false;
  }
  return true;
}

}  // namespace

StructureVerdict check_structure(const LfGraph& g, const Permutation& perm) {
  if (auto bad = find_adjacency_violation(g, perm)) {
    throw std::invalid_argument("not an automorphism: pair (" +
                                std::to_string(bad->first) + ", " +
                                std::to_string(bad->second) + ")");
  }
  StructureVerdict v;
  const LineAction action = line_action(g, perm);
  v.line_action = action.ok;
  const auto nbhd = line_neighborhoods(g);

  v.n_commutation = action.ok;
  if (action.ok) {
    for (const auto& s : g.lines()) {
      if (!(apply(perm, nbhd[s.id]) == nbhd[action.image[s.id]])) {
        v.n_commutation = false;
        break;
      }
    }
  }
  v.intersection_identity = intersection_identity_holds(g, perm, nbhd);
  v.sides = side_behavior(g, perm);
  v.side_pure = v.sides != SideBehavior::kMixed;
  if (v.sides == SideBehavior::kSwapping) {
    v.intersection_via_sigma =
        intersection_identity_holds(g, compose(sigma_swap(g), perm), nbhd);
  }
  if (g.n() == 2 && action.ok) {
    bool ok = true;
    const auto comps = n2_components(g);
    std::vector<std::uint32_t> comp_of_line(g.lines().size());
    for (std::uint32_t i = 0; i < comps.size(); ++i) {
      comp_of_line[comps[i].vec_line] = i;
      comp_of_line[comps[i].fun_line] = i;
    }
    for (const auto& c : comps) {
      const std::uint32_t a = action.image[c.vec_line];
      const std::uint32_t b = action.image[c.fun_line];
      if (comp_of_line[a] != comp_of_line[b] || a == b) ok = false;
    }
    v.componentwise = ok;
  } else if (g.n() == 2) {
    v.componentwise = false;
  }

  if (!v.line_action) {
    v.first_failure = "line-action: " + action.reason;
  } else if (!v.n_commutation) {
    v.first_failure = "n-commutation";
  } else if (!v.intersection_identity) {
    v.first_failure = "intersection-identity";
  } else if (g.n() >= 3 && !v.side_pure) {
    v.first_failure = "side-purity";
  } else if (v.componentwise && !*v.componentwise) {
    v.first_failure = "componentwise";
  }
  return v;
}

bool structure_holds(const LfGraph& g, const StructureVerdict& v) {
  (void)g;
  return v.first_failure.empty();
}

}  // namespace lfg::autos
