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

#include "lfg/graph/domination.hpp"

#include <algorithm>
#include <stdexcept>

#include "lfg/common/error.hpp"

namespace lfg::graph {

std::string to_string(DomTarget target) {
  switch (target) {
    case DomTarget::kVecSide:
      return "vec-side";
    case DomTarget::kFunSide:
      return "fun-side";
    case DomTarget::kWhole:
      return "whole";
  }
  return "?";
}

std::string to_string(DomMode mode) {
  return mode == DomMode::kStandard ? "standard" : "total";
}

namespace {

// Set cover instance: pick candidates whose cover sets jointly contain the
// target set.
struct CoverInstance {
  Bitset target;
  std::vector<VertexId> candidates;
  std::vector<Bitset> covers;    // by candidate position
  std::vector<Bitset> coverers;  // by vertex: candidate positions covering it
};

CoverInstance make_instance(const LfGraph& g, DomTarget target, DomMode mode) {
  CoverInstance inst;
  switch (target) {
    case DomTarget::kVecSide:
      inst.target = g.side_set(Side::kVec);
      break;
    case DomTarget::kFunSide:
      inst.target = g.side_set(Side::kFun);
      break;
    case DomTarget::kWhole:
      inst.target = g.empty_set();
      inst.target.set_all();
      break;
  }
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (target == DomTarget::kVecSide && g.side(v) != Side::kFun) continue;
    if (target == DomTarget::kFunSide && g.side(v) != Side::kVec) continue;
    Bitset cover = g.neighbors(v);
    if (target == DomTarget::kWhole && mode == DomMode::kStandard) cover.set(v);
    cover &= inst.target;
    inst.candidates.push_back(v);
    inst.covers.push_back(std::move(cover));
  }
  const std::size_t c = inst.candidates.size();
  inst.coverers.assign(g.vertex_count(), Bitset(c));
  for (std::size_t i = 0; i < c; ++i) {
    inst.covers[i].for_each([&](std::size_t v) { inst.coverers[v].set(i); });
  }
  return inst;
}

std::vector<std::size_t> greedy(const CoverInstance& inst) {
  std::vector<std::size_t> chosen;
  Bitset uncovered = inst.target;
  while (uncovered.any()) {
    std::size_t best = 0;
    std::size_t best_gain = 0;
    for (std::size_t i = 0; i < inst.candidates.size(); ++i) {
      const std::size_t gain = inst.covers[i].and_count(uncovered);
      if (gain > best_gain) {
        best_gain = gain;
        best = i;
      }
    }
    if (best_gain == 0) throw std::logic_error("target cannot be dominated");
    chosen.push_back(best);
    uncovered.subtract(inst.covers[best]);
  }
  return chosen;
}

class BranchAndBound {
 public:
  BranchAndBound(const CoverInstance& inst, Deadline& deadline)
      : inst_(inst), deadline_(deadline) {}

  std::vector<std::size_t> solve() {
    best_ = greedy(inst_);
    Bitset allowed(inst_.candidates.size());
    allowed.set_all();
    std::vector<std::size_t> chosen;
    search(inst_.target, allowed, chosen);
    return best_;
  }

 private:
  void search(const Bitset& uncovered, const Bitset& allowed,
              std::vector<std::size_t>& chosen) {
    deadline_.poll();
    if (uncovered.none()) {
      if (chosen.size() < best_.size()) best_ = chosen;
      return;
    }
    if (chosen.size() + 1 >= best_.size()) return;

    std::size_t max_gain = 0;
    allowed.for_each([&](std::size_t i) {
      max_gain = std::max(max_gain, inst_.covers[i].and_count(uncovered));
    });
    if (max_gain == 0) return;
    const std::size_t remaining = uncovered.count();
    const std::size_t bound = (remaining + max_gain - 1) / max_gain;
    if (chosen.size() + bound >= best_.size()) return;

    // Branch on the uncovered vertex with the fewest admissible dominators.
    std::size_t pivot = 0;
    std::size_t fewest = SIZE_MAX;
    uncovered.for_each([&](std::size_t v) {
      if (fewest == 0) return;
      const std::size_t options = inst_.coverers[v].and_count(allowed);
      if (options < fewest) {
        fewest = options;
        pivot = v;
      }
    });
    if (fewest == 0) return;

    std::vector<std::pair<std::size_t, std::size_t>> options;  // (gain, cand)
    (inst_.coverers[pivot] & allowed).for_each([&](std::size_t i) {
      options.emplace_back(inst_.covers[i].and_count(uncovered), i);
    });
    std::sort(options.begin(), options.end(),
              [](const auto& a, const auto& b) {
                return a.first != b.first ? a.first > b.first : a.second < b.second;
              });

    // Sibling branches exclude earlier choices: a solution containing an
    // earlier option was already explored.
    Bitset remaining_allowed = allowed;
    for (const auto& [gain, cand] : options) {
      Bitset next = uncovered;
      next.subtract(inst_.covers[cand]);
      chosen.push_back(cand);
      remaining_allowed.reset(cand);
      search(next, remaining_allowed, chosen);
      chosen.pop_back();
      if (chosen.size() + 1 >= best_.size()) return;
    }
  }

  const CoverInstance& inst_;
  Deadline& deadline_;
  std::vector<std::size_t> best_;
};

DominationResult to_result(const CoverInstance& inst,
                           const std::vector<std::size_t>& picks) {
  DominationResult r;
  for (std::size_t i : picks) r.witness.push_back(inst.candidates[i]);
  std::sort(r.witness.begin(), r.witness.end());
  r.size = static_cast<std::uint32_t>(r.witness.size());
  return r;
}

}  // namespace

DominationResult domination_number(const LfGraph& g, DomTarget target,
                                   DomMode mode, Deadline& deadline) {
  if (g.vertex_count() > kMaxDominationVertices) {
    throw SizeGuardError("exact domination is limited to " +
                         std::to_string(kMaxDominationVertices) + " vertices");
  }
  const CoverInstance inst = make_instance(g, target, mode);
  BranchAndBound solver(inst, deadline);
  return to_result(inst, solver.solve());
}

DominationResult domination_number(const LfGraph& g, DomTarget target,
                                   DomMode mode) {
  Deadline unlimited;
  return domination_number(g, target, mode, unlimited);
}

DominationResult domination_exhaustive(const LfGraph& g, DomTarget target,
                                       DomMode mode) {
  if (g.vertex_count() > kMaxExhaustiveVertices) {
    throw SizeGuardError("exhaustive domination is limited to " +
                         std::to_string(kMaxExhaustiveVertices) + " vertices");
  }
  const CoverInstance inst = make_instance(g, target, mode);
  const std::size_t c = inst.candidates.size();
  for (std::size_t k = 0; k <= c; ++k) {
    // Lexicographic k-subsets of candidate positions.
    std::vector<std::size_t> pick(k);
    for (std::size_t i = 0; i < k; ++i) pick[i] = i;
    while (true) {
      Bitset uncovered = inst.target;
      for (std::size_t i : pick) uncovered.subtract(inst.covers[i]);
      if (uncovered.none()) return to_result(inst, pick);
      std::size_t i = k;
      while (i > 0 && pick[i - 1] == c - k + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  throw std::logic_error("target cannot be dominated");
}

bool dominates(const LfGraph& g, DomTarget target, DomMode mode,
               const std::vector<VertexId>& set) {
  Bitset in_set = g.empty_set();
  for (VertexId v : set) {
    if (v >= g.vertex_count()) return false;
    if (target == DomTarget::kVecSide && g.side(v) != Side::kFun) return false;
    if (target == DomTarget::kFunSide && g.side(v) != Side::kVec) return false;
    in_set.set(v);
  }
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (target == DomTarget::kVecSide && g.side(v) != Side::kVec) continue;
    if (target == DomTarget::kFunSide && g.side(v) != Side::kFun) continue;
    const bool excused = mode == DomMode::kStandard && in_set.test(v);
    if (!excused && !g.neighbors(v).intersects(in_set)) return false;
  }
  return true;
}

std::vector<VertexId> explicit_side_dominator(const LfGraph& g) {
  const auto& f = g.field_ptr();
  const Vector e1 = Vector::basis(f, g.n(), 0);
  const Vector e2 = Vector::basis(f, g.n(), 1);
  std::vector<VertexId> out;
  for (unsigned a = 0; a < g.q(); ++a) {
    out.push_back(g.id_of(Side::kFun, linalg::add(e1, linalg::scale(gf::felt(a), e2))));
  }
  out.push_back(g.id_of(Side::kFun, e2));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace lfg::graph
