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

#include "lfg/graph/lf_graph.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "lfg/common/error.hpp"

namespace lfg::graph {

std::string to_string(Side side) { return side == Side::kVec ? "vec" : "fun"; }

std::uint64_t expected_degree(unsigned q, unsigned n) {
  std::uint64_t d = 1;
  for (unsigned i = 1; i < n; ++i) d *= q;
  return d - 1;
}

LfGraph LfGraph::build(gf::FieldPtr field, unsigned n,
                       const BuildOptions& options) {
  if (n < 2) throw std::invalid_argument("dimension must be at least 2");
  const unsigned q = field->q();
  // q^n, saturated well above any reachable guard.
  constexpr std::uint64_t kSaturate = std::uint64_t{1} << 40;
  std::uint64_t qn = 1;
  for (unsigned i = 0; i < n && qn < kSaturate; ++i) qn *= q;
  const bool over = qn >= kSaturate || 2 * (qn - 1) > options.max_vertices;
  if (qn >= kSaturate || (over && !options.force)) {
    throw SizeGuardError("graph for q=" + std::to_string(q) +
                         ", n=" + std::to_string(n) + " exceeds the guard of " +
                         std::to_string(options.max_vertices) + " vertices");
  }

  LfGraph g;
  g.field_ = std::move(field);
  g.n_ = n;
  g.side_size_ = static_cast<std::uint32_t>(qn - 1);
  g.line_count_ = static_cast<std::uint32_t>((qn - 1) / (q - 1));
  const std::uint32_t total = 2 * g.side_size_;

  std::vector<Vector> vecs;
  vecs.reserve(g.side_size_);
  for (std::uint64_t idx = 1; idx < qn; ++idx) {
    vecs.push_back(Vector::from_index(g.field_, n, idx));
  }

  g.adj_.assign(total, Bitset(total));
  for (std::uint32_t u = 0; u < g.side_size_; ++u) {
    for (std::uint32_t v = 0; v < g.side_size_; ++v) {
      if (linalg::dot(vecs[u], vecs[v]).value == 0) {
        g.adj_[g.side_size_ + u].set(v);
        g.adj_[v].set(g.side_size_ + u);
      }
    }
  }

  // Lines keyed by the index of their monic representative.
  std::map<std::uint64_t, std::vector<VertexId>> by_rep;
  for (std::uint32_t v = 0; v < g.side_size_; ++v) {
    by_rep[linalg::monic_rep(vecs[v]).index()].push_back(v);
  }
  g.line_of_.assign(total, 0);
  std::uint32_t id = 0;
  for (Side side : {Side::kVec, Side::kFun}) {
    const std::uint32_t offset = side == Side::kVec ? 0 : g.side_size_;
    for (const auto& [rep_index, members] : by_rep) {
      Line line{id, side, Vector::from_index(g.field_, n, rep_index), {}};
      for (VertexId m : members) {
        line.members.push_back(m + offset);
        g.line_of_[m + offset] = id;
      }
      g.lines_.push_back(std::move(line));
      ++id;
    }
  }
  return g;
}

std::uint64_t LfGraph::edge_count() const {
  std::uint64_t total = 0;
  for (std::uint32_t v = 0; v < side_size_; ++v) total += adj_[v].count();
  return total;
}

Vector LfGraph::coords(VertexId v) const {
  if (v >= vertex_count()) throw std::out_of_range("vertex id out of range");
  return Vector::from_index(field_, n_, (v % side_size_) + 1);
}

Vertex LfGraph::vertex(VertexId v) const { return Vertex{side(v), coords(v)}; }

VertexId LfGraph::id_of(Side s, const Vector& c) const {
  if (c.size() != n_) throw std::invalid_argument("coordinate length mismatch");
  const std::uint64_t idx = c.index();
  if (idx == 0) throw std::invalid_argument("zero vector is not a vertex");
  const auto base = static_cast<VertexId>(idx - 1);
  return s == Side::kVec ? base : base + side_size_;
}

std::string LfGraph::label(VertexId v) const {
  const Vector c = coords(v);
  std::string out = side(v) == Side::kFun ? "f(" : "(";
  for (unsigned i = 0; i < c.size(); ++i) {
    if (i != 0) out += ",";
    out += std::to_string(c[i].value);
  }
  return out + ")";
}

std::uint32_t LfGraph::degree(VertexId v) const {
  if (v >= vertex_count()) throw std::out_of_range("vertex id out of range");
  return static_cast<std::uint32_t>(adj_[v].count());
}

Bitset LfGraph::side_set(Side s) const {
  Bitset out(vertex_count());
  const std::uint32_t lo = s == Side::kVec ? 0 : side_size_;
  for (std::uint32_t v = lo; v < lo + side_size_; ++v) out.set(v);
  return out;
}

Bitset LfGraph::line_members(std::uint32_t id) const {
  Bitset out(vertex_count());
  for (VertexId m : lines_[id].members) out.set(m);
  return out;
}

bool check_regular(const LfGraph& g) {
  const std::uint64_t want = expected_degree(g.q(), g.n());
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) != want) return false;
  }
  return true;
}

std::vector<std::vector<VertexId>> components(const LfGraph& g) {
  std::vector<std::vector<VertexId>> out;
  Bitset unseen(g.vertex_count());
  unseen.set_all();
  while (unseen.any()) {
    const auto start = static_cast<VertexId>(unseen.first());
    Bitset comp(g.vertex_count());
    comp.set(start);
    Bitset frontier = comp;
    while (frontier.any()) {
      Bitset next = neighbor_set(g, frontier);
      next.subtract(comp);
      comp |= next;
      frontier = std::move(next);
    }
    unseen.subtract(comp);
    out.push_back(comp.to_vector());
  }
  return out;
}

Bitset neighbor_set(const LfGraph& g, const Line& line) {
  Bitset out = g.empty_set();
  for (VertexId m : line.members) out |= g.neighbors(m);
  return out;
}

Bitset neighbor_set(const LfGraph& g, const Bitset& set) {
  Bitset out = g.empty_set();
  set.for_each([&](std::size_t v) { out |= g.neighbors(static_cast<VertexId>(v)); });
  return out;
}

std::vector<std::vector<VertexId>> twin_classes(const LfGraph& g) {
  std::map<Bitset, std::vector<VertexId>> groups;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    groups[g.neighbors(v)].push_back(v);
  }
  std::vector<std::vector<VertexId>> out;
  out.reserve(groups.size());
  for (auto& [row, members] : groups) out.push_back(std::move(members));
  std::sort(out.begin(), out.end());
  return out;
}

bool is_complete_bipartite(const LfGraph& g, const Bitset& a, const Bitset& b) {
  bool ok = true;
  a.for_each([&](std::size_t v) {
    const Bitset& row = g.neighbors(static_cast<VertexId>(v));
    ok = ok && b.is_subset_of(row) && !row.intersects(a);
  });
  b.for_each([&](std::size_t v) {
    const Bitset& row = g.neighbors(static_cast<VertexId>(v));
    ok = ok && a.is_subset_of(row) && !row.intersects(b);
  });
  return ok;
}

}  // namespace lfg::graph
