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
#include <string>
#include <vector>

#include "lfg/common/bitset.hpp"
#include "lfg/gf/field.hpp"
#include "lfg/linalg/linalg.hpp"

namespace lfg::graph {

using linalg::Vector;
using VertexId = std::uint32_t;

enum class Side { kVec, kFun };

std::string to_string(Side side);

// A vertex: a nonzero vector (Vec) or the functional f_u for nonzero u (Fun).
struct Vertex {
  Side side;
  Vector coords;
};

// A twin class: the q-1 nonzero multiples of a monic representative, on one
// side of the bipartition.
struct Line {
  std::uint32_t id;
  Side side;
  Vector rep;
  std::vector<VertexId> members;  // ordered by vertex id
};

struct BuildOptions {
  // Refuse to build above this many vertices unless force is set.
  std::uint64_t max_vertices = 20000;
  bool force = false;
};

// Linear functional graph of F_q^n: Vec vertices are the nonzero vectors,
// Fun vertices the nonzero functionals, f_u ~ v iff u.v = 0.
//
// Vertex ids: Vec vertices 0..N-1 and Fun vertices N..2N-1 with N = q^n - 1,
// each side ordered lexicographically by coordinates. Line ids: Vec lines
// 0..M-1 then Fun lines M..2M-1 with M = (q^n-1)/(q-1), ordered by monic
// representative.
class LfGraph {
 public:
  // Throws std::invalid_argument for n < 2 and SizeGuardError when the
  // vertex count exceeds the guard.
  static LfGraph build(gf::FieldPtr field, unsigned n,
                       const BuildOptions& options = {});

  const gf::Field& field() const { return *field_; }
  const gf::FieldPtr& field_ptr() const { return field_; }
  unsigned q() const { return field_->q(); }
  unsigned n() const { return n_; }
  std::uint32_t side_size() const { return side_size_; }
  std::uint32_t vertex_count() const { return 2 * side_size_; }
  std::uint32_t line_count_per_side() const { return line_count_; }
  std::uint64_t edge_count() const;

  Side side(VertexId v) const { return v < side_size_ ? Side::kVec : Side::kFun; }
  Vector coords(VertexId v) const;
  Vertex vertex(VertexId v) const;
  // Throws std::invalid_argument for the zero vector.
  VertexId id_of(Side side, const Vector& coords) const;
  // The vertex on the other side with the same coordinates.
  VertexId mate(VertexId v) const {
    return v < side_size_ ? v + side_size_ : v - side_size_;
  }
  std::string label(VertexId v) const;

  bool adjacent(VertexId a, VertexId b) const { return adj_[a].test(b); }
  const Bitset& neighbors(VertexId v) const { return adj_[v]; }
  // Throws std::out_of_range for an invalid id.
  std::uint32_t degree(VertexId v) const;

  Bitset empty_set() const { return Bitset(vertex_count()); }
  Bitset side_set(Side side) const;

  const std::vector<Line>& lines() const { return lines_; }
  const Line& line(std::uint32_t id) const { return lines_[id]; }
  std::uint32_t line_of(VertexId v) const { return line_of_[v]; }
  Bitset line_members(std::uint32_t id) const;

 private:
  LfGraph() = default;

  gf::FieldPtr field_;
  unsigned n_ = 0;
  std::uint32_t side_size_ = 0;
  std::uint32_t line_count_ = 0;
  std::vector<Bitset> adj_;
  std::vector<Line> lines_;
  std::vector<std::uint32_t> line_of_;
};

// Degree every vertex should have: q^(n-1) - 1.
std::uint64_t expected_degree(unsigned q, unsigned n);

bool check_regular(const LfGraph& g);

// Connected components (BFS), each sorted, ordered by smallest member.
std::vector<std::vector<VertexId>> components(const LfGraph& g);

// N(L): union of the members' neighborhoods.
Bitset neighbor_set(const LfGraph& g, const Line& line);

// Union of N(x) over x in the set.
Bitset neighbor_set(const LfGraph& g, const Bitset& set);

// Groups vertices with equal neighbor bitsets. Classes are ordered by their
// smallest member; members sorted.
std::vector<std::vector<VertexId>> twin_classes(const LfGraph& g);

// Whether the subgraph induced on a U b is complete bipartite between a and b
// with no edges inside a or inside b.
bool is_complete_bipartite(const LfGraph& g, const Bitset& a, const Bitset& b);

}  // namespace lfg::graph
