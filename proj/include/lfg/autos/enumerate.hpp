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
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "lfg/autos/permutation.hpp"
#include "lfg/common/bigcount.hpp"
#include "lfg/common/deadline.hpp"

namespace lfg::autos {

// Adjacency rows of a simple graph on [0, rows.size()).
using AdjacencyRows = std::vector<Bitset>;

inline constexpr std::uint32_t kMaxDirectVertices = 20;
inline constexpr std::uint32_t kMaxQuotientClassesPerSide = 40;
inline constexpr std::uint32_t kMaxStabilizerVertices = 256;

// Receives the image array of each map found; return false to stop.
using MapVisitor = std::function<bool(std::span<const std::uint32_t>)>;

// Backtracking search for adjacency-preserving bijections source -> target,
// optionally restricted to per-vertex candidate sets. Candidates are
// propagated after every assignment and the most constrained vertex is
// branched on first.
class IsoSearch {
 public:
  IsoSearch(const AdjacencyRows& source, const AdjacencyRows& target,
            Deadline& deadline, const std::vector<Bitset>* domains = nullptr);
  ~IsoSearch();
  IsoSearch(const IsoSearch&) = delete;
  IsoSearch& operator=(const IsoSearch&) = delete;

  // Visits every map in a fixed order; returns the number visited.
  std::uint64_t enumerate(const MapVisitor& visit);
  std::optional<std::vector<std::uint32_t>> first();
  // Group order by orbit-stabilizer products along a base. Requires
  // source == target and every vertex in its own domain.
  BigCount count_group();

 private:
  struct State;
  std::unique_ptr<State> s_;
};

AdjacencyRows adjacency_rows(const LfGraph& g);

// Vertex-level enumeration of Aut(g). SizeGuardError above
// kMaxDirectVertices unless the caller raises the limit.
std::uint64_t for_each_automorphism(const LfGraph& g, const MapVisitor& visit,
                                    Deadline& deadline,
                                    std::uint32_t max_vertices = kMaxDirectVertices);
BigCount count_automorphisms_direct(const LfGraph& g, Deadline& deadline);

// Twin classes collapsed to single nodes.
struct TwinQuotient {
  AdjacencyRows adj;
  std::vector<std::vector<VertexId>> classes;
  std::vector<std::uint32_t> class_of;
};
TwinQuotient twin_quotient(const LfGraph& g);

struct QuotientCount {
  BigCount quotient;  // automorphisms of the quotient respecting class sizes
  BigCount within;    // product of |C|! over classes
  BigCount total;
};
QuotientCount count_automorphisms_quotient(const LfGraph& g, Deadline& deadline);
std::uint64_t for_each_quotient_automorphism(const LfGraph& g,
                                             const TwinQuotient& quotient,
                                             const MapVisitor& visit,
                                             Deadline& deadline);

// Vertex permutation sending the i-th member of each class to the i-th
// member of its image class.
Permutation lift(const LfGraph& g, const TwinQuotient& quotient,
                 std::span<const std::uint32_t> class_image);

// Number of automorphisms mapping every twin class onto itself, counted at
// the vertex level.
BigCount count_twin_stabilizer(const LfGraph& g, Deadline& deadline);

// n = 2: adjacency-preserving bijections between the components of two Vec
// lines, counted exhaustively.
BigCount count_component_isomorphisms(const LfGraph& g, std::uint32_t vec_line_a,
                                      std::uint32_t vec_line_b, Deadline& deadline);

}  // namespace lfg::autos
