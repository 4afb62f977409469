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
#include <span>
#include <vector>

#include "lfg/graph/lf_graph.hpp"

namespace lfg::autos {

using graph::LfGraph;
using graph::VertexId;

// Bijection on vertex ids [0, size).
class Permutation {
 public:
  Permutation() = default;
  // Throws std::invalid_argument unless image is a permutation of [0, size).
  explicit Permutation(std::vector<VertexId> image);

  static Permutation identity(std::uint32_t size);

  std::uint32_t size() const { return static_cast<std::uint32_t>(image_.size()); }
  VertexId operator()(VertexId v) const { return image_[v]; }
  std::span<const VertexId> image() const { return image_; }

  Permutation inverse() const;
  bool is_identity() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<VertexId> image_;
};

// outer o inner: apply inner first.
Permutation compose(const Permutation& outer, const Permutation& inner);

// Right-to-left product of the listed permutations.
Permutation compose_all(std::initializer_list<const Permutation*> factors);

// Image of a vertex set.
Bitset apply(const Permutation& perm, const Bitset& set);

}  // namespace lfg::autos
