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

#include "lfg/autos/permutation.hpp"

#include <stdexcept>

namespace lfg::autos {

Permutation::Permutation(std::vector<VertexId> image) : image_(std::move(image)) {
  std::vector<bool> seen(image_.size(), false);
  for (VertexId v : image_) {
    if (v >= image_.size() || seen[v]) {
      throw std::invalid_argument("image is not a permutation");
    }
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::uint32_t size) {
  std::vector<VertexId> image(size);
  for (std::uint32_t i = 0; i < size; ++i) image[i] = i;
  Permutation p;
  p.image_ = std::move(image);
  return p;
}

Permutation Permutation::inverse() const {
  std::vector<VertexId> inv(image_.size());
  for (std::uint32_t i = 0; i < image_.size(); ++i) inv[image_[i]] = i;
  Permutation p;
  p.image_ = std::move(inv);
  return p;
}

bool Permutation::is_identity() const {
  for (std::uint32_t i = 0; i < image_.size(); ++i) {
    if (image_[i] != i) return false;
  }
  return true;
}

Permutation compose(const Permutation& outer, const Permutation& inner) {
  if (outer.size() != inner.size()) {
    throw std::invalid_argument("composing permutations of different sizes");
  }
  std::vector<VertexId> image(inner.size());
  for (std::uint32_t i = 0; i < inner.size(); ++i) image[i] = outer(inner(i));
  return Permutation(std::move(image));
}

Permutation compose_all(std::initializer_list<const Permutation*> factors) {
  if (factors.size() == 0) throw std::invalid_argument("empty product");
  auto it = factors.end();
  --it;
  Permutation acc = **it;
  while (it != factors.begin()) {
    --it;
    acc = compose(**it, acc);
  }
  return acc;
}

Bitset apply(const Permutation& perm, const Bitset& set) {
  Bitset out(set.size());
  set.for_each([&](std::size_t v) { out.set(perm(static_cast<VertexId>(v))); });
  return out;
}

}  // namespace lfg::autos
