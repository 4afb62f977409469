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

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

// Word-parallel bitset kernels. Every kernel has a scalar reference
// implementation; wider variants are selected once at startup based on the
// running CPU and must agree with the reference bit for bit.

namespace lfg::simd {

using Word = std::uint64_t;

enum class Isa { kScalar, kAvx2 };

std::string_view isa_name(Isa isa);

struct BitKernels {
  Isa isa;
  std::size_t (*popcount)(const Word* a, std::size_t n);
  std::size_t (*and_popcount)(const Word* a, const Word* b, std::size_t n);
  bool (*equal)(const Word* a, const Word* b, std::size_t n);
  // a is a subset of b.
  bool (*is_subset)(const Word* a, const Word* b, std::size_t n);
  bool (*intersects)(const Word* a, const Word* b, std::size_t n);
  void (*and_into)(Word* dst, const Word* a, const Word* b, std::size_t n);
  void (*or_into)(Word* dst, const Word* a, const Word* b, std::size_t n);
  // dst = a & ~b
  void (*andnot_into)(Word* dst, const Word* a, const Word* b, std::size_t n);
};

const BitKernels& scalar_kernels();

// nullptr when the variant was not compiled in or the CPU lacks support.
const BitKernels* avx2_kernels();

// Kernels used by the library. Chosen on first use: the widest supported
// variant, unless the environment variable LFG_SIMD=scalar forces the
// reference path.
const BitKernels& active_kernels();

inline std::size_t popcount(std::span<const Word> a) {
  return active_kernels().popcount(a.data(), a.size());
}

}  // namespace lfg::simd
