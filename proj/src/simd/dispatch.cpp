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

#include <cstdlib>
#include <string_view>

#include "lfg/simd/bitops.hpp"

namespace lfg::simd {

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::kScalar:
      return "scalar";
    case Isa::kAvx2:
      return "avx2";
  }
  return "unknown";
}

namespace {

const BitKernels& select_kernels() {
  const char* forced = std::getenv("LFG_SIMD");
  if (forced != nullptr && std::string_view(forced) == "scalar") {
    return scalar_kernels();
  }
  if (const BitKernels* wide = avx2_kernels()) return *wide;
  return scalar_kernels();
}

}  // namespace

const BitKernels& active_kernels() {
  static const BitKernels& chosen = select_kernels();
  return chosen;
}

}  // namespace lfg::simd
