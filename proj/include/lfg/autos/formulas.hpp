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

#include "lfg/common/bigcount.hpp"

namespace lfg::autos {

// Closed forms for group orders. All throw std::invalid_argument unless q is
// a prime power and n is in range.

// (q+1)! (2((q-1)!)^2)^(q+1)
BigCount formula_card_n2(unsigned q);
// 2 M! ((q-1)!)^(2M) with M = (q^n-1)/(q-1); n >= 3.
BigCount formula_card_general(unsigned q, unsigned n);
// ((q-1)!)^(2M); n >= 2.
BigCount formula_twin_stabilizer(unsigned q, unsigned n);
// 2((q-1)!)^2
BigCount formula_component_isos(unsigned q);

// (q^n-1)/(q-1) as an exact integer.
BigCount line_count(unsigned q, unsigned n);

}  // namespace lfg::autos
