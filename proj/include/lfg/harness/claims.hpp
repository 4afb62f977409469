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

#include <string>
#include <string_view>
#include <vector>

namespace lfg::harness {

struct ClaimInfo {
  std::string_view id;
  std::string_view locus;
};

// Every checkable statement, ordered by id.
const std::vector<ClaimInfo>& claim_registry();

const ClaimInfo* find_claim(std::string_view id);

// Comma-separated ids, case-insensitive; empty selects everything. The
// result follows registry order. Throws std::invalid_argument on an unknown
// id.
std::vector<std::string> parse_claim_list(std::string_view list);

}  // namespace lfg::harness
