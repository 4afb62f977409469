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

#include "lfg/harness/claims.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace lfg::harness {

const std::vector<ClaimInfo>& claim_registry() {
  static const std::vector<ClaimInfo> registry = [] {
    std::vector<ClaimInfo> r = {
        {"REG", "regularity lemma: every degree is q^(n-1)-1"},
        {"DOM-SIDE", "one-sided domination lemma: each side needs q+1"},
        {"DOM-WHOLE-STD", "whole-graph domination theorem, standard reading: 2q+2"},
        {"DOM-WHOLE-TOT", "whole-graph domination theorem, total reading: 2q+2"},
        {"CONN", "connectivity remarks: connected for n>=3, q+1 components for n=2"},
        {"SIGMA-CARD", "line count remark: (q^n-1)/(q-1) lines per side"},
        {"TWIN", "twin lemmas: twins are exactly scalar multiples"},
        {"COMP-ISO", "n=2 component lemma: 2((q-1)!)^2 isomorphisms"},
        {"STRUCT-N2", "n=2 structure theorem: components are permuted"},
        {"STRUCT-GEN", "structure theorems: line action, N-commutation, "
                       "intersection identity, side purity"},
        {"CARD-N2", "n=2 order theorem: (q+1)!(2((q-1)!)^2)^(q+1)"},
        {"CARD-GEN", "n>=3 order theorem: 2M!((q-1)!)^(2M)"},
        {"CARD-STAB", "twin-stabilizer theorem: ((q-1)!)^(2M)"},
        {"DECOMP", "decomposition theorems: rho = (sigma|delta) chi_P (pi|phi) tau"},
    };
    std::sort(r.begin(), r.end(),
              [](const ClaimInfo& a, const ClaimInfo& b) { return a.id < b.id; });
    return r;
  }();
  return registry;
}

const ClaimInfo* find_claim(std::string_view id) {
  for (const auto& c : claim_registry()) {
    if (c.id == id) return &c;
  }
  return nullptr;
}

std::vector<std::string> parse_claim_list(std::string_view list) {
  std::vector<bool> chosen(claim_registry().size(), list.empty());
  std::size_t start = 0;
  while (start <= list.size() && !list.empty()) {
    const std::size_t comma = std::min(list.find(',', start), list.size());
    std::string token(list.substr(start, comma - start));
    token.erase(std::remove_if(token.begin(), token.end(),
                               [](unsigned char c) { return std::isspace(c); }),
                token.end());
    std::transform(token.begin(), token.end(), token.begin(),
                   [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
    if (!token.empty()) {
      const ClaimInfo* info = find_claim(token);
      if (!info) throw std::invalid_argument("unknown claim id: " + token);
      chosen[static_cast<std::size_t>(info - claim_registry().data())] = true;
    }
    start = comma + 1;
  }
  std::vector<std::string> out;
  for (std::size_t i = 0; i < chosen.size(); ++i) {
    if (chosen[i]) out.emplace_back(claim_registry()[i].id);
  }
  if (out.empty()) throw std::invalid_argument("no claims selected");
  return out;
}

}  // namespace lfg::harness
