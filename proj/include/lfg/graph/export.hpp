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
#include <utility>
#include <vector>

#include "lfg/graph/lf_graph.hpp"

namespace lfg::graph {

enum class ExportFormat { kGraph6, kJson };

// Parses "graph6" or "json"; throws std::invalid_argument otherwise.
ExportFormat parse_export_format(const std::string& tag);

// Plain undirected graph used for interchange.
struct SimpleGraph {
  std::uint32_t order = 0;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;  // i < j, sorted

  friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;
};

SimpleGraph to_simple(const LfGraph& g);

// graph6 without header or trailing newline.
std::string encode_graph6(const SimpleGraph& g);
// Throws std::invalid_argument on malformed input.
SimpleGraph decode_graph6(const std::string& text);

// {"q","n","vertices":[{"id","side","coords"}],"edges":[[i,j]]}
std::string encode_edge_list_json(const LfGraph& g);
SimpleGraph decode_edge_list_json(const std::string& text);

std::string export_graph(const LfGraph& g, ExportFormat format);

}  // namespace lfg::graph
