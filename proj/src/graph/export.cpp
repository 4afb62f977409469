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

#include "lfg/graph/export.hpp"

#include <algorithm>
#include <stdexcept>

#include <json.hpp>

namespace lfg::graph {

ExportFormat parse_export_format(const std::string& tag) {
  if (tag == "graph6") return ExportFormat::kGraph6;
  if (tag == "json") return ExportFormat::kJson;
  throw std::invalid_argument("unsupported export format '" + tag + "'");
}

SimpleGraph to_simple(const LfGraph& g) {
  SimpleGraph s;
  s.order = g.vertex_count();
  for (VertexId j = 0; j < g.vertex_count(); ++j) {
    g.neighbors(j).for_each([&](std::size_t i) {
      if (i < j) s.edges.emplace_back(static_cast<std::uint32_t>(i), j);
    });
  }
  std::sort(s.edges.begin(), s.edges.end());
  return s;
}

namespace {

void append_order(std::string& out, std::uint64_t n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
    }
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
    }
  }
}

}  // namespace

std::string encode_graph6(const SimpleGraph& g) {
  std::string out;
  append_order(out, g.order);
  const std::uint64_t n = g.order;
  const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  std::vector<std::uint8_t> bitvec(bits, 0);
  // Upper triangle, column by column: (0,1),(0,2),(1,2),(0,3),...
  for (const auto& [i, j] : g.edges) {
    const std::uint64_t lo = std::min(i, j);
    const std::uint64_t hi = std::max(i, j);
    bitvec[hi * (hi - 1) / 2 + lo] = 1;
  }
  for (std::uint64_t k = 0; k < bits; k += 6) {
    unsigned group = 0;
    for (std::uint64_t b = 0; b < 6; ++b) {
      group <<= 1U;
      if (k + b < bits) group |= bitvec[k + b];
    }
    out.push_back(static_cast<char>(63 + group));
  }
  return out;
}

SimpleGraph decode_graph6(const std::string& text) {
  std::string s = text;
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
  if (s.rfind(">>graph6<<", 0) == 0) s.erase(0, 10);
  for (char c : s) {
    if (c < 63 || c > 126) throw std::invalid_argument("bad graph6 byte");
  }
  if (s.empty()) throw std::invalid_argument("empty graph6 string");
  std::size_t pos = 0;
  std::uint64_t n = 0;
  auto take = [&](int count) {
    std::uint64_t v = 0;
    for (int i = 0; i < count; ++i) {
      if (pos >= s.size()) throw std::invalid_argument("truncated graph6 header");
      v = (v << 6U) | static_cast<std::uint64_t>(s[pos++] - 63);
    }
    return v;
  };
  if (s[0] != 126) {
    n = take(1);
  } else if (s.size() > 1 && s[1] != 126) {
    pos = 1;
    n = take(3);
  } else {
    pos = 2;
    n = take(6);
  }
  const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  if (s.size() - pos != (bits + 5) / 6) {
    throw std::invalid_argument("graph6 length does not match order");
  }
  SimpleGraph g;
  g.order = static_cast<std::uint32_t>(n);
  std::uint64_t k = 0;
  for (std::uint32_t j = 1; j < n; ++j) {
    for (std::uint32_t i = 0; i < j; ++i, ++k) {
      const unsigned group = static_cast<unsigned>(s[pos + k / 6] - 63);
      if ((group >> (5 - k % 6)) & 1U) g.edges.emplace_back(i, j);
    }
  }
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

std::string encode_edge_list_json(const LfGraph& g) {
  nlohmann::ordered_json doc;
  doc["q"] = g.q();
  doc["n"] = g.n();
  auto vertices = nlohmann::ordered_json::array();
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    nlohmann::ordered_json item;
    item["id"] = v;
    item["side"] = to_string(g.side(v));
    auto coords = nlohmann::ordered_json::array();
    const Vector c = g.coords(v);
    for (unsigned i = 0; i < c.size(); ++i) coords.push_back(c[i].value);
    item["coords"] = std::move(coords);
    vertices.push_back(std::move(item));
  }
  doc["vertices"] = std::move(vertices);
  auto edges = nlohmann::ordered_json::array();
  for (const auto& [i, j] : to_simple(g).edges) edges.push_back({i, j});
  doc["edges"] = std::move(edges);
  return doc.dump();
}

SimpleGraph decode_edge_list_json(const std::string& text) {
  const auto doc = nlohmann::json::parse(text);
  SimpleGraph g;
  g.order = static_cast<std::uint32_t>(doc.at("vertices").size());
  for (const auto& e : doc.at("edges")) {
    auto i = e.at(0).get<std::uint32_t>();
    auto j = e.at(1).get<std::uint32_t>();
    if (i >= g.order || j >= g.order || i == j) {
      throw std::invalid_argument("edge endpoint out of range");
    }
    g.edges.emplace_back(std::min(i, j), std::max(i, j));
  }
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

std::string export_graph(const LfGraph& g, ExportFormat format) {
  return format == ExportFormat::kGraph6 ? encode_graph6(to_simple(g))
                                         : encode_edge_list_json(g);
}

}  // namespace lfg::graph
