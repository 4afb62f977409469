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

#include "lfg/autos/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <stdexcept>
#include <string>

namespace lfg::autos {

using Word = Bitset::Word;

namespace {

constexpr std::uint32_t kUnset = std::numeric_limits<std::uint32_t>::max();

}  // namespace

// Candidate sets live in one flat word array per search depth so that
// backtracking is a pointer move rather than a restore.
struct IsoSearch::State {
  std::uint32_t n = 0;
  std::uint32_t w = 0;
  bool same_graph = false;
  std::vector<Word> src;
  std::vector<Word> tgt;
  std::vector<Word> tgt_not;
  std::vector<Word> levels;
  std::vector<std::uint32_t> img;
  std::vector<std::uint32_t> order;  // vertex assigned at each depth
  bool feasible = true;
  Deadline* deadline = nullptr;

  Word* level(std::uint32_t d) { return levels.data() + std::size_t{d} * n * w; }
  Word* row(std::uint32_t d, std::uint32_t x) { return level(d) + std::size_t{x} * w; }
  bool src_adj(std::uint32_t a, std::uint32_t b) const {
    return (src[std::size_t{a} * w + (b >> 6)] >> (b & 63)) & 1U;
  }

  std::uint32_t row_count(const Word* r) const {
    std::uint32_t c = 0;
    for (std::uint32_t i = 0; i < w; ++i) c += static_cast<std::uint32_t>(std::popcount(r[i]));
    return c;
  }

  // Unassigned vertex with the fewest candidates at depth d.
  std::uint32_t pick(std::uint32_t d) {
    std::uint32_t best = kUnset;
    std::uint32_t best_count = kUnset;
    for (std::uint32_t x = 0; x < n; ++x) {
      if (img[x] != kUnset) continue;
      const std::uint32_t c = row_count(row(d, x));
      if (c < best_count) {
        best = x;
        best_count = c;
      }
    }
    return best;
  }

  // Writes depth d+1 from depth d with x -> y applied. False on a wipeout.
  bool assign(std::uint32_t d, std::uint32_t x, std::uint32_t y) {
    deadline->poll();
    std::copy(level(d), level(d) + std::size_t{n} * w, level(d + 1));
    img[x] = y;
    order[d] = x;
    const Word* yes = tgt.data() + std::size_t{y} * w;
    const Word* no = tgt_not.data() + std::size_t{y} * w;
    const Word ybit = Word{1} << (y & 63);
    for (std::uint32_t z = 0; z < n; ++z) {
      if (img[z] != kUnset) continue;
      Word* r = row(d + 1, z);
      const Word* mask = src_adj(z, x) ? yes : no;
      Word any = 0;
      r[y >> 6] &= ~ybit;
      for (std::uint32_t i = 0; i < w; ++i) {
        r[i] &= mask[i];
        any |= r[i];
      }
      if (any == 0) return false;
    }
    return true;
  }

  void unassign(std::uint32_t x) { img[x] = kUnset; }

  template <typename F>
  void for_each_candidate(std::uint32_t d, std::uint32_t x, F&& f) {
    // Copy: the row may be rewritten when deeper levels reuse the buffer.
    std::vector<Word> r(row(d, x), row(d, x) + w);
    for (std::uint32_t i = 0; i < w; ++i) {
      Word bits = r[i];
      while (bits != 0) {
        const std::uint32_t y = i * 64 + static_cast<std::uint32_t>(std::countr_zero(bits));
        bits &= bits - 1;
        if (!f(y)) return;
      }
    }
  }

  // Returns false when the visitor asked to stop.
  bool enumerate(std::uint32_t d, const MapVisitor& visit, std::uint64_t& found) {
    if (d == n) {
      ++found;
      return visit(img);
    }
    const std::uint32_t x = pick(d);
    bool keep_going = true;
    for_each_candidate(d, x, [&](std::uint32_t y) {
      if (assign(d, x, y)) keep_going = enumerate(d + 1, visit, found);
      unassign(x);
      return keep_going;
    });
    return keep_going;
  }

  bool exists(std::uint32_t d) {
    if (d == n) return true;
    const std::uint32_t x = pick(d);
    bool ok = false;
    for_each_candidate(d, x, [&](std::uint32_t y) {
      if (assign(d, x, y) && exists(d + 1)) ok = true;
      if (!ok) unassign(x);
      return !ok;
    });
    return ok;
  }

  void reset_from(std::uint32_t d) {
    for (std::uint32_t i = d; i < n; ++i) {
      if (order[i] != kUnset) img[order[i]] = kUnset;
      order[i] = kUnset;
    }
  }
};

IsoSearch::IsoSearch(const AdjacencyRows& source, const AdjacencyRows& target,
                     Deadline& deadline, const std::vector<Bitset>* domains)
    : s_(std::make_unique<State>()) {
  if (source.size() != target.size()) {
    s_->feasible = false;
    return;
  }
  State& s = *s_;
  s.n = static_cast<std::uint32_t>(source.size());
  s.w = (s.n + 63) / 64;
  s.deadline = &deadline;
  s.same_graph = source == target;
  s.src.assign(std::size_t{s.n} * s.w, 0);
  s.tgt.assign(std::size_t{s.n} * s.w, 0);
  s.tgt_not.assign(std::size_t{s.n} * s.w, 0);
  s.levels.assign(std::size_t{s.n + 1} * s.n * s.w, 0);
  s.img.assign(s.n, kUnset);
  s.order.assign(s.n, kUnset);
  if (domains && domains->size() != s.n) {
    throw std::invalid_argument("domain count does not match the graph");
  }
  std::vector<std::size_t> src_deg(s.n);
  std::vector<std::size_t> tgt_deg(s.n);
  for (std::uint32_t x = 0; x < s.n; ++x) {
    if (source[x].size() != s.n || target[x].size() != s.n) {
      throw std::invalid_argument("adjacency rows have the wrong width");
    }
    std::copy(source[x].words().begin(), source[x].words().end(),
              s.src.begin() + std::size_t{x} * s.w);
    Bitset complement = target[x];
    Bitset all(s.n);
    all.set_all();
    all.subtract(complement);
    std::copy(target[x].words().begin(), target[x].words().end(),
              s.tgt.begin() + std::size_t{x} * s.w);
    std::copy(all.words().begin(), all.words().end(),
              s.tgt_not.begin() + std::size_t{x} * s.w);
    src_deg[x] = source[x].count();
    tgt_deg[x] = target[x].count();
  }
  for (std::uint32_t x = 0; x < s.n; ++x) {
    Word* r = s.row(0, x);
    for (std::uint32_t y = 0; y < s.n; ++y) {
      if (src_deg[x] != tgt_deg[y]) continue;
      if (domains && !(*domains)[x].test(y)) continue;
      r[y >> 6] |= Word{1} << (y & 63);
    }
    if (s.row_count(r) == 0) s.feasible = false;
  }
}

IsoSearch::~IsoSearch() = default;

std::uint64_t IsoSearch::enumerate(const MapVisitor& visit) {
  std::uint64_t found = 0;
  if (!s_->feasible) return 0;
  s_->enumerate(0, visit, found);
  s_->reset_from(0);
  return found;
}

std::optional<std::vector<std::uint32_t>> IsoSearch::first() {
  std::optional<std::vector<std::uint32_t>> out;
  enumerate([&](std::span<const std::uint32_t> m) {
    out.emplace(m.begin(), m.end());
    return false;
  });
  return out;
}

BigCount IsoSearch::count_group() {
  State& s = *s_;
  if (!s.same_graph) throw std::invalid_argument("count_group needs source == target");
  if (!s.feasible) throw std::invalid_argument("identity is not an admissible map");
  BigCount order = 1;
  for (std::uint32_t d = 0; d < s.n; ++d) {
    const std::uint32_t x = s.pick(d);
    if (!((s.row(d, x)[x >> 6] >> (x & 63)) & 1U)) {
      throw std::invalid_argument("identity is not an admissible map");
    }
    std::uint64_t orbit = 0;
    s.for_each_candidate(d, x, [&](std::uint32_t y) {
      if (y == x) {
        ++orbit;
      } else {
        if (s.assign(d, x, y) && s.exists(d + 1)) ++orbit;
        s.reset_from(d + 1);
        s.unassign(x);
      }
      return true;
    });
    order *= orbit;
    if (!s.assign(d, x, x)) throw std::logic_error("identity extension failed");
  }
  s.reset_from(0);
  return order;
}

AdjacencyRows adjacency_rows(const LfGraph& g) {
  AdjacencyRows rows;
  rows.reserve(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) rows.push_back(g.neighbors(v));
  return rows;
}

std::uint64_t for_each_automorphism(const LfGraph& g, const MapVisitor& visit,
                                    Deadline& deadline, std::uint32_t max_vertices) {
  if (g.vertex_count() > max_vertices) {
    throw SizeGuardError("vertex-level enumeration limited to " +
                         std::to_string(max_vertices) + " vertices, graph has " +
                         std::to_string(g.vertex_count()));
  }
  const AdjacencyRows rows = adjacency_rows(g);
  IsoSearch search(rows, rows, deadline);
  return search.enumerate(visit);
}

BigCount count_automorphisms_direct(const LfGraph& g, Deadline& deadline) {
  return for_each_automorphism(
      g, [](std::span<const std::uint32_t>) { return true; }, deadline);
}

TwinQuotient twin_quotient(const LfGraph& g) {
  TwinQuotient out;
  out.classes = graph::twin_classes(g);
  const auto m = static_cast<std::uint32_t>(out.classes.size());
  out.class_of.assign(g.vertex_count(), 0);
  for (std::uint32_t c = 0; c < m; ++c) {
    for (VertexId v : out.classes[c]) out.class_of[v] = c;
  }
  out.adj.assign(m, Bitset(m));
  for (std::uint32_t c = 0; c < m; ++c) {
    g.neighbors(out.classes[c].front()).for_each([&](std::size_t v) {
      out.adj[c].set(out.class_of[v]);
    });
  }
  return out;
}

namespace {

std::vector<Bitset> size_domains(const TwinQuotient& quotient) {
  const auto m = quotient.classes.size();
  std::vector<Bitset> domains(m, Bitset(m));
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      if (quotient.classes[a].size() == quotient.classes[b].size()) domains[a].set(b);
    }
  }
  return domains;
}

void guard_quotient(const TwinQuotient& quotient) {
  if (quotient.classes.size() > 2 * kMaxQuotientClassesPerSide) {
    throw SizeGuardError("quotient enumeration limited to " +
                         std::to_string(kMaxQuotientClassesPerSide) +
                         " classes per side");
  }
}

}  // namespace

QuotientCount count_automorphisms_quotient(const LfGraph& g, Deadline& deadline) {
  const TwinQuotient quotient = twin_quotient(g);
  guard_quotient(quotient);
  const auto domains = size_domains(quotient);
  IsoSearch search(quotient.adj, quotient.adj, deadline, &domains);
  QuotientCount out;
  out.quotient = search.count_group();
  out.within = 1;
  for (const auto& c : quotient.classes) out.within *= factorial(static_cast<unsigned>(c.size()));
  out.total = out.quotient * out.within;
  return out;
}

std::uint64_t for_each_quotient_automorphism(const LfGraph& g,
                                             const TwinQuotient& quotient,
                                             const MapVisitor& visit,
                                             Deadline& deadline) {
  (void)g;
  guard_quotient(quotient);
  const auto domains = size_domains(quotient);
  IsoSearch search(quotient.adj, quotient.adj, deadline, &domains);
  return search.enumerate(visit);
}

Permutation lift(const LfGraph& g, const TwinQuotient& quotient,
                 std::span<const std::uint32_t> class_image) {
  if (class_image.size() != quotient.classes.size()) {
    throw std::invalid_argument("class image has the wrong length");
  }
  std::vector<VertexId> image(g.vertex_count());
  for (std::size_t c = 0; c < quotient.classes.size(); ++c) {
    const auto& from = quotient.classes[c];
    const auto& to = quotient.classes[class_image[c]];
    if (from.size() != to.size()) throw std::invalid_argument("class sizes differ");
    for (std::size_t i = 0; i < from.size(); ++i) image[from[i]] = to[i];
  }
  return Permutation(std::move(image));
}

BigCount count_twin_stabilizer(const LfGraph& g, Deadline& deadline) {
  if (g.vertex_count() > kMaxStabilizerVertices) {
    throw SizeGuardError("twin-stabilizer count limited to " +
                         std::to_string(kMaxStabilizerVertices) + " vertices");
  }
  const TwinQuotient quotient = twin_quotient(g);
  std::vector<Bitset> domains(g.vertex_count(), g.empty_set());
  for (const auto& c : quotient.classes) {
    for (VertexId a : c) {
      for (VertexId b : c) domains[a].set(b);
    }
  }
  const AdjacencyRows rows = adjacency_rows(g);
  IsoSearch search(rows, rows, deadline, &domains);
  return search.count_group();
}

BigCount count_component_isomorphisms(const LfGraph& g, std::uint32_t vec_line_a,
                                      std::uint32_t vec_line_b, Deadline& deadline) {
  if (g.n() != 2) throw std::invalid_argument("component isomorphisms need n = 2");
  if (vec_line_a >= g.line_count_per_side() || vec_line_b >= g.line_count_per_side()) {
    throw std::invalid_argument("not a Vec line id");
  }
  auto induced = [&](std::uint32_t line_id) {
    const auto& line = g.line(line_id);
    Bitset part = g.line_members(line_id) | graph::neighbor_set(g, line);
    const auto verts = part.to_vector();
    AdjacencyRows rows(verts.size(), Bitset(verts.size()));
    for (std::size_t i = 0; i < verts.size(); ++i) {
      for (std::size_t j = 0; j < verts.size(); ++j) {
        if (g.adjacent(static_cast<VertexId>(verts[i]), static_cast<VertexId>(verts[j]))) {
          rows[i].set(j);
        }
      }
    }
    return rows;
  };
  const AdjacencyRows a = induced(vec_line_a);
  const AdjacencyRows b = induced(vec_line_b);
  IsoSearch search(a, b, deadline);
  return search.enumerate([](std::span<const std::uint32_t>) { return true; });
}

}  // namespace lfg::autos
