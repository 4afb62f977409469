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

#include "lfg/harness/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <stdexcept>

#include "lfg/autos/check.hpp"
#include "lfg/autos/decompose.hpp"
#include "lfg/autos/enumerate.hpp"
#include "lfg/autos/formulas.hpp"
#include "lfg/common/error.hpp"
#include "lfg/graph/domination.hpp"
#include "lfg/harness/claims.hpp"

namespace lfg::harness {

using autos::Permutation;
using graph::DomMode;
using graph::DomTarget;
using graph::LfGraph;
using graph::Side;
using graph::VertexId;

std::string ClaimResult::verdict_string() const {
  switch (verdict) {
    case Verdict::kMatch: return "match";
    case Verdict::kMismatch: return "mismatch";
    case Verdict::kPropertyPass: return "property-pass";
    case Verdict::kPropertyFail: return "property-fail";
    case Verdict::kSkipped: return "skipped(" + skip_reason + ")";
  }
  return "skipped(unknown)";
}

bool Report::ok() const {
  return std::none_of(claims.begin(), claims.end(),
                      [](const ClaimResult& c) { return c.failed(); });
}

const std::vector<std::pair<unsigned, unsigned>>& default_matrix() {
  static const std::vector<std::pair<unsigned, unsigned>> m = {
      {2, 2}, {3, 2}, {4, 2}, {2, 3}, {3, 3}};
  return m;
}

namespace {

struct Context {
  const LfGraph& g;
  const VerifyOptions& opt;
  Deadline& deadline;
  Rng rng;
};

class Skip : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// FNV-1a of the claim id folded into the report seed, so each claim draws
// from its own stream regardless of which other claims run.
std::uint64_t claim_seed(std::uint64_t seed, std::string_view id) {
  std::uint64_t h = 1469598103934665603ULL;
  for (char c : id) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ULL;
  }
  return seed ^ h;
}

Json labels(const LfGraph& g, const std::vector<VertexId>& ids) {
  Json out = Json::array();
  for (VertexId v : ids) out.push_back(g.label(v));
  return out;
}

void compare(ClaimResult& r) {
  r.verdict = *r.formula == *r.oracle ? Verdict::kMatch : Verdict::kMismatch;
}

void property(ClaimResult& r, bool ok) {
  r.verdict = ok ? Verdict::kPropertyPass : Verdict::kPropertyFail;
}

void require_n2(const Context& c) {
  if (c.g.n() != 2) throw Skip("applies to n = 2 only");
}

void require_general(const Context& c) {
  if (c.g.n() < 3) throw Skip("applies to n >= 3 only");
}

// --- graph claims -----------------------------------------------------------

void run_reg(Context& c, ClaimResult& r) {
  const std::uint64_t expected = graph::expected_degree(c.g.q(), c.g.n());
  for (VertexId v = 0; v < c.g.vertex_count(); ++v) {
    if (c.g.degree(v) != expected) {
      r.witness = {{"vertex", c.g.label(v)}, {"degree", c.g.degree(v)},
                   {"expected", expected}};
      property(r, false);
      return;
    }
  }
  r.witness = {{"degree", expected}, {"vertices", c.g.vertex_count()}};
  property(r, graph::check_regular(c.g));
}

void require_domination_size(const Context& c) {
  if (c.g.vertex_count() > graph::kMaxDominationVertices) {
    throw Skip("size guard: exact domination limited to " +
               std::to_string(graph::kMaxDominationVertices) + " vertices");
  }
}

void run_dom_side(Context& c, ClaimResult& r) {
  require_domination_size(c);
  r.formula = BigCount(c.g.q() + 1);
  const auto vec = graph::domination_number(c.g, DomTarget::kVecSide,
                                            DomMode::kStandard, c.deadline);
  const auto fun = graph::domination_number(c.g, DomTarget::kFunSide,
                                            DomMode::kStandard, c.deadline);
  r.oracle = BigCount(vec.size);
  const auto explicit_set = graph::explicit_side_dominator(c.g);
  const bool explicit_ok =
      explicit_set.size() == c.g.q() + 1 &&
      graph::dominates(c.g, DomTarget::kVecSide, DomMode::kStandard, explicit_set);
  r.witness = {{"vec_side", labels(c.g, vec.witness)},
               {"fun_side_size", fun.size},
               {"explicit", labels(c.g, explicit_set)},
               {"explicit_dominates", explicit_ok}};
  compare(r);
  if (fun.size != vec.size || !explicit_ok) r.verdict = Verdict::kMismatch;
}

void run_dom_whole(Context& c, ClaimResult& r, DomMode mode) {
  require_domination_size(c);
  r.formula = BigCount(2 * c.g.q() + 2);
  const auto res = graph::domination_number(c.g, DomTarget::kWhole, mode, c.deadline);
  r.oracle = BigCount(res.size);
  r.witness = {{"set", labels(c.g, res.witness)}};
  bool solvers_agree = true;
  if (c.g.vertex_count() <= graph::kMaxExhaustiveVertices) {
    const auto brute = graph::domination_exhaustive(c.g, DomTarget::kWhole, mode);
    r.witness["exhaustive"] = brute.size;
    solvers_agree = brute.size == res.size;
  }
  compare(r);
  if (!solvers_agree) {
    r.verdict = Verdict::kPropertyFail;
    r.witness["error"] = "branch and bound disagrees with exhaustive search";
  }
}

void run_conn(Context& c, ClaimResult& r) {
  const auto comps = graph::components(c.g);
  r.witness = {{"components", comps.size()}};
  if (c.g.n() >= 3) {
    property(r, comps.size() == 1);
    return;
  }
  bool ok = comps.size() == c.g.q() + 1;
  for (const auto& comp : comps) {
    Bitset a = c.g.empty_set();
    Bitset b = c.g.empty_set();
    for (VertexId v : comp) (c.g.side(v) == Side::kVec ? a : b).set(v);
    if (a.count() != c.g.q() - 1 || b.count() != c.g.q() - 1 ||
        !graph::is_complete_bipartite(c.g, a, b)) {
      ok = false;
      r.witness["bad_component"] = labels(c.g, comp);
      break;
    }
  }
  property(r, ok);
}

void run_sigma_card(Context& c, ClaimResult& r) {
  r.formula = autos::line_count(c.g.q(), c.g.n());
  std::uint64_t vec_classes = 0;
  std::uint64_t fun_classes = 0;
  for (const auto& cls : graph::twin_classes(c.g)) {
    const bool all_vec = std::all_of(cls.begin(), cls.end(), [&](VertexId v) {
      return c.g.side(v) == Side::kVec;
    });
    const bool all_fun = std::all_of(cls.begin(), cls.end(), [&](VertexId v) {
      return c.g.side(v) == Side::kFun;
    });
    vec_classes += all_vec;
    fun_classes += all_fun;
  }
  r.oracle = BigCount(vec_classes);
  r.witness = {{"vec_classes", vec_classes},
               {"fun_classes", fun_classes},
               {"lines_per_side", c.g.line_count_per_side()}};
  compare(r);
  if (fun_classes != vec_classes || BigCount(c.g.line_count_per_side()) != *r.oracle) {
    r.verdict = Verdict::kMismatch;
  }
}

void run_twin(Context& c, ClaimResult& r) {
  const LfGraph& g = c.g;
  auto fail = [&](std::string why, const std::vector<VertexId>& ids) {
    r.witness = {{"reason", std::move(why)}, {"vertices", labels(g, ids)}};
    property(r, false);
  };
  std::vector<std::vector<VertexId>> from_lines;
  for (const auto& line : g.lines()) {
    for (VertexId m : line.members) {
      if (!(linalg::monic_rep(g.coords(m)) == line.rep)) {
        return fail("class member is not a multiple of its representative", {m});
      }
    }
    from_lines.push_back(line.members);
  }
  std::sort(from_lines.begin(), from_lines.end());
  auto twins = graph::twin_classes(g);
  std::sort(twins.begin(), twins.end());
  if (twins != from_lines) {
    return fail("twin classes differ from the scalar-multiple classes", {});
  }
  const std::uint64_t side_degree = graph::expected_degree(g.q(), g.n());
  std::map<std::vector<std::uint64_t>, std::uint32_t> seen;
  for (const auto& line : g.lines()) {
    if (line.members.size() != g.q() - 1) {
      return fail("class has the wrong size", line.members);
    }
    const Bitset nbhd = graph::neighbor_set(g, line);
    if (nbhd.count() != side_degree ||
        !graph::is_complete_bipartite(g, g.line_members(line.id), nbhd)) {
      return fail("class and its neighborhood are not complete bipartite", line.members);
    }
    std::vector<std::uint64_t> key(nbhd.words().begin(), nbhd.words().end());
    if (auto [it, fresh] = seen.emplace(key, line.id); !fresh) {
      return fail("two classes share a neighborhood",
                  {line.members.front(), g.line(it->second).members.front()});
    }
  }
  r.witness = {{"classes", twins.size()}};
  property(r, true);
}

void run_comp_iso(Context& c, ClaimResult& r) {
  require_n2(c);
  if (c.g.q() > 5 && !c.opt.full_oracles) throw Skip("q > 5 needs --full-oracles");
  r.formula = autos::formula_component_isos(c.g.q());
  std::vector<BigCount> counts;
  for (std::uint32_t s = 1; s < c.g.line_count_per_side(); ++s) {
    counts.push_back(autos::count_component_isomorphisms(c.g, 0, s, c.deadline));
  }
  r.oracle = counts.front();
  const bool uniform = std::all_of(counts.begin(), counts.end(),
                                   [&](const BigCount& x) { return x == counts.front(); });
  r.witness = {{"pairs_checked", counts.size()}, {"uniform", uniform}};
  compare(r);
  if (!uniform) r.verdict = Verdict::kMismatch;
}

// --- automorphism claims ----------------------------------------------------

// Calls visit on every automorphism when the graph is small enough for the
// vertex-level enumerator, otherwise on the canonical lifts of quotient
// automorphisms up to kExhaustiveCap. Returns (method, exhaustive).
std::pair<std::string, bool> for_each_checked(
    Context& c, const std::function<bool(const Permutation&)>& visit) {
  if (c.g.vertex_count() <= autos::kMaxDirectVertices) {
    bool stopped = false;
    autos::for_each_automorphism(
        c.g,
        [&](std::span<const std::uint32_t> m) {
          stopped = !visit(Permutation(std::vector<VertexId>(m.begin(), m.end())));
          return !stopped;
        },
        c.deadline);
    return {"vertex", !stopped};
  }
  const auto quotient = autos::twin_quotient(c.g);
  std::uint64_t seen = 0;
  bool capped = false;
  bool stopped = false;
  autos::for_each_quotient_automorphism(
      c.g, quotient,
      [&](std::span<const std::uint32_t> m) {
        if (seen == kExhaustiveCap) {
          capped = true;
          return false;
        }
        ++seen;
        stopped = !visit(autos::lift(c.g, quotient, m));
        return !stopped;
      },
      c.deadline);
  return {"quotient-lift", !capped && !stopped};
}

void run_struct(Context& c, ClaimResult& r, bool n2) {
  n2 ? require_n2(c) : require_general(c);
  std::uint64_t checked = 0;
  std::uint64_t mixed = 0;
  std::uint64_t swapping = 0;
  std::uint64_t via_sigma_fail = 0;
  Json failure;
  const auto [method, exhaustive] = for_each_checked(c, [&](const Permutation& p) {
    const auto v = autos::check_structure(c.g, p);
    ++checked;
    mixed += v.sides == autos::SideBehavior::kMixed;
    swapping += v.sides == autos::SideBehavior::kSwapping;
    if (v.intersection_via_sigma && !*v.intersection_via_sigma) ++via_sigma_fail;
    if (!autos::structure_holds(c.g, v)) {
      failure = {{"check", v.first_failure},
                 {"image", std::vector<VertexId>(p.image().begin(), p.image().end())}};
      return false;
    }
    return true;
  });
  r.witness = {{"method", method},
               {"checked", checked},
               {"exhaustive", exhaustive && failure.is_null()},
               {"side_swapping", swapping},
               {"mixed_sides", mixed}};
  if (!n2) r.witness["swap_intersection_failures"] = via_sigma_fail;
  if (!failure.is_null()) r.witness["failure"] = failure;
  property(r, failure.is_null());
}

void group_order(Context& c, ClaimResult& r) {
  const auto qc = autos::count_automorphisms_quotient(c.g, c.deadline);
  r.oracle = qc.total;
  r.witness = {{"quotient_order", to_decimal(qc.quotient)},
               {"within_classes", to_decimal(qc.within)}};
  bool agree = true;
  if (c.g.vertex_count() <= autos::kMaxDirectVertices) {
    const BigCount direct = autos::count_automorphisms_direct(c.g, c.deadline);
    r.witness["direct"] = to_decimal(direct);
    agree = agree && direct == qc.total;
  }
  const std::uint32_t orbit_limit =
      c.opt.full_oracles ? autos::kMaxStabilizerVertices : kOrbitOracleVertices;
  if (c.g.vertex_count() <= orbit_limit) {
    const auto rows = autos::adjacency_rows(c.g);
    autos::IsoSearch search(rows, rows, c.deadline);
    const BigCount orbit = search.count_group();
    r.witness["vertex_orbit"] = to_decimal(orbit);
    agree = agree && orbit == qc.total;
  }
  compare(r);
  if (!agree) {
    r.verdict = Verdict::kPropertyFail;
    r.witness["error"] = "independent oracles disagree";
  }
}

void run_card_n2(Context& c, ClaimResult& r) {
  require_n2(c);
  r.formula = autos::formula_card_n2(c.g.q());
  group_order(c, r);
}

void run_card_gen(Context& c, ClaimResult& r) {
  require_general(c);
  r.formula = autos::formula_card_general(c.g.q(), c.g.n());
  group_order(c, r);
}

void run_card_stab(Context& c, ClaimResult& r) {
  r.formula = autos::formula_twin_stabilizer(c.g.q(), c.g.n());
  r.oracle = autos::count_twin_stabilizer(c.g, c.deadline);
  r.witness = Json::object();
  bool agree = true;
  if (c.g.vertex_count() <= autos::kMaxDirectVertices) {
    std::uint64_t fixing = 0;
    autos::for_each_automorphism(
        c.g,
        [&](std::span<const std::uint32_t> m) {
          bool all = true;
          for (VertexId v = 0; v < m.size() && all; ++v) {
            all = c.g.line_of(m[v]) == c.g.line_of(v);
          }
          fixing += all;
          return true;
        },
        c.deadline);
    r.witness["enumerated"] = fixing;
    agree = BigCount(fixing) == *r.oracle;
  }
  compare(r);
  if (!agree) {
    r.verdict = Verdict::kPropertyFail;
    r.witness["error"] = "independent oracles disagree";
  }
}

Permutation random_generator_product(Context& c) {
  const LfGraph& g = c.g;
  if (g.n() == 2) return autos::random_n2_automorphism(g, c.rng);
  const Permutation chi =
      autos::chi_p(g, linalg::random_invertible(g.field_ptr(), g.n(), c.rng));
  const Permutation pi =
      autos::pi_extend(g, static_cast<unsigned>(c.rng.below(g.field().k())));
  const Permutation tau = autos::tau_from_table(g, autos::random_tau_table(g, c.rng));
  Permutation rho = autos::compose_all({&chi, &pi, &tau});
  if (c.rng.coin()) rho = autos::compose(autos::sigma_swap(g), rho);
  return rho;
}

void run_decomp(Context& c, ClaimResult& r) {
  std::uint64_t enumerated = 0;
  std::uint64_t random = 0;
  std::uint64_t swaps = 0;
  Json failure;
  auto attempt = [&](const Permutation& p, const char* source) {
    const auto res = autos::decompose(c.g, p);
    if (const auto* f = std::get_if<autos::DecompositionFailure>(&res)) {
      failure = {{"source", source},
                 {"step", f->step},
                 {"message", f->message},
                 {"witness", labels(c.g, f->witness)},
                 {"image", std::vector<VertexId>(p.image().begin(), p.image().end())}};
      return false;
    }
    swaps += std::get<autos::Decomposition>(res).swap;
    return true;
  };
  std::string method = "none";
  bool exhaustive = false;
  if (c.g.vertex_count() <= autos::kMaxDirectVertices) {
    std::tie(method, exhaustive) = for_each_checked(c, [&](const Permutation& p) {
      ++enumerated;
      return attempt(p, "enumerated");
    });
  } else {
    // Canonical lifts of quotient automorphisms, each twisted by a random
    // class-stabilizing map, sampled from the enumeration prefix.
    const auto quotient = autos::twin_quotient(c.g);
    std::vector<std::vector<std::uint32_t>> pool;
    autos::for_each_quotient_automorphism(
        c.g, quotient,
        [&](std::span<const std::uint32_t> m) {
          pool.emplace_back(m.begin(), m.end());
          return pool.size() < kExhaustiveCap;
        },
        c.deadline);
    method = "quotient-lift";
    for (unsigned i = 0; i < c.opt.samples && failure.is_null(); ++i) {
      const auto& pick = pool[c.rng.below(pool.size())];
      const Permutation lifted = autos::lift(c.g, quotient, pick);
      const Permutation tau =
          autos::tau_from_table(c.g, autos::random_tau_table(c.g, c.rng));
      ++enumerated;
      attempt(autos::compose(lifted, tau), "quotient-lift");
    }
  }
  for (unsigned i = 0; i < c.opt.samples && failure.is_null(); ++i) {
    ++random;
    attempt(random_generator_product(c), "generators");
  }
  r.witness = {{"method", method},
               {"exhaustive", exhaustive && failure.is_null()},
               {"automorphisms", enumerated},
               {"generator_products", random},
               {"with_swap", swaps}};
  if (!failure.is_null()) r.witness["failure"] = failure;
  property(r, failure.is_null());
}

using Runner = std::function<void(Context&, ClaimResult&)>;

const std::map<std::string, Runner, std::less<>>& runners() {
  static const std::map<std::string, Runner, std::less<>> table = {
      {"CARD-GEN", run_card_gen},
      {"CARD-N2", run_card_n2},
      {"CARD-STAB", run_card_stab},
      {"COMP-ISO", run_comp_iso},
      {"CONN", run_conn},
      {"DECOMP", run_decomp},
      {"DOM-SIDE", run_dom_side},
      {"DOM-WHOLE-STD", [](Context& c, ClaimResult& r) { run_dom_whole(c, r, DomMode::kStandard); }},
      {"DOM-WHOLE-TOT", [](Context& c, ClaimResult& r) { run_dom_whole(c, r, DomMode::kTotal); }},
      {"REG", run_reg},
      {"SIGMA-CARD", run_sigma_card},
      {"STRUCT-GEN", [](Context& c, ClaimResult& r) { run_struct(c, r, false); }},
      {"STRUCT-N2", [](Context& c, ClaimResult& r) { run_struct(c, r, true); }},
      {"TWIN", run_twin},
  };
  return table;
}

}  // namespace

Report run_verify(unsigned q, unsigned n, const VerifyOptions& options) {
  const auto field = gf::Field::of_order(q);
  const LfGraph g = LfGraph::build(field, n);
  Deadline deadline = options.budget_seconds
                          ? Deadline(std::chrono::duration<double>(*options.budget_seconds))
                          : Deadline();
  const std::vector<std::string> selected =
      options.claims.empty() ? parse_claim_list("") : options.claims;

  Report report;
  report.q = q;
  report.n = n;
  report.seed = options.seed;
  for (const auto& info : claim_registry()) {
    ClaimResult r;
    r.id = std::string(info.id);
    r.locus = std::string(info.locus);
    if (std::find(selected.begin(), selected.end(), r.id) == selected.end()) {
      r.skip_reason = "not selected";
      report.claims.push_back(std::move(r));
      continue;
    }
    Context ctx{g, options, deadline, Rng(claim_seed(options.seed, r.id))};
    const auto start = std::chrono::steady_clock::now();
    try {
      deadline.check();
      runners().find(r.id)->second(ctx, r);
    } catch (const Skip& e) {
      r.verdict = Verdict::kSkipped;
      r.skip_reason = e.what();
    } catch (const TimeoutError&) {
      r.verdict = Verdict::kSkipped;
      r.skip_reason = "timeout";
      r.oracle.reset();
      r.witness = nullptr;
    } catch (const SizeGuardError& e) {
      r.verdict = Verdict::kSkipped;
      r.skip_reason = std::string("size guard: ") + e.what();
      r.oracle.reset();
      r.witness = nullptr;
    }
    if (options.timings) {
      r.ms = std::chrono::duration<double, std::milli>(
                 std::chrono::steady_clock::now() - start)
                 .count();
    }
    report.claims.push_back(std::move(r));
  }
  return report;
}

Json to_json(const Report& report) {
  Json j;
  j["q"] = report.q;
  j["n"] = report.n;
  j["seed"] = report.seed;
  Json claims = Json::array();
  for (const auto& c : report.claims) {
    Json e;
    e["id"] = c.id;
    e["paper_locus"] = c.locus;
    e["formula"] = c.formula ? Json(to_decimal(*c.formula)) : Json(nullptr);
    e["oracle"] = c.oracle ? Json(to_decimal(*c.oracle)) : Json(nullptr);
    e["verdict"] = c.verdict_string();
    e["witness"] = c.witness;
    e["ms"] = c.ms ? Json(*c.ms) : Json(nullptr);
    claims.push_back(std::move(e));
  }
  j["claims"] = std::move(claims);
  return j;
}

}  // namespace lfg::harness
