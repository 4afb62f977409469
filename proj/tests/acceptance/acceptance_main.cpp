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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails or exceeds its time limit.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "lfg/autos/check.hpp"
#include "lfg/autos/decompose.hpp"
#include "lfg/autos/enumerate.hpp"
#include "lfg/autos/formulas.hpp"
#include "lfg/autos/generators.hpp"
#include "lfg/graph/domination.hpp"
#include "lfg/harness/claims.hpp"
#include "lfg/harness/verify.hpp"

namespace {

using namespace lfg;
using autos::Permutation;
using graph::DomMode;
using graph::DomTarget;
using graph::LfGraph;
using graph::Side;
using graph::VertexId;

LfGraph make(unsigned q, unsigned n) { return LfGraph::build(gf::Field::of_order(q), n); }

// A criterion returns true on success and writes a one-line summary.
using Criterion = std::function<bool(std::ostringstream&)>;

std::vector<Permutation> automorphisms(const LfGraph& g) {
  std::vector<Permutation> out;
  Deadline none;
  autos::for_each_automorphism(
      g,
      [&](std::span<const std::uint32_t> m) {
        out.emplace_back(std::vector<VertexId>(m.begin(), m.end()));
        return true;
      },
      none);
  return out;
}

const std::pair<unsigned, unsigned> kSmallMatrix[] = {{2, 2}, {3, 2}, {4, 2}, {5, 2},
                                                      {2, 3}, {3, 3}, {4, 3}, {5, 3}};

bool ac1(std::ostringstream& out) {
  unsigned graphs = 0;
  for (auto [q, n] : kSmallMatrix) {
    const LfGraph g = make(q, n);
    const auto expected = graph::expected_degree(q, n);
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      if (g.degree(v) != expected) {
        out << "degree " << g.degree(v) << " at " << g.label(v) << " for q=" << q << " n=" << n;
        return false;
      }
    }
    ++graphs;
  }
  out << "all degrees equal q^(n-1)-1 on " << graphs << " graphs";
  return true;
}

bool ac2(std::ostringstream& out) {
  for (auto [q, n] : kSmallMatrix) {
    const LfGraph g = make(q, n);
    if (autos::line_count(q, n) != g.line_count_per_side()) {
      out << "line count mismatch at q=" << q << " n=" << n;
      return false;
    }
    std::vector<std::vector<VertexId>> lines;
    for (const auto& l : g.lines()) lines.push_back(l.members);
    std::sort(lines.begin(), lines.end());
    auto twins = graph::twin_classes(g);
    std::sort(twins.begin(), twins.end());
    if (twins != lines) {
      out << "twin classes differ from lines at q=" << q << " n=" << n;
      return false;
    }
  }
  out << "lines per side = (q^n-1)/(q-1) and twin classes = lines";
  return true;
}

bool ac3(std::ostringstream& out) {
  for (auto [q, n] : kSmallMatrix) {
    const LfGraph g = make(q, n);
    const auto comps = graph::components(g);
    if (n == 3) {
      if (comps.size() != 1) {
        out << "q=" << q << " n=3 has " << comps.size() << " components";
        return false;
      }
      continue;
    }
    if (comps.size() != q + 1) {
      out << "q=" << q << " n=2 has " << comps.size() << " components";
      return false;
    }
    for (const auto& c : comps) {
      Bitset a = g.empty_set(), b = g.empty_set();
      for (VertexId v : c) (g.side(v) == Side::kVec ? a : b).set(v);
      if (a.count() != q - 1 || b.count() != q - 1 || !graph::is_complete_bipartite(g, a, b)) {
        out << "component is not K_{q-1,q-1} at q=" << q;
        return false;
      }
    }
  }
  out << "n=2: q+1 components, each K_{q-1,q-1}; n=3: connected";
  return true;
}

bool ac4(std::ostringstream& out) {
  for (auto [q, n] : {std::pair{2u, 2u}, {3u, 2u}, {2u, 3u}, {3u, 3u}}) {
    const LfGraph g = make(q, n);
    const auto r = graph::domination_number(g, DomTarget::kVecSide, DomMode::kStandard);
    const auto expl = graph::explicit_side_dominator(g);
    if (r.size != q + 1 || expl.size() != q + 1 ||
        !graph::dominates(g, DomTarget::kVecSide, DomMode::kStandard, expl)) {
      out << "q=" << q << " n=" << n << " solver=" << r.size;
      return false;
    }
  }
  out << "Vec-side domination number q+1 and explicit witness dominates";
  return true;
}

bool ac5(std::ostringstream& out) {
  bool ok = true;
  for (auto [q, n] : {std::pair{2u, 2u}, {3u, 2u}, {2u, 3u}}) {
    harness::VerifyOptions opt;
    opt.claims = harness::parse_claim_list("DOM-WHOLE-STD,DOM-WHOLE-TOT");
    const auto report = harness::run_verify(q, n, opt);
    out << "(" << q << "," << n << ")";
    for (const auto& c : report.claims) {
      if (c.verdict == harness::Verdict::kSkipped) continue;
      if (!c.oracle || c.verdict == harness::Verdict::kPropertyFail) {
        ok = false;
        continue;
      }
      out << " " << (c.id == "DOM-WHOLE-STD" ? "std=" : "tot=") << *c.oracle;
      if (c.verdict == harness::Verdict::kMismatch) {
        // A mismatch must carry a dominating witness set.
        out << "(mismatch vs " << *c.formula << ")";
        ok = ok && c.witness.contains("set") && !c.witness["set"].empty();
      }
      if (n == 2 && c.id == "DOM-WHOLE-TOT") ok = ok && *c.oracle == 2 * q + 2;
    }
    out << ";";
  }
  return ok;
}

bool ac6(std::ostringstream& out) {
  Deadline none;
  const LfGraph g2 = make(2, 2);
  const LfGraph g3 = make(3, 2);
  const auto q2 = autos::count_automorphisms_quotient(g2, none).total;
  const auto d2 = autos::count_automorphisms_direct(g2, none);
  const auto q3 = autos::count_automorphisms_quotient(g3, none).total;
  out << "(2,2) quotient=" << q2 << " direct=" << d2 << " formula=" << autos::formula_card_n2(2)
      << "; (3,2) quotient=" << q3 << " formula=" << autos::formula_card_n2(3);
  return q2 == 48 && d2 == 48 && q2 == autos::formula_card_n2(2) && q3 == 98304 &&
         q3 == autos::formula_card_n2(3);
}

bool ac7(std::ostringstream& out) {
  Deadline none;
  const LfGraph g = make(2, 3);
  const auto direct = autos::count_automorphisms_direct(g, none);
  const auto quotient = autos::count_automorphisms_quotient(g, none).total;
  harness::VerifyOptions opt;
  opt.claims = harness::parse_claim_list("CARD-GEN");
  const auto report = harness::run_verify(2, 3, opt);
  const harness::ClaimResult* card = nullptr;
  for (const auto& c : report.claims) {
    if (c.id == "CARD-GEN") card = &c;
  }
  const bool verdict_emitted = card && (card->verdict == harness::Verdict::kMatch ||
                                        card->verdict == harness::Verdict::kMismatch);
  out << "direct=" << direct << " quotient=" << quotient << " formula="
      << autos::formula_card_general(2, 3)
      << " verdict=" << (card ? card->verdict_string() : "missing");
  return direct == quotient && verdict_emitted && card->oracle && *card->oracle == direct;
}

bool ac8(std::ostringstream& out) {
  const LfGraph g = make(3, 2);
  std::uint64_t fixing = 0;
  std::uint64_t total = 0;
  for (const auto& p : automorphisms(g)) {
    ++total;
    bool all = true;
    for (VertexId v = 0; v < g.vertex_count() && all; ++v) {
      all = g.line_of(p(v)) == g.line_of(v);
    }
    fixing += all;
  }
  out << fixing << " of " << total << " automorphisms fix every class (formula "
      << autos::formula_twin_stabilizer(3, 2) << ")";
  return fixing == 256 && autos::formula_twin_stabilizer(3, 2) == 256;
}

bool ac9(std::ostringstream& out) {
  Rng rng(909);
  const std::pair<unsigned, unsigned> inst[] = {{2, 2}, {3, 2}, {4, 2}, {2, 3}, {3, 3}, {4, 3}};
  const std::pair<unsigned, unsigned> n2[] = {{2, 2}, {3, 2}, {4, 2}, {5, 2}, {8, 2}, {9, 2}};
  std::vector<LfGraph> graphs, graphs2;
  for (auto [q, n] : inst) graphs.push_back(make(q, n));
  for (auto [q, n] : n2) graphs2.push_back(make(q, n));
  const LfGraph f4 = make(4, 3);
  const LfGraph f8 = make(8, 2);
  unsigned chi = 0, pi = 0, sigma = 0, tau = 0, phi = 0, delta = 0, hom = 0;
  for (int i = 0; i < 100; ++i) {
    const LfGraph& g = graphs[i % graphs.size()];
    const LfGraph& h = graphs2[i % graphs2.size()];
    chi += autos::is_automorphism(
        g, autos::chi_p(g, linalg::random_invertible(g.field_ptr(), g.n(), rng)));
    const LfGraph& gp = i % 2 ? f4 : f8;
    pi += autos::is_automorphism(gp, autos::pi_extend(gp, rng.below(gp.field().k())));
    sigma += autos::is_automorphism(g, autos::sigma_swap(g));
    tau += autos::is_automorphism(g, autos::tau_from_table(g, autos::random_tau_table(g, rng)));
    phi += autos::is_automorphism(h, autos::phi_bar(h, autos::random_phi(h.field(), rng)));
    delta += autos::is_automorphism(h, autos::delta_for(h, autos::random_n2_automorphism(h, rng)));
    const linalg::Matrix a = linalg::random_invertible(g.field_ptr(), g.n(), rng);
    const linalg::Matrix b = linalg::random_invertible(g.field_ptr(), g.n(), rng);
    hom += autos::compose(autos::chi_p(g, a), autos::chi_p(g, b)) ==
           autos::chi_p(g, linalg::mat_mul(a, b));
  }
  out << "chi=" << chi << " pi=" << pi << " sigma=" << sigma << " tau=" << tau
      << " phi=" << phi << " delta=" << delta << " homomorphism=" << hom << " (of 100 each)";
  return chi == 100 && pi == 100 && sigma == 100 && tau == 100 && phi == 100 &&
         delta == 100 && hom == 100;
}

bool ac10(std::ostringstream& out) {
  for (auto [q, n] : {std::pair{2u, 3u}, {3u, 2u}}) {
    const LfGraph g = make(q, n);
    std::uint64_t checked = 0;
    for (const auto& p : automorphisms(g)) {
      const auto action = autos::line_action(g, p);
      if (!action.ok) {
        out << "line action fails at q=" << q << " n=" << n << ": " << action.reason;
        return false;
      }
      if (n == 3) {
        const auto v = autos::check_structure(g, p);
        if (!v.side_pure || !v.n_commutation ||
            (v.sides == autos::SideBehavior::kPreserving && !v.intersection_identity)) {
          out << "structure fails at q=" << q << " n=" << n << ": " << v.first_failure;
          return false;
        }
      }
      ++checked;
    }
    out << "(" << q << "," << n << ") " << checked << " automorphisms; ";
  }
  return true;
}

bool ac11(std::ostringstream& out) {
  auto round_trip = [&](const LfGraph& g, const Permutation& p) {
    const auto r = autos::decompose(g, p);
    if (const auto* f = std::get_if<autos::DecompositionFailure>(&r)) {
      out << "q=" << g.q() << " n=" << g.n() << " step " << f->step << ": " << f->message;
      return false;
    }
    return autos::compose(g, std::get<autos::Decomposition>(r)) == p;
  };
  for (auto [q, n] : {std::pair{2u, 3u}, {3u, 2u}}) {
    const LfGraph g = make(q, n);
    std::uint64_t count = 0;
    for (const auto& p : automorphisms(g)) {
      if (!round_trip(g, p)) return false;
      ++count;
    }
    out << "(" << q << "," << n << ") all " << count << "; ";
  }
  Rng rng(1111);
  for (auto [q, n] : {std::pair{3u, 3u}, {4u, 3u}}) {
    const LfGraph g = make(q, n);
    unsigned swaps = 0;
    for (int i = 0; i < 100; ++i) {
      const Permutation chi = autos::chi_p(g, linalg::random_invertible(g.field_ptr(), n, rng));
      const Permutation pi = autos::pi_extend(g, rng.below(g.field().k()));
      const Permutation tau = autos::tau_from_table(g, autos::random_tau_table(g, rng));
      Permutation rho = autos::compose_all({&chi, &pi, &tau});
      if (i % 2 == 1) {
        rho = autos::compose(autos::sigma_swap(g), rho);
        ++swaps;
      }
      if (!round_trip(g, rho)) return false;
    }
    out << "(" << q << "," << n << ") 100 random incl. " << swaps << " swaps; ";
  }
  return true;
}

bool ac12(std::ostringstream& out) {
  harness::VerifyOptions opt;
  opt.seed = 424242;
  for (auto [q, n] : {std::pair{2u, 3u}, {3u, 3u}}) {
    const std::string a = harness::to_json(harness::run_verify(q, n, opt)).dump(2);
    const std::string b = harness::to_json(harness::run_verify(q, n, opt)).dump(2);
    if (a != b) {
      out << "reports differ at q=" << q << " n=" << n;
      return false;
    }
    out << "(" << q << "," << n << ") " << a.size() << " bytes identical; ";
  }
  return true;
}

struct Entry {
  const char* id;
  const char* title;
  double limit_s;
  bool (*run)(std::ostringstream&);
};

}  // namespace

int main() {
  const Entry entries[] = {
      {"AC1", "regularity", 1, ac1},
      {"AC2", "line count and twin classes", 1, ac2},
      {"AC3", "connectivity", 1, ac3},
      {"AC4", "one-sided domination", 30, ac4},
      {"AC5", "whole-graph domination", 60, ac5},
      {"AC6", "automorphism count n=2", 60, ac6},
      {"AC7", "automorphism count n=3", 120, ac7},
      {"AC8", "twin stabilizer", 60, ac8},
      {"AC9", "generator soundness", 30, ac9},
      {"AC10", "structural properties", 120, ac10},
      {"AC11", "decomposition round trip", 120, ac11},
      {"AC12", "report determinism", 5, ac12},
  };
  int failures = 0;
  for (const auto& e : entries) {
    std::ostringstream detail;
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = e.run(detail);
    } catch (const std::exception& ex) {
      detail << "exception: " << ex.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > e.limit_s) {
      ok = false;
      detail << " [over time limit " << e.limit_s << " s]";
    }
    failures += !ok;
    std::printf("%-4s %s  %s: %s (%.2f s)\n", e.id, ok ? "PASS" : "FAIL", e.title,
                detail.str().c_str(), secs);
  }
  return failures == 0 ? 0 : 1;
}
