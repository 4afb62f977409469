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

// lfg: command-line front end for building linear functional graphs,
// counting and decomposing their automorphisms, and running the verification
// harness.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "lfg/autos/check.hpp"
#include "lfg/autos/decompose.hpp"
#include "lfg/autos/enumerate.hpp"
#include "lfg/autos/formulas.hpp"
#include "lfg/autos/serialize.hpp"
#include "lfg/graph/export.hpp"
#include "lfg/harness/claims.hpp"
#include "lfg/harness/verify.hpp"

namespace {

using lfg::autos::Json;
using lfg::graph::LfGraph;

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

// Usage and environment problems detected after parsing.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Instance {
  unsigned q = 0;
  unsigned n = 0;
  bool force = false;
};

LfGraph build_graph(unsigned q, unsigned n, bool force) {
  lfg::graph::BuildOptions opts;
  opts.force = force;
  return LfGraph::build(lfg::gf::Field::of_order(q), n, opts);
}

void write_output(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw UsageError(path + ": " + e.what());
  }
}

struct LoadedPerm {
  LfGraph graph;
  lfg::autos::Permutation perm;
};

LoadedPerm load_permutation(const std::string& path, bool force) {
  const auto file = lfg::autos::permutation_from_json(read_json_file(path));
  LfGraph g = build_graph(file.q, file.n, force);
  if (file.image.size() != g.vertex_count()) {
    throw std::invalid_argument("image has " + std::to_string(file.image.size()) +
                                " entries, graph has " +
                                std::to_string(g.vertex_count()) + " vertices");
  }
  return {std::move(g), lfg::autos::Permutation(file.image)};
}

std::string side_behavior_name(lfg::autos::SideBehavior s) {
  switch (s) {
    case lfg::autos::SideBehavior::kPreserving: return "preserving";
    case lfg::autos::SideBehavior::kSwapping: return "swapping";
    case lfg::autos::SideBehavior::kMixed: return "mixed";
  }
  return "mixed";
}

int cmd_build(const Instance& inst, const std::string& format, const std::string& out) {
  const LfGraph g = build_graph(inst.q, inst.n, inst.force);
  if (format.empty()) {
    std::ostringstream s;
    s << "q=" << g.q() << " n=" << g.n() << " vertices=" << g.vertex_count()
      << " edges=" << g.edge_count() << "\n";
    write_output(s.str(), out);
    return kExitOk;
  }
  std::string bytes = lfg::graph::export_graph(g, lfg::graph::parse_export_format(format));
  if (bytes.empty() || bytes.back() != '\n') bytes += '\n';
  write_output(bytes, out);
  return kExitOk;
}

int cmd_invariants(const Instance& inst) {
  const LfGraph g = build_graph(inst.q, inst.n, inst.force);
  const auto comps = lfg::graph::components(g);
  Json j;
  j["q"] = g.q();
  j["n"] = g.n();
  j["vertices"] = g.vertex_count();
  j["edges"] = g.edge_count();
  j["expected_degree"] = lfg::graph::expected_degree(g.q(), g.n());
  j["regular"] = lfg::graph::check_regular(g);
  j["components"] = comps.size();
  j["lines_per_side"] = g.line_count_per_side();
  j["twin_classes"] = lfg::graph::twin_classes(g).size();
  std::cout << j.dump(2) << "\n";
  return kExitOk;
}

int cmd_lines(const Instance& inst) {
  const LfGraph g = build_graph(inst.q, inst.n, inst.force);
  for (const auto& line : g.lines()) {
    std::cout << line.id << " " << lfg::graph::to_string(line.side) << " "
              << g.label(g.id_of(line.side, line.rep)) << " members={";
    for (std::size_t i = 0; i < line.members.size(); ++i) {
      std::cout << (i ? "," : "") << g.label(line.members[i]);
    }
    std::cout << "} |N|=" << lfg::graph::neighbor_set(g, line).count() << "\n";
  }
  return kExitOk;
}

int cmd_count(const Instance& inst, const std::string& method) {
  const LfGraph g = build_graph(inst.q, inst.n, inst.force);
  std::optional<lfg::BigCount> formula;
  std::optional<lfg::BigCount> brute;
  if (method == "formula" || method == "both") {
    formula = g.n() == 2 ? lfg::autos::formula_card_n2(g.q())
                         : lfg::autos::formula_card_general(g.q(), g.n());
  }
  if (method == "brute" || method == "both") {
    lfg::Deadline none;
    brute = lfg::autos::count_automorphisms_quotient(g, none).total;
    if (g.vertex_count() <= lfg::autos::kMaxDirectVertices &&
        lfg::autos::count_automorphisms_direct(g, none) != *brute) {
      std::cerr << "error: quotient and vertex-level counts disagree\n";
      return kExitFail;
    }
  }
  std::string sep;
  if (formula) {
    std::cout << "formula=" << lfg::to_decimal(*formula);
    sep = " ";
  }
  if (brute) std::cout << sep << "brute=" << lfg::to_decimal(*brute);
  std::cout << "\n";
  return formula && brute && *formula != *brute ? kExitFail : kExitOk;
}

int cmd_check(const std::string& path, bool force) {
  const auto [g, perm] = load_permutation(path, force);
  Json j;
  const auto bad = lfg::autos::find_adjacency_violation(g, perm);
  j["automorphism"] = !bad.has_value();
  if (bad) {
    j["violation"] = {g.label(bad->first), g.label(bad->second)};
    std::cout << j.dump(2) << "\n";
    return kExitFail;
  }
  const auto v = lfg::autos::check_structure(g, perm);
  j["line_action"] = v.line_action;
  j["n_commutation"] = v.n_commutation;
  j["intersection_identity"] = v.intersection_identity;
  j["intersection_via_sigma"] =
      v.intersection_via_sigma ? Json(*v.intersection_via_sigma) : Json(nullptr);
  j["sides"] = side_behavior_name(v.sides);
  j["side_pure"] = v.side_pure;
  j["componentwise"] = v.componentwise ? Json(*v.componentwise) : Json(nullptr);
  j["structure_holds"] = lfg::autos::structure_holds(g, v);
  j["first_failure"] = v.first_failure.empty() ? Json(nullptr) : Json(v.first_failure);
  std::cout << j.dump(2) << "\n";
  return lfg::autos::structure_holds(g, v) ? kExitOk : kExitFail;
}

int cmd_decompose(const std::string& path, bool force) {
  const auto [g, perm] = load_permutation(path, force);
  const auto res = lfg::autos::decompose(g, perm);
  if (const auto* f = std::get_if<lfg::autos::DecompositionFailure>(&res)) {
    Json j;
    j["failure"] = lfg::autos::failure_to_json(*f);
    std::cout << j.dump(2) << "\n";
    return kExitFail;
  }
  std::cout << lfg::autos::decomposition_to_json(g, std::get<lfg::autos::Decomposition>(res))
                   .dump(2)
            << "\n";
  return kExitOk;
}

struct VerifyArgs {
  std::optional<unsigned> q;
  std::optional<unsigned> n;
  std::string claims;
  std::optional<std::uint64_t> seed;
  std::optional<double> budget;
  std::string format = "json";
  std::string out;
  bool timings = false;
  bool full_oracles = false;
  unsigned samples = 100;
};

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("LFG_SEED"); env && *env) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (*end != '\0') throw UsageError("LFG_SEED must be an unsigned integer");
    return v;
  }
  return lfg::harness::kDefaultSeed;
}

int cmd_verify(const VerifyArgs& a) {
  if (a.q.has_value() != a.n.has_value()) {
    throw UsageError("--q and --n must be given together");
  }
  lfg::harness::VerifyOptions opt;
  opt.claims = lfg::harness::parse_claim_list(a.claims);
  opt.seed = resolve_seed(a.seed);
  opt.budget_seconds = a.budget;
  opt.timings = a.timings;
  opt.full_oracles = a.full_oracles;
  opt.samples = a.samples;

  std::vector<std::pair<unsigned, unsigned>> instances;
  if (a.q) {
    instances.emplace_back(*a.q, *a.n);
  } else {
    instances = lfg::harness::default_matrix();
  }
  std::vector<lfg::harness::Report> reports;
  for (const auto& [q, n] : instances) reports.push_back(lfg::harness::run_verify(q, n, opt));

  std::string text;
  if (a.format == "json") {
    Json j;
    if (reports.size() == 1) {
      j = lfg::harness::to_json(reports.front());
    } else {
      j = Json::array();
      for (const auto& r : reports) j.push_back(lfg::harness::to_json(r));
    }
    text = j.dump(2) + "\n";
  } else {
    for (const auto& r : reports) text += lfg::harness::render_text(r);
  }
  write_output(text, a.out);
  const bool ok = std::all_of(reports.begin(), reports.end(),
                              [](const auto& r) { return r.ok(); });
  return ok ? kExitOk : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Linear functional graphs over F_q^n: construction, automorphisms, verification"};
  app.require_subcommand(1);
  app.fallthrough();
  bool force = false;
  app.add_flag("--force", force, "Build beyond the vertex-count guard");

  Instance inst;
  auto add_instance = [&](CLI::App* sub) {
    sub->add_option("--q", inst.q, "Field order (prime power <= 32)")->required();
    sub->add_option("--n", inst.n, "Dimension (>= 2)")->required();
  };

  auto* build = app.add_subcommand("build", "Build the graph and print a summary or an export");
  add_instance(build);
  std::string export_format;
  std::string out_path;
  build->add_option("--export", export_format, "graph6 or json")
      ->check(CLI::IsMember({"graph6", "json"}));
  build->add_option("--out", out_path, "Output file (default stdout)");

  auto* invariants = app.add_subcommand("invariants", "Degree, component and line invariants");
  add_instance(invariants);
  auto* lines = app.add_subcommand("lines", "List twin classes with representatives");
  add_instance(lines);

  auto* autos = app.add_subcommand("autos", "Automorphism tools");
  autos->require_subcommand(1);
  auto* count = autos->add_subcommand("count", "Group order by formula and/or search");
  add_instance(count);
  std::string method = "both";
  count->add_option("--method", method, "formula, brute or both")
      ->check(CLI::IsMember({"formula", "brute", "both"}));
  std::string perm_path;
  auto* check = autos->add_subcommand("check", "Check a permutation file");
  check->add_option("--perm", perm_path, "JSON {q, n, image}")->required();
  auto* decompose = autos->add_subcommand("decompose", "Decompose a permutation file");
  decompose->add_option("--perm", perm_path, "JSON {q, n, image}")->required();

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Run the claim verification harness");
  verify->add_option("--q", va.q, "Field order; omit with --n for the default matrix");
  verify->add_option("--n", va.n, "Dimension");
  verify->add_option("--claims", va.claims, "Comma-separated claim ids (default all)");
  verify->add_option("--seed", va.seed, "Seed for randomized checks (overrides LFG_SEED)");
  verify->add_option("--budget", va.budget, "Time budget in seconds per instance")
      ->check(CLI::PositiveNumber);
  verify->add_option("--format", va.format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));
  verify->add_option("--out", va.out, "Output file (default stdout)");
  verify->add_option("--samples", va.samples, "Random instances per sampled check");
  verify->add_flag("--timings", va.timings, "Record per-claim wall time (breaks byte-identity)");
  verify->add_flag("--full-oracles", va.full_oracles, "Run expensive cross-check oracles");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  inst.force = force;
  try {
    if (build->parsed()) return cmd_build(inst, export_format, out_path);
    if (invariants->parsed()) return cmd_invariants(inst);
    if (lines->parsed()) return cmd_lines(inst);
    if (count->parsed()) return cmd_count(inst, method);
    if (check->parsed()) return cmd_check(perm_path, force);
    if (decompose->parsed()) return cmd_decompose(perm_path, force);
    if (verify->parsed()) return cmd_verify(va);
  } catch (const lfg::SizeGuardError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
