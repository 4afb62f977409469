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

#include "lfg/autos/serialize.hpp"

#include <stdexcept>

namespace lfg::autos {

using graph::Side;

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw std::invalid_argument(std::string("missing field \"") + key + "\"");
  }
  return j.at(key);
}

unsigned as_unsigned(const Json& j, const char* what) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0)) {
    throw std::invalid_argument(std::string(what) + " must be a nonnegative integer");
  }
  return j.get<unsigned>();
}

std::vector<VertexId> id_list(const Json& j, const char* what) {
  if (!j.is_array()) throw std::invalid_argument(std::string(what) + " must be an array");
  std::vector<VertexId> out;
  out.reserve(j.size());
  for (const auto& x : j) out.push_back(as_unsigned(x, what));
  return out;
}

}  // namespace

Json permutation_to_json(const LfGraph& g, const Permutation& perm) {
  Json j;
  j["q"] = g.q();
  j["n"] = g.n();
  j["image"] = std::vector<VertexId>(perm.image().begin(), perm.image().end());
  return j;
}

PermutationFile permutation_from_json(const Json& j) {
  PermutationFile out;
  out.q = as_unsigned(field(j, "q"), "q");
  out.n = as_unsigned(field(j, "n"), "n");
  out.image = id_list(field(j, "image"), "image");
  return out;
}

Json decomposition_to_json(const LfGraph& g, const Decomposition& d) {
  Json j;
  j["q"] = g.q();
  j["n"] = g.n();
  j["swap"] = d.swap;
  j["delta"] = d.delta ? Json(std::vector<VertexId>(d.delta->image().begin(),
                                                    d.delta->image().end()))
                       : Json(nullptr);
  Json rows = Json::array();
  for (unsigned r = 0; r < d.p.rows(); ++r) {
    Json row = Json::array();
    for (unsigned c = 0; c < d.p.cols(); ++c) row.push_back(d.p.at(r, c).value);
    rows.push_back(row);
  }
  j["P"] = rows;
  j["frob"] = d.frob_exponent ? Json(*d.frob_exponent) : Json(nullptr);
  if (d.phi) {
    Json phi = Json::array();
    for (auto x : *d.phi) phi.push_back(x.value);
    j["phi"] = phi;
  } else {
    j["phi"] = nullptr;
  }
  Json tau = Json::object();
  for (const auto& [line_id, images] : d.tau) {
    const auto& line = g.line(line_id);
    tau[std::to_string(g.id_of(line.side, line.rep))] = images;
  }
  j["tau"] = tau;
  return j;
}

Decomposition decomposition_from_json(const LfGraph& g, const Json& j) {
  if (as_unsigned(field(j, "q"), "q") != g.q() || as_unsigned(field(j, "n"), "n") != g.n()) {
    throw std::invalid_argument("decomposition is for a different graph");
  }
  Decomposition d;
  const Json& swap = field(j, "swap");
  if (!swap.is_boolean()) throw std::invalid_argument("swap must be a boolean");
  d.swap = swap.get<bool>();
  if (const Json& delta = field(j, "delta"); !delta.is_null()) {
    d.delta = Permutation(id_list(delta, "delta"));
  }
  const Json& rows = field(j, "P");
  if (!rows.is_array() || rows.size() != g.n()) throw std::invalid_argument("P must have n rows");
  std::vector<Felt> entries;
  for (const auto& row : rows) {
    if (!row.is_array() || row.size() != g.n()) {
      throw std::invalid_argument("P must have n columns");
    }
    for (const auto& x : row) entries.push_back(g.field().element(as_unsigned(x, "P entry")));
  }
  d.p = Matrix(g.field_ptr(), g.n(), g.n(), std::move(entries));
  if (const Json& frob = field(j, "frob"); !frob.is_null()) {
    d.frob_exponent = as_unsigned(frob, "frob");
  }
  if (const Json& phi = field(j, "phi"); !phi.is_null()) {
    std::vector<Felt> table;
    for (auto x : id_list(phi, "phi")) table.push_back(g.field().element(x));
    d.phi = std::move(table);
  }
  const Json& tau = field(j, "tau");
  if (!tau.is_object()) throw std::invalid_argument("tau must be an object");
  for (const auto& [key, images] : tau.items()) {
    std::size_t used = 0;
    unsigned long rep = 0;
    try {
      rep = std::stoul(key, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != key.size() || rep >= g.vertex_count()) {
      throw std::invalid_argument("tau key \"" + key + "\" is not a vertex id");
    }
    const auto v = static_cast<VertexId>(rep);
    const auto& line = g.line(g.line_of(v));
    if (g.id_of(line.side, line.rep) != v) {
      throw std::invalid_argument("tau key " + key + " is not a class representative");
    }
    d.tau.emplace(line.id, id_list(images, "tau entry"));
  }
  return d;
}

Json failure_to_json(const DecompositionFailure& f) {
  Json j;
  j["step"] = f.step;
  j["message"] = f.message;
  j["witness"] = f.witness;
  return j;
}

}  // namespace lfg::autos
