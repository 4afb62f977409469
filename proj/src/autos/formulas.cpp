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

#include "lfg/autos/formulas.hpp"

#include <stdexcept>

#include "lfg/gf/field.hpp"

namespace lfg::autos {

namespace {

void require_prime_power(unsigned q) {
  if (!gf::prime_power(q)) {
    throw std::invalid_argument("q = " + std::to_string(q) + " is not a prime power");
  }
}

// Exponents beyond this make no sense at any size the library can build.
constexpr unsigned kMaxLineCount = 1U << 20;

unsigned small_line_count(unsigned q, unsigned n) {
  const BigCount m = line_count(q, n);
  if (m > kMaxLineCount) throw std::invalid_argument("instance too large for a closed form");
  return m.convert_to<unsigned>();
}

}  // namespace

BigCount line_count(unsigned q, unsigned n) {
  require_prime_power(q);
  if (n < 1) throw std::invalid_argument("n must be positive");
  BigCount qn = 1;
  for (unsigned i = 0; i < n; ++i) qn *= q;
  return (qn - 1) / (q - 1);
}

BigCount formula_card_n2(unsigned q) {
  require_prime_power(q);
  const BigCount f = factorial(q - 1);
  return factorial(q + 1) * boost::multiprecision::pow(BigCount(2) * f * f, q + 1);
}

BigCount formula_card_general(unsigned q, unsigned n) {
  if (n < 3) throw std::invalid_argument("the general formula needs n >= 3");
  const unsigned m = small_line_count(q, n);
  return 2 * factorial(m) * boost::multiprecision::pow(factorial(q - 1), 2 * m);
}

BigCount formula_twin_stabilizer(unsigned q, unsigned n) {
  if (n < 2) throw std::invalid_argument("n must be at least 2");
  const unsigned m = small_line_count(q, n);
  return boost::multiprecision::pow(factorial(q - 1), 2 * m);
}

BigCount formula_component_isos(unsigned q) {
  require_prime_power(q);
  const BigCount f = factorial(q - 1);
  return 2 * f * f;
}

}  // namespace lfg::autos
