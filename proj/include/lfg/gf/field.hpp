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

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

namespace lfg::gf {

// Canonical element of F_q: the polynomial-basis coefficient vector
// c_0 + c_1 x + ... packed as sum c_i p^i.
struct Felt {
  std::uint16_t value = 0;

  friend constexpr auto operator<=>(Felt, Felt) = default;
};

inline constexpr Felt felt(unsigned v) { return Felt{static_cast<std::uint16_t>(v)}; }

class Field;
using FieldPtr = std::shared_ptr<const Field>;

// F_q for q = p^k, with full addition/multiplication tables. Immutable after
// construction.
class Field {
 public:
  // Largest supported order; all arithmetic is table driven.
  static constexpr unsigned kMaxOrder = 32;

  // modulus: coefficients low degree first, length k+1, monic. When absent
  // for k > 1 the built-in table supplies one (q in {4, 8, 9, 16, 25, 27}).
  // Throws std::invalid_argument for a non-prime p, an order above kMaxOrder,
  // a reducible or non-monic modulus, or a missing modulus.
  static FieldPtr make(unsigned p, unsigned k,
                       std::optional<std::vector<unsigned>> modulus = {});

  // Field of order q (prime power), using the built-in modulus if needed.
  static FieldPtr of_order(unsigned q);

  unsigned p() const { return p_; }
  unsigned k() const { return k_; }
  unsigned q() const { return q_; }
  std::span<const unsigned> modulus() const { return modulus_; }

  Felt zero() const { return Felt{0}; }
  Felt one() const { return Felt{1}; }
  // Image of the integer i in the prime subfield.
  Felt from_int(long long i) const;
  // Element with canonical index v; throws std::out_of_range if v >= q.
  Felt element(unsigned v) const;

  Felt add(Felt a, Felt b) const { return add_[a.value * q_ + b.value]; }
  Felt sub(Felt a, Felt b) const { return add(a, neg(b)); }
  Felt mul(Felt a, Felt b) const { return mul_[a.value * q_ + b.value]; }
  Felt neg(Felt a) const { return neg_[a.value]; }
  // Throws std::domain_error for a == 0.
  Felt inv(Felt a) const;
  Felt div(Felt a, Felt b) const { return mul(a, inv(b)); }
  Felt pow(Felt a, unsigned long long e) const;

  // a^(p^j), 0 <= j < k. Throws std::out_of_range otherwise.
  Felt frobenius(Felt a, unsigned j) const;
  // Exponents j of every field automorphism a -> a^(p^j).
  std::vector<unsigned> automorphisms() const;

  bool operator==(const Field& other) const {
    return p_ == other.p_ && k_ == other.k_ && modulus_ == other.modulus_;
  }

 private:
  Field(unsigned p, unsigned k, std::vector<unsigned> modulus);

  unsigned p_;
  unsigned k_;
  unsigned q_;
  std::vector<unsigned> modulus_;
  std::vector<Felt> add_;
  std::vector<Felt> mul_;
  std::vector<Felt> neg_;
  std::vector<Felt> inv_;
  std::vector<Felt> frob_;  // k rows of q entries
};

bool is_prime(unsigned long long n);

// Splits q = p^k. Returns nullopt when q is not a prime power.
std::optional<std::pair<unsigned, unsigned>> prime_power(unsigned long long q);

// Whether the monic polynomial (coefficients low degree first) over F_p is
// irreducible, by exhaustive search for monic factors up to half its degree.
bool is_irreducible(unsigned p, std::span<const unsigned> poly);

// Built-in irreducible modulus for q = p^k (k > 1), if tabulated.
std::optional<std::vector<unsigned>> builtin_modulus(unsigned p, unsigned k);

}  // namespace lfg::gf
