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

#include "lfg/gf/field.hpp"

#include <stdexcept>
#include <string>

namespace lfg::gf {
namespace {

using Poly = std::vector<unsigned>;  // coefficients mod p, low degree first

Poly digits_of(unsigned value, unsigned p, unsigned k) {
  Poly d(k, 0);
  for (unsigned i = 0; i < k; ++i) {
    d[i] = value % p;
    value /= p;
  }
  return d;
}

unsigned value_of(const Poly& d, unsigned p) {
  unsigned v = 0;
  for (auto it = d.rbegin(); it != d.rend(); ++it) v = v * p + *it;
  return v;
}

// Remainder of a modulo a monic divisor.
Poly poly_mod(Poly a, const Poly& divisor, unsigned p) {
  const std::size_t d = divisor.size() - 1;
  for (std::size_t i = a.size(); i-- > d;) {
    const unsigned c = a[i] % p;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= d; ++j) {
      a[i - d + j] = (a[i - d + j] + (p - c) * divisor[j]) % p;
    }
  }
  a.resize(d);
  return a;
}

}  // namespace

bool is_prime(unsigned long long n) {
  if (n < 2) return false;
  for (unsigned long long d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::optional<std::pair<unsigned, unsigned>> prime_power(unsigned long long q) {
  if (q < 2) return std::nullopt;
  unsigned long long p = 2;
  while (q % p != 0) ++p;
  unsigned k = 0;
  while (q % p == 0) {
    q /= p;
    ++k;
  }
  if (q != 1) return std::nullopt;
  return std::make_pair(static_cast<unsigned>(p), k);
}

bool is_irreducible(unsigned p, std::span<const unsigned> poly) {
  if (poly.size() < 2 || poly.back() != 1) return false;
  const std::size_t degree = poly.size() - 1;
  const Poly target(poly.begin(), poly.end());
  for (std::size_t m = 1; m <= degree / 2; ++m) {
    unsigned long long combos = 1;
    for (std::size_t i = 0; i < m; ++i) combos *= p;
    for (unsigned long long lower = 0; lower < combos; ++lower) {
      Poly factor(m + 1, 0);
      unsigned long long rest = lower;
      for (std::size_t i = 0; i < m; ++i) {
        factor[i] = static_cast<unsigned>(rest % p);
        rest /= p;
      }
      factor[m] = 1;
      const Poly r = poly_mod(target, factor, p);
      bool zero = true;
      for (unsigned c : r) zero = zero && c == 0;
      if (zero) return false;
    }
  }
  return true;
}

std::optional<std::vector<unsigned>> builtin_modulus(unsigned p, unsigned k) {
  // Fixed moduli so element encodings are reproducible across runs.
  if (p == 2 && k == 2) return Poly{1, 1, 1};        // x^2 + x + 1
  if (p == 2 && k == 3) return Poly{1, 1, 0, 1};     // x^3 + x + 1
  if (p == 2 && k == 4) return Poly{1, 1, 0, 0, 1};  // x^4 + x + 1
  if (p == 3 && k == 2) return Poly{1, 0, 1};        // x^2 + 1
  if (p == 3 && k == 3) return Poly{1, 2, 0, 1};     // x^3 + 2x + 1
  if (p == 5 && k == 2) return Poly{2, 0, 1};        // x^2 + 2
  return std::nullopt;
}

FieldPtr Field::make(unsigned p, unsigned k,
                     std::optional<std::vector<unsigned>> modulus) {
  if (!is_prime(p)) {
    throw std::invalid_argument("characteristic " + std::to_string(p) +
                                " is not prime");
  }
  if (k < 1) throw std::invalid_argument("extension degree must be >= 1");
  unsigned long long q = 1;
  for (unsigned i = 0; i < k; ++i) {
    q *= p;
    if (q > kMaxOrder) {
      throw std::invalid_argument("field order exceeds supported maximum " +
                                  std::to_string(kMaxOrder));
    }
  }
  Poly mod;
  if (modulus) {
    mod = *modulus;
  } else if (k == 1) {
    mod = {0, 1};
  } else if (auto builtin = builtin_modulus(p, k)) {
    mod = *builtin;
  } else {
    throw std::invalid_argument("no built-in modulus for q = " +
                                std::to_string(q) + "; supply one");
  }
  if (mod.size() != k + 1) {
    throw std::invalid_argument("modulus must have degree k");
  }
  for (unsigned c : mod) {
    if (c >= p) throw std::invalid_argument("modulus coefficient out of range");
  }
  if (mod.back() != 1) throw std::invalid_argument("modulus is not monic");
  if (!is_irreducible(p, mod)) {
    throw std::invalid_argument("modulus is reducible over F_p");
  }
  return FieldPtr(new Field(p, k, std::move(mod)));
}

FieldPtr Field::of_order(unsigned q) {
  const auto pk = prime_power(q);
  if (!pk) {
    throw std::invalid_argument(std::to_string(q) + " is not a prime power");
  }
  return make(pk->first, pk->second);
}

Field::Field(unsigned p, unsigned k, std::vector<unsigned> modulus)
    : p_(p), k_(k), q_(1), modulus_(std::move(modulus)) {
  for (unsigned i = 0; i < k_; ++i) q_ *= p_;
  add_.resize(q_ * q_);
  mul_.resize(q_ * q_);
  neg_.resize(q_);
  inv_.resize(q_);

  std::vector<Poly> digits(q_);
  for (unsigned a = 0; a < q_; ++a) digits[a] = digits_of(a, p_, k_);

  for (unsigned a = 0; a < q_; ++a) {
    Poly n(k_);
    for (unsigned i = 0; i < k_; ++i) n[i] = (p_ - digits[a][i]) % p_;
    neg_[a] = felt(value_of(n, p_));
    for (unsigned b = 0; b < q_; ++b) {
      Poly s(k_);
      for (unsigned i = 0; i < k_; ++i) s[i] = (digits[a][i] + digits[b][i]) % p_;
      add_[a * q_ + b] = felt(value_of(s, p_));

      Poly prod(2 * k_ - 1, 0);
      for (unsigned i = 0; i < k_; ++i) {
        for (unsigned j = 0; j < k_; ++j) {
          prod[i + j] = (prod[i + j] + digits[a][i] * digits[b][j]) % p_;
        }
      }
      mul_[a * q_ + b] = felt(value_of(poly_mod(prod, modulus_, p_), p_));
    }
  }
  for (unsigned a = 1; a < q_; ++a) {
    for (unsigned b = 1; b < q_; ++b) {
      if (mul_[a * q_ + b].value == 1) {
        inv_[a] = felt(b);
        break;
      }
    }
  }

  frob_.resize(static_cast<std::size_t>(k_) * q_);
  for (unsigned a = 0; a < q_; ++a) frob_[a] = felt(a);
  for (unsigned j = 1; j < k_; ++j) {
    for (unsigned a = 0; a < q_; ++a) {
      frob_[j * q_ + a] = pow(frob_[(j - 1) * q_ + a], p_);
    }
  }
}

Felt Field::from_int(long long i) const {
  long long r = i % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return felt(static_cast<unsigned>(r));
}

Felt Field::element(unsigned v) const {
  if (v >= q_) throw std::out_of_range("element index out of range");
  return felt(v);
}

Felt Field::inv(Felt a) const {
  if (a.value == 0) throw std::domain_error("inverse of zero");
  return inv_[a.value];
}

Felt Field::pow(Felt a, unsigned long long e) const {
  Felt result = one();
  Felt base = a;
  while (e != 0) {
    if (e & 1U) result = mul(result, base);
    base = mul(base, base);
    e >>= 1U;
  }
  return result;
}

Felt Field::frobenius(Felt a, unsigned j) const {
  if (j >= k_) throw std::out_of_range("Frobenius exponent out of range");
  return frob_[j * q_ + a.value];
}

std::vector<unsigned> Field::automorphisms() const {
  std::vector<unsigned> out(k_);
  for (unsigned j = 0; j < k_; ++j) out[j] = j;
  return out;
}

}  // namespace lfg::gf
