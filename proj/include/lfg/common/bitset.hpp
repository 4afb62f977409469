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

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "lfg/simd/bitops.hpp"

namespace lfg {

// Fixed-size dynamic bitset backed by 64-bit words. Bits past size() are
// always zero so word-wise comparisons are exact.
class Bitset {
 public:
  using Word = simd::Word;

  Bitset() = default;
  explicit Bitset(std::size_t bits)
      : bits_(bits), words_((bits + 63) / 64, 0) {}

  std::size_t size() const { return bits_; }
  std::size_t word_count() const { return words_.size(); }
  std::span<const Word> words() const { return words_; }
  std::span<Word> words() { return words_; }

  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }
  void set(std::size_t i) { words_[i >> 6] |= Word{1} << (i & 63); }
  void reset(std::size_t i) { words_[i >> 6] &= ~(Word{1} << (i & 63)); }

  void set_all() {
    for (auto& w : words_) w = ~Word{0};
    trim();
  }
  void clear() {
    for (auto& w : words_) w = 0;
  }

  std::size_t count() const {
    return simd::active_kernels().popcount(words_.data(), words_.size());
  }
  bool none() const {
    for (Word w : words_) {
      if (w != 0) return false;
    }
    return true;
  }
  bool any() const { return !none(); }

  std::size_t and_count(const Bitset& other) const {
    return simd::active_kernels().and_popcount(words_.data(),
                                               other.words_.data(),
                                               words_.size());
  }
  bool intersects(const Bitset& other) const {
    return simd::active_kernels().intersects(words_.data(),
                                             other.words_.data(),
                                             words_.size());
  }
  bool is_subset_of(const Bitset& other) const {
    return simd::active_kernels().is_subset(words_.data(),
                                            other.words_.data(),
                                            words_.size());
  }

  Bitset& operator&=(const Bitset& other) {
    simd::active_kernels().and_into(words_.data(), words_.data(),
                                    other.words_.data(), words_.size());
    return *this;
  }
  Bitset& operator|=(const Bitset& other) {
    simd::active_kernels().or_into(words_.data(), words_.data(),
                                   other.words_.data(), words_.size());
    return *this;
  }
  // Removes the bits of other.
  Bitset& subtract(const Bitset& other) {
    simd::active_kernels().andnot_into(words_.data(), words_.data(),
                                       other.words_.data(), words_.size());
    return *this;
  }

  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }

  friend bool operator==(const Bitset& a, const Bitset& b) {
    return a.bits_ == b.bits_ &&
           simd::active_kernels().equal(a.words_.data(), b.words_.data(),
                                        a.words_.size());
  }

  friend bool operator<(const Bitset& a, const Bitset& b) {
    return a.words_ < b.words_;
  }

  // Index of the lowest set bit at or after `from`, or size() if none.
  std::size_t next(std::size_t from) const {
    if (from >= bits_) return bits_;
    std::size_t wi = from >> 6;
    Word w = words_[wi] & (~Word{0} << (from & 63));
    while (true) {
      if (w != 0) return (wi << 6) + std::countr_zero(w);
      if (++wi == words_.size()) return bits_;
      w = words_[wi];
    }
  }
  std::size_t first() const { return next(0); }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
      Word w = words_[wi];
      while (w != 0) {
        f((wi << 6) + std::countr_zero(w));
        w &= w - 1;
      }
    }
  }

  std::vector<std::uint32_t> to_vector() const {
    std::vector<std::uint32_t> out;
    out.reserve(count());
    for_each([&](std::size_t i) { out.push_back(static_cast<std::uint32_t>(i)); });
    return out;
  }

 private:
  void trim() {
    if (bits_ % 64 != 0 && !words_.empty()) {
      words_.back() &= (Word{1} << (bits_ % 64)) - 1;
    }
  }

  std::size_t bits_ = 0;
  std::vector<Word> words_;
};

}  // namespace lfg
