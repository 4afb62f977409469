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

#include <gtest/gtest.h>

#include <vector>

#include "lfg/common/bitset.hpp"
#include "lfg/common/rng.hpp"
#include "lfg/simd/bitops.hpp"

namespace lfg::simd {
namespace {

std::vector<Word> random_words(Rng& rng, std::size_t n, int density) {
  std::vector<Word> out(n);
  for (auto& w : out) {
    w = rng.next();
    // Sparse and dense patterns exercise the popcount table edges.
    if (density < 0) w &= rng.next() & rng.next();
    if (density > 0) w |= rng.next() | rng.next();
  }
  return out;
}

class KernelEquivalence : public ::testing::Test {
 protected:
  void SetUp() override {
    wide_ = avx2_kernels();
    if (wide_ == nullptr) GTEST_SKIP() << "no AVX2 on this CPU";
  }
  const BitKernels* wide_ = nullptr;
  const BitKernels& ref_ = scalar_kernels();
};

TEST_F(KernelEquivalence, CountsAgreeOnAllLengths) {
  Rng rng(7);
  for (std::size_t n = 0; n <= 70; ++n) {
    for (int density : {-1, 0, 1}) {
      const auto a = random_words(rng, n, density);
      const auto b = random_words(rng, n, density);
      EXPECT_EQ(ref_.popcount(a.data(), n), wide_->popcount(a.data(), n)) << n;
      EXPECT_EQ(ref_.and_popcount(a.data(), b.data(), n),
                wide_->and_popcount(a.data(), b.data(), n))
          << n;
    }
  }
}

TEST_F(KernelEquivalence, PredicatesAgree) {
  Rng rng(11);
  for (std::size_t n = 0; n <= 40; ++n) {
    auto a = random_words(rng, n, -1);
    auto b = random_words(rng, n, 1);
    auto sub = a;
    for (std::size_t i = 0; i < n; ++i) sub[i] &= b[i];
    EXPECT_EQ(ref_.equal(a.data(), a.data(), n), wide_->equal(a.data(), a.data(), n));
    EXPECT_EQ(ref_.equal(a.data(), b.data(), n), wide_->equal(a.data(), b.data(), n));
    EXPECT_EQ(ref_.is_subset(sub.data(), b.data(), n), wide_->is_subset(sub.data(), b.data(), n));
    EXPECT_EQ(ref_.is_subset(a.data(), b.data(), n), wide_->is_subset(a.data(), b.data(), n));
    EXPECT_EQ(ref_.intersects(a.data(), b.data(), n), wide_->intersects(a.data(), b.data(), n));
    std::vector<Word> zero(n, 0);
    EXPECT_EQ(ref_.intersects(a.data(), zero.data(), n),
              wide_->intersects(a.data(), zero.data(), n));
  }
}

TEST_F(KernelEquivalence, BinaryOpsAgree) {
  Rng rng(13);
  for (std::size_t n = 0; n <= 40; ++n) {
    const auto a = random_words(rng, n, 0);
    const auto b = random_words(rng, n, 0);
    std::vector<Word> x(n), y(n);
    ref_.and_into(x.data(), a.data(), b.data(), n);
    wide_->and_into(y.data(), a.data(), b.data(), n);
    EXPECT_EQ(x, y);
    ref_.or_into(x.data(), a.data(), b.data(), n);
    wide_->or_into(y.data(), a.data(), b.data(), n);
    EXPECT_EQ(x, y);
    ref_.andnot_into(x.data(), a.data(), b.data(), n);
    wide_->andnot_into(y.data(), a.data(), b.data(), n);
    EXPECT_EQ(x, y);
  }
}

TEST(Kernels, ScalarReferenceValues) {
  const auto& k = scalar_kernels();
  const Word a[2] = {0b1011, ~Word{0}};
  const Word b[2] = {0b0011, 0};
  EXPECT_EQ(k.popcount(a, 2), 67u);
  EXPECT_EQ(k.and_popcount(a, b, 2), 2u);
  EXPECT_TRUE(k.is_subset(b, a, 2));
  EXPECT_FALSE(k.is_subset(a, b, 2));
  EXPECT_TRUE(k.intersects(a, b, 2));
  EXPECT_EQ(k.isa, Isa::kScalar);
  EXPECT_EQ(isa_name(Isa::kAvx2), "avx2");
}

TEST(BitsetTest, MatchesNaiveModel) {
  Rng rng(3);
  for (std::size_t bits : {1u, 63u, 64u, 65u, 130u, 256u}) {
    Bitset a(bits), b(bits);
    std::vector<bool> ma(bits), mb(bits);
    for (std::size_t i = 0; i < bits; ++i) {
      if (rng.coin()) { a.set(i); ma[i] = true; }
      if (rng.coin()) { b.set(i); mb[i] = true; }
    }
    std::size_t ca = 0, cab = 0;
    bool subset = true;
    for (std::size_t i = 0; i < bits; ++i) {
      ca += ma[i];
      cab += ma[i] && mb[i];
      subset = subset && (!ma[i] || mb[i]);
    }
    EXPECT_EQ(a.count(), ca);
    EXPECT_EQ(a.and_count(b), cab);
    EXPECT_EQ(a.is_subset_of(b), subset);
    EXPECT_EQ((a & b).count(), cab);
    Bitset d = a;
    d.subtract(b);
    EXPECT_EQ(d.count(), ca - cab);
    Bitset full(bits);
    full.set_all();
    EXPECT_EQ(full.count(), bits);
    std::vector<std::uint32_t> listed = a.to_vector();
    EXPECT_EQ(listed.size(), ca);
    if (!listed.empty()) EXPECT_EQ(a.first(), listed.front());
  }
}

}  // namespace
}  // namespace lfg::simd
