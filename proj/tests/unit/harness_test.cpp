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

#include <set>

#include "lfg/common/error.hpp"
#include "lfg/harness/claims.hpp"
#include "lfg/harness/verify.hpp"

namespace lfg::harness {
namespace {

const ClaimResult& claim(const Report& r, std::string_view id) {
  for (const auto& c : r.claims) {
    if (c.id == id) return c;
  }
  throw std::out_of_range(std::string(id));
}

VerifyOptions only(std::string_view ids) {
  VerifyOptions o;
  o.claims = parse_claim_list(ids);
  return o;
}

TEST(Registry, SortedUniqueAndComplete) {
  const auto& reg = claim_registry();
  EXPECT_EQ(reg.size(), 14u);
  std::set<std::string_view> ids;
  for (std::size_t i = 0; i < reg.size(); ++i) {
    EXPECT_TRUE(ids.insert(reg[i].id).second);
    EXPECT_FALSE(reg[i].locus.empty());
    if (i > 0) EXPECT_LT(reg[i - 1].id, reg[i].id);
  }
  for (auto id : {"REG", "DOM-SIDE", "DOM-WHOLE-STD", "DOM-WHOLE-TOT", "CONN", "SIGMA-CARD",
                  "TWIN", "COMP-ISO", "STRUCT-N2", "STRUCT-GEN", "CARD-N2", "CARD-GEN",
                  "CARD-STAB", "DECOMP"}) {
    EXPECT_NE(find_claim(id), nullptr) << id;
  }
}

TEST(Registry, ParseClaimList) {
  EXPECT_EQ(parse_claim_list("").size(), 14u);
  EXPECT_EQ(parse_claim_list("reg, CARD-N2"), (std::vector<std::string>{"CARD-N2", "REG"}));
  EXPECT_THROW(parse_claim_list("NOPE"), std::invalid_argument);
  EXPECT_THROW(parse_claim_list(","), std::invalid_argument);
}

TEST(Verify, CardN2MatchesAtF2) {
  const Report r = run_verify(2, 2, only("CARD-N2"));
  const auto& c = claim(r, "CARD-N2");
  EXPECT_EQ(c.verdict, Verdict::kMatch);
  EXPECT_EQ(*c.formula, 48);
  EXPECT_EQ(*c.oracle, 48);
}

TEST(Verify, RegularityPassesAtF2Cube) {
  const Report r = run_verify(2, 3, only("REG"));
  EXPECT_EQ(claim(r, "REG").verdict, Verdict::kPropertyPass);
  EXPECT_TRUE(r.ok());
}

TEST(Verify, StandardDominationMismatchCarriesWitness) {
  const Report r = run_verify(2, 2, only("DOM-WHOLE-STD"));
  const auto& c = claim(r, "DOM-WHOLE-STD");
  EXPECT_EQ(c.verdict, Verdict::kMismatch);
  EXPECT_EQ(*c.formula, 6);
  EXPECT_EQ(*c.oracle, 3);
  EXPECT_EQ(c.witness["set"].size(), 3u);
  EXPECT_FALSE(r.ok());
}

TEST(Verify, GeneralCardinalityReportsBothOracles) {
  const Report r = run_verify(2, 3, only("CARD-GEN"));
  const auto& c = claim(r, "CARD-GEN");
  EXPECT_EQ(*c.formula, 10080);
  EXPECT_EQ(*c.oracle, 336);
  EXPECT_EQ(c.witness["direct"], "336");
  EXPECT_EQ(c.verdict, Verdict::kMismatch);
}

TEST(Verify, EveryClaimAppearsOnce) {
  for (auto [q, n] : default_matrix()) {
    const Report r = run_verify(q, n, only("REG,CONN"));
    ASSERT_EQ(r.claims.size(), claim_registry().size());
    for (std::size_t i = 0; i < r.claims.size(); ++i) {
      EXPECT_EQ(r.claims[i].id, claim_registry()[i].id);
    }
    EXPECT_EQ(claim(r, "TWIN").verdict_string(), "skipped(not selected)");
  }
}

TEST(Verify, NonApplicableClaimsAreSkippedWithReason) {
  const Report r = run_verify(3, 2, only("CARD-GEN,STRUCT-GEN,COMP-ISO"));
  EXPECT_EQ(claim(r, "CARD-GEN").verdict, Verdict::kSkipped);
  EXPECT_EQ(claim(r, "CARD-GEN").skip_reason, "applies to n >= 3 only");
  EXPECT_EQ(claim(r, "COMP-ISO").verdict, Verdict::kMatch);
}

TEST(Verify, DeterministicJson) {
  VerifyOptions o;
  o.seed = 12345;
  const std::string a = to_json(run_verify(3, 2, o)).dump();
  const std::string b = to_json(run_verify(3, 2, o)).dump();
  EXPECT_EQ(a, b);
  const Json j = Json::parse(a);
  EXPECT_EQ(j["seed"], 12345);
  for (const auto& c : j["claims"]) {
    for (auto key : {"id", "paper_locus", "formula", "oracle", "verdict", "witness", "ms"}) {
      EXPECT_TRUE(c.contains(key)) << key;
    }
    EXPECT_TRUE(c["ms"].is_null());
  }
}

TEST(Verify, TimeoutIsSkippedNotDropped) {
  VerifyOptions o;
  o.budget_seconds = 1e-9;
  const Report r = run_verify(3, 3, o);
  ASSERT_EQ(r.claims.size(), claim_registry().size());
  for (const auto& c : r.claims) {
    if (c.verdict == Verdict::kSkipped) {
      EXPECT_FALSE(c.skip_reason.empty());
    }
  }
  EXPECT_EQ(claim(r, "STRUCT-GEN").verdict_string(), "skipped(timeout)");
}

TEST(Verify, Errors) {
  EXPECT_THROW(run_verify(6, 2, {}), std::invalid_argument);
  EXPECT_THROW(run_verify(2, 1, {}), std::invalid_argument);
  EXPECT_THROW(run_verify(7, 9, {}), SizeGuardError);
}

TEST(Render, TextMentionsEveryClaim) {
  const Report r = run_verify(2, 2, only("REG"));
  const std::string text = render_text(r);
  for (const auto& c : claim_registry()) {
    EXPECT_NE(text.find(std::string(c.id)), std::string::npos);
  }
  EXPECT_NE(text.find("result ok"), std::string::npos);
}

}  // namespace
}  // namespace lfg::harness
