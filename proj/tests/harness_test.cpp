/*
 * Copyright 2026 The SGC Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */


#include <gtest/gtest.h>

#include <algorithm>
#include <vector>

#include "oracle.hpp"
#include "sgc/harness.hpp"

namespace sgc {
namespace {

constexpr std::uint32_t kQ = 65537;

bool UsesScheme3(const TransmissionPlan& plan) {
  return std::any_of(plan.trace.begin(), plan.trace.end(), [](const TraceStep& s) {
    return s.branch == Branch::kScheme3;
  });
}

TEST(VerifyAllSubsets, WorkedInstance) {
  auto plan = BuildPlan(DeriveParams(12, 12, 7, 2), kQ, 0);
  auto keys = GenKeys(plan);
  auto r = VerifyAllSubsets(plan, keys);
  EXPECT_FALSE(r.sampled);
  EXPECT_EQ(r.subsets_total, 792u);
  EXPECT_EQ(r.subsets_checked, 792u);
  EXPECT_EQ(r.worst_cost, Rational(7, 2));
  EXPECT_EQ(r.rank_lambda, 6);
  EXPECT_EQ(r.eta_achieved, Rational(2));
  EXPECT_TRUE(r.security.pass());
  // The scheme 3 gap: a handful of patterns cannot cancel keys and decode.
  int oracle_failures = 0;
  oracle::ForEachSubset(12, 7, [&](const std::vector<int>& a) {
    oracle_failures += oracle::Decodes(plan.T, plan.D, a, kQ) ? 0 : 1;
  });
  EXPECT_EQ(r.subsets_failed_count, static_cast<std::uint64_t>(oracle_failures));
  EXPECT_GT(oracle_failures, 0);
  EXPECT_FALSE(r.pass());
  const std::vector<int> known = {0, 1, 2, 3, 7, 8, 9};
  EXPECT_NE(std::find(r.subsets_failed.begin(), r.subsets_failed.end(), known),
            r.subsets_failed.end());
}

TEST(VerifyAllSubsets, BaseAndSabotage) {
  auto plan = BuildPlan(ParamsFromReplication(5, 5, 2), kQ, 0);
  auto keys = GenKeys(plan);
  auto r = VerifyAllSubsets(plan, keys);
  EXPECT_TRUE(r.pass());
  EXPECT_EQ(r.subsets_checked, 10u);  // C(5, 2)
  EXPECT_EQ(r.worst_cost, Rational(1));

  auto cyc = CyclicPlan(ParamsFromReplication(8, 3, 2), kQ, 0);
  auto ck = GenKeys(cyc);
  ASSERT_TRUE(VerifyAllSubsets(cyc, ck).pass());
  auto broken = cyc;
  for (std::size_t c = 0; c < broken.T.cols(); ++c) broken.T(3, c) = 0;
  auto bad = VerifyAllSubsets(broken, ck);
  EXPECT_GT(bad.subsets_failed_count, 0u);
  EXPECT_FALSE(bad.pass());
}

TEST(VerifyAllSubsets, SamplingMode) {
  auto plan = BuildPlan(ParamsFromReplication(10, 4, 2), kQ, 0);
  auto keys = GenKeys(plan);
  VerifyOptions opt;
  opt.exhaustive_limit = 10;
  opt.samples = 300;
  opt.seed = 4;
  auto r = VerifyAllSubsets(plan, keys, opt);
  EXPECT_TRUE(r.sampled);
  EXPECT_EQ(r.subsets_checked, 300u);
  EXPECT_EQ(ToJson(r)["mode"], "sampled");
  EXPECT_EQ(ToJson(r).dump(), ToJson(VerifyAllSubsets(plan, keys, opt)).dump());
}

// Decodability and ordering over every construction with N <= 14. Plans
// without a scheme 3 level decode everywhere and respect
// converse <= chain bound <= achieved <= cyclic. A chain bound above the
// achieved eta can only happen when some pattern fails, which is what the
// converse argument predicts.
TEST(VerifyAllSubsets, InvariantsUpTo14) {
  int clean = 0;
  for (int N = 1; N <= 14; ++N)
    for (int M = 1; M <= N; ++M)
      for (int m = 1; m <= std::min(M, 3); ++m) {
        SCOPED_TRACE(testing::Message() << N << "," << M << "," << m);
        auto plan = BuildPlan(ParamsFromReplication(N, M, m), kQ, 1);
        auto r = VerifyAllSubsets(plan, GenKeys(plan));
        ASSERT_TRUE(r.cost_optimal());
        ASSERT_TRUE(r.security.pass());
        ASSERT_LE(r.converse_closed, r.eta_achieved);
        ASSERT_LE(r.eta_achieved, r.eta_cyclic);
        if (r.chain.exhaustive) ASSERT_LE(r.converse_closed, r.chain_bound);
        if (r.chain_bound > r.eta_achieved) ASSERT_FALSE(r.decodable());
        if (!UsesScheme3(plan)) {
          ASSERT_TRUE(r.decodable());
          ASSERT_LE(r.chain_bound, r.eta_achieved);
          ++clean;
        }
      }
  EXPECT_GT(clean, 200);
}

TEST(MeasureCost, Examples) {
  EXPECT_EQ(MeasureCost(BuildPlan(DeriveParams(12, 12, 7, 2), kQ, 0)),
            Rational(7, 2));
  EXPECT_EQ(MeasureCost(CyclicPlan(ParamsFromReplication(7, 3, 1), kQ, 0)),
            Rational(5));
  EXPECT_EQ(MeasureCost(BuildPlan(ParamsFromReplication(4, 4, 3), kQ, 0)),
            Rational(1));
}

TEST(Compare, ReportedValues) {
  auto ex = Compare(DeriveParams(12, 12, 7, 2), kQ, 0);
  EXPECT_EQ(ex.eta_achieved, Rational(2));
  EXPECT_EQ(ex.eta_cyclic, Rational(5, 2));
  EXPECT_EQ(ex.eta_converse, Rational(1));
  EXPECT_EQ(ex.h_value, 6);

  auto tight = Compare(ParamsFromReplication(24, 8, 2), kQ, 0);
  EXPECT_EQ(tight.eta_achieved, Rational(2));
  EXPECT_EQ(tight.eta_converse, Rational(2));
  ASSERT_TRUE(tight.eta_fracrep.has_value());
  EXPECT_EQ(*tight.eta_fracrep, Rational(2));

  auto fig = Compare(DeriveParams(24, 24, 16, 2), kQ, 0);
  EXPECT_EQ(fig.eta_converse, Rational(3, 2));
  EXPECT_EQ(fig.eta_cyclic, Rational(7));
  EXPECT_LE(fig.eta_converse, fig.eta_achieved);
  EXPECT_LE(fig.eta_achieved, fig.eta_cyclic);
  EXPECT_TRUE(fig.fallback_used);
}

TEST(Csv, HeaderAndRow) {
  EXPECT_EQ(CsvHeader(),
            "n,nr,m,mbig,h,eta_achieved_num,eta_achieved_den,eta_cyclic_num,"
            "eta_cyclic_den,eta_converse_num,eta_converse_den,fallback,"
            "verified");
  auto r = Compare(DeriveParams(12, 12, 7, 2), kQ, 0);
  EXPECT_EQ(CsvRow(r, "false"), "12,7,2,7,6,2,1,5,2,1,1,false,false");
}

TEST(ReportJson, Deterministic) {
  auto build = [] {
    auto plan = BuildPlan(DeriveParams(10, 10, 6, 2), kQ, 17);
    VerifyOptions opt;
    opt.seed = 17;
    return ToJson(VerifyAllSubsets(plan, GenKeys(plan), opt)).dump(2);
  };
  EXPECT_EQ(build(), build());
}

}  // namespace
}  // namespace sgc
