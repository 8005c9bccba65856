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
#include <numeric>
#include <set>
#include <tuple>
#include <vector>

#include "sgc/error.hpp"
#include "sgc/instance.hpp"

namespace sgc {
namespace {

using Zone = std::vector<int>;

// 1-based literal to the 0-based sorted zone used internally.
Zone Z(std::initializer_list<int> one_based) {
  Zone z;
  for (int d : one_based) z.push_back(d - 1);
  std::sort(z.begin(), z.end());
  return z;
}

std::vector<int> Multiplicities(const Assignment& a, int K) {
  std::vector<int> cnt(K, 0);
  for (const auto& z : a.zones)
    for (int d : z) ++cnt[d];
  return cnt;
}

TEST(DeriveParams, Examples) {
  EXPECT_EQ(DeriveParams(12, 12, 7, 2).M, 7);
  EXPECT_EQ(DeriveParams(4, 4, 4, 1).M, 1);
  EXPECT_EQ(DeriveParams(24, 24, 16, 2).M, 10);
}

TEST(DeriveParams, RejectsInvalid) {
  auto code_of = [](auto fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::kIo;
  };
  EXPECT_EQ(code_of([] { DeriveParams(5, 5, 6, 1); }),
            ErrorCode::kInvalidParams);
  EXPECT_EQ(code_of([] { DeriveParams(4, 4, 1, 2); }),
            ErrorCode::kInvalidParams);
  EXPECT_EQ(code_of([] { DeriveParams(6, 4, 3, 1); }),
            ErrorCode::kInvalidParams);
  EXPECT_EQ(code_of([] { DeriveParams(4, 4, 3, 0); }),
            ErrorCode::kInvalidParams);
}

TEST(CyclicAssignment, AllHoldAllWhenNEqualsM) {
  auto a = CyclicAssignment(5, 5);
  for (const auto& z : a.zones) EXPECT_EQ(z, Z({1, 2, 3, 4, 5}));
}

TEST(CyclicAssignment, MatchesTheLastFiveColumnsOfTheWorkedTable) {
  // Datasets 8..12 over servers 8..12, three consecutive with wrap-around.
  auto a = CyclicAssignment(5, 3);
  auto shift = [](const Zone& z) {
    std::set<int> s;
    for (int d : z) s.insert(d + 8);
    return s;
  };
  EXPECT_EQ(shift(a.zones[0]), (std::set<int>{8, 9, 10}));
  EXPECT_EQ(shift(a.zones[4]), (std::set<int>{12, 8, 9}));
}

TEST(CyclicAssignment, EachDatasetHasMultiplicityM) {
  auto a = CyclicAssignment(5, 2);
  EXPECT_EQ(Multiplicities(a, 5), std::vector<int>(5, 2));
  EXPECT_TRUE(ValidateAssignment(a, ParamsFromReplication(5, 2, 1)).pass);
}

TEST(FractionalRepetition, SmallBlocks) {
  auto a = FractionalRepetitionAssignment(4, 2);
  std::vector<Zone> want = {Z({1, 2}), Z({1, 2}), Z({3, 4}), Z({3, 4})};
  EXPECT_EQ(a.zones, want);
}

TEST(FractionalRepetition, SingleBlockAndMultiplicity) {
  auto a = FractionalRepetitionAssignment(6, 6);
  for (const auto& z : a.zones) EXPECT_EQ(z.size(), 6u);
  auto b = FractionalRepetitionAssignment(24, 8);
  EXPECT_EQ(Multiplicities(b, 24), std::vector<int>(24, 8));
  EXPECT_THROW(FractionalRepetitionAssignment(24, 7), Error);
}

TEST(CombinedAssignment, WorkedExampleTable) {
  auto a = CombinedAssignment(DeriveParams(12, 12, 7, 2));
  ASSERT_EQ(a.zones.size(), 12u);
  std::vector<Zone> want = {
      Z({1, 2, 3, 4, 5, 6, 7}),      Z({1, 2, 3, 4, 5, 6, 7}),
      Z({1, 2, 3, 8, 9, 10, 11}),    Z({1, 2, 3, 9, 10, 11, 12}),
      Z({1, 2, 3, 10, 11, 12, 8}),   Z({1, 2, 3, 11, 12, 8, 9}),
      Z({1, 2, 3, 12, 8, 9, 10}),    Z({4, 5, 6, 7, 8, 9, 10}),
      Z({4, 5, 6, 7, 9, 10, 11}),    Z({4, 5, 6, 7, 10, 11, 12}),
      Z({4, 5, 6, 7, 11, 12, 8}),    Z({4, 5, 6, 7, 12, 8, 9}),
  };
  EXPECT_EQ(a.zones, want);
}

TEST(CombinedAssignment, DivisibleCaseEqualsFractionalRepetition) {
  for (auto [n, mb] : {std::pair{24, 8}, {24, 12}, {20, 5}, {6, 3}, {9, 9}}) {
    for (int m = 1; m <= std::min(mb, 3); ++m) {
      EXPECT_EQ(CombinedAssignment(n, mb, m),
                FractionalRepetitionAssignment(n, mb))
          << n << "," << mb << "," << m;
    }
  }
}

TEST(CombinedAssignment, SchemeTwoInstanceIsValid) {
  EXPECT_EQ(SelectBranch(6, 4, 2), Branch::kScheme2);
  auto p = DeriveParams(6, 6, 4, 2);
  auto r = ValidateAssignment(CombinedAssignment(p), p);
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.multiplicity, std::vector<int>(6, 4));
}

TEST(CombinedAssignment, EveryConstructionIsValidUpToThirty) {
  for (int n = 1; n <= 30; ++n)
    for (int mb = 1; mb <= n; ++mb)
      for (int m = 1; m <= mb; ++m) {
        auto p = ParamsFromReplication(n, mb, m);
        auto r = ValidateAssignment(CombinedAssignment(p), p);
        ASSERT_TRUE(r.pass) << n << "," << mb << "," << m << ": "
                            << (r.problems.empty() ? "" : r.problems[0]);
      }
}

TEST(CombinedAssignment, SchemeThreeStructure) {
  // Servers [0,y) hold [0,M); servers y+i hold [0,t) plus t+1 cyclically
  // consecutive datasets of [M,N); servers M+i hold [t,M) plus t of them.
  for (auto [n, mb, m] : {std::tuple{12, 7, 2}, {11, 7, 3}, {14, 9, 2},
                          {17, 11, 3}, {15, 9, 1}}) {
    ASSERT_EQ(SelectBranch(n, mb, m), Branch::kScheme3);
    auto a = CombinedAssignment(n, mb, m);
    int y = 2 * mb - n, t = (mb - 1) / 2, p = n - mb;
    for (int s = 0; s < y; ++s) {
      Zone want(mb);
      std::iota(want.begin(), want.end(), 0);
      EXPECT_EQ(a.zones[s], want);
    }
    for (int i = 0; i < p; ++i) {
      std::set<int> g2(a.zones[y + i].begin(), a.zones[y + i].end());
      std::set<int> g3(a.zones[mb + i].begin(), a.zones[mb + i].end());
      for (int d = 0; d < t; ++d) EXPECT_TRUE(g2.count(d));
      for (int r = 0; r <= t; ++r) EXPECT_TRUE(g2.count(mb + (i + r) % p));
      for (int d = t; d < mb; ++d) EXPECT_TRUE(g3.count(d));
      for (int r = 0; r < t; ++r) EXPECT_TRUE(g3.count(mb + (i + r) % p));
    }
  }
}

TEST(SelectBranch, CaseConditions) {
  EXPECT_EQ(SelectBranch(5, 5, 2), Branch::kAllHoldAll);
  EXPECT_EQ(SelectBranch(24, 8, 2), Branch::kFracRep);
  EXPECT_EQ(SelectBranch(24, 10, 2), Branch::kScheme1);
  EXPECT_EQ(SelectBranch(14, 10, 2), Branch::kScheme4);
  EXPECT_EQ(SelectBranch(10, 6, 2), Branch::kScheme2);
  EXPECT_EQ(SelectBranch(4, 3, 2), Branch::kCyclicFallback);
  EXPECT_EQ(SelectBranch(4, 3, 1), Branch::kScheme4);
  EXPECT_EQ(SelectBranch(6, 4, 1), Branch::kScheme2);
  EXPECT_EQ(SelectBranch(12, 7, 2), Branch::kScheme3);
  EXPECT_EQ(SelectBranch(12, 7, 4), Branch::kCyclicFallback);
}

TEST(GroupDatasets, Examples) {
  auto id = GroupDatasets(4, 4);
  for (int i = 0; i < 4; ++i) EXPECT_EQ(id[i], std::vector<int>{i});
  auto g = GroupDatasets(8, 4);
  EXPECT_EQ(g[0], (std::vector<int>{0, 4}));
  EXPECT_EQ(g[3], (std::vector<int>{3, 7}));
  EXPECT_THROW(GroupDatasets(9, 4), Error);
}

TEST(GroupDatasets, GroupsPartitionTheDatasets) {
  for (int n = 1; n <= 8; ++n)
    for (int mult = 1; mult <= 4; ++mult) {
      auto g = GroupDatasets(n * mult, n);
      std::vector<int> seen(n * mult, 0);
      for (const auto& grp : g) {
        EXPECT_EQ(static_cast<int>(grp.size()), mult);
        for (int k : grp) ++seen[k];
      }
      EXPECT_EQ(seen, std::vector<int>(n * mult, 1));
    }
}

TEST(ValidateAssignment, BrokenZoneNamesTheDataset) {
  auto p = DeriveParams(12, 12, 7, 2);
  auto a = CombinedAssignment(p);
  EXPECT_TRUE(ValidateAssignment(a, p).pass);
  a.zones[0].pop_back();  // drops dataset 7 from server 1
  auto r = ValidateAssignment(a, p);
  EXPECT_FALSE(r.pass);
  EXPECT_EQ(r.multiplicity[6], 6);
  bool named = false;
  for (const auto& s : r.problems) named |= s == "dataset 7 appears 6 times";
  EXPECT_TRUE(named);
}

TEST(AssignmentJson, RoundTripsWithOneBasedIndices) {
  auto a = CombinedAssignment(12, 7, 2);
  auto j = ToJson(a);
  EXPECT_EQ(j["n"], 12);
  EXPECT_EQ(j["m_big"], 7);
  EXPECT_EQ(j["zones"][0][0], 1);
  EXPECT_EQ(AssignmentFromJson(j), a);
}

}  // namespace
}  // namespace sgc
