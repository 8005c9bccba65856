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

#include <vector>

#include "sgc/error.hpp"
#include "sgc/matrix.hpp"
#include "oracle.hpp"

namespace sgc {
namespace {

// rows x cols matrix of rank at most k, as a product of random factors.
Matrix LowRank(std::size_t rows, std::size_t cols, std::size_t k,
               const PrimeField& f, Rng& rng) {
  return Multiply(f, Matrix::Random(rows, k, f, rng),
                  Matrix::Random(k, cols, f, rng));
}

TEST(Rank, TrivialCases) {
  PrimeField f;
  EXPECT_EQ(Rank(f, Matrix::Identity(5)), 5u);
  EXPECT_EQ(Rank(f, Matrix(4, 6)), 0u);
  EXPECT_EQ(Rank(f, Matrix()), 0u);
}

TEST(Rank, MatchesOracleAndTranspose) {
  for (std::uint32_t q : {3u, 65537u}) {
    PrimeField f(q);
    Rng rng(1000 + q);
    for (int trial = 0; trial < 200; ++trial) {
      std::size_t r = 1 + rng.below(32), c = 1 + rng.below(32);
      std::size_t k = rng.below(std::min(r, c) + 1);
      Matrix m = trial % 2 ? Matrix::Random(r, c, f, rng)
                           : LowRank(r, c, k, f, rng);
      std::size_t rk = Rank(f, m);
      ASSERT_EQ(rk, oracle::Rank(oracle::AsU64(m), q));
      ASSERT_EQ(rk, Rank(f, Transpose(m)));
      ASSERT_LE(rk, std::min(r, c));
    }
  }
}

TEST(LeftNullspace, IdentityHasEmptyBasis) {
  PrimeField f;
  EXPECT_EQ(LeftNullspace(f, Matrix::Identity(4)).rows(), 0u);
}

TEST(LeftNullspace, FullColumnRankTall) {
  PrimeField f;
  Rng rng(3);
  Matrix m = Matrix::Random(4, 2, f, rng);
  ASSERT_EQ(Rank(f, m), 2u);
  Matrix b = LeftNullspace(f, m);
  EXPECT_EQ(b.rows(), 2u);
  EXPECT_TRUE(Multiply(f, b, m).is_zero());
  EXPECT_EQ(Rank(f, b), 2u);
}

TEST(LeftNullspace, PropertyOnRandomMatrices) {
  for (std::uint32_t q : {3u, 65537u}) {
    PrimeField f(q);
    Rng rng(77 + q);
    for (int trial = 0; trial < 150; ++trial) {
      std::size_t r = 1 + rng.below(20), c = 1 + rng.below(20);
      Matrix m = LowRank(r, c, rng.below(std::min(r, c) + 1), f, rng);
      Matrix b = LeftNullspace(f, m);
      ASSERT_TRUE(b.empty() || Multiply(f, b, m).is_zero());
      ASSERT_EQ(b.rows() + Rank(f, m), m.rows());
      ASSERT_EQ(Rank(f, b), b.rows());
    }
  }
}

TEST(RightNullspace, AnnihilatesAndHasRightDimension) {
  PrimeField f;
  Rng rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    std::size_t r = 1 + rng.below(12), c = 1 + rng.below(12);
    Matrix m = LowRank(r, c, rng.below(std::min(r, c) + 1), f, rng);
    Matrix v = RightNullspace(f, m);
    ASSERT_EQ(v.rows() + Rank(f, m), c);
    if (!v.empty()) ASSERT_TRUE(Multiply(f, m, Transpose(v)).is_zero());
  }
}

TEST(SolveRowMembership, FirstRowGivesUnitVector) {
  PrimeField f;
  Rng rng(9);
  Matrix s = Matrix::Random(4, 7, f, rng);
  auto c = SolveRowMembership(f, s.row(0), s);
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ(*c, (Row{1, 0, 0, 0}));
}

TEST(SolveRowMembership, OutsideSpanIsAbsent) {
  PrimeField f;
  Row e1 = {1, 0, 0};
  EXPECT_FALSE(SolveRowMembership(f, e1, Matrix(2, 3)).has_value());
}

TEST(SolveRowMembership, DimensionMismatchThrows) {
  PrimeField f;
  Row t = {1, 0};
  try {
    SolveRowMembership(f, t, Matrix(2, 3));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDimensionMismatch);
  }
}

TEST(SolveRowMembership, RandomCombinationsRoundTrip) {
  PrimeField f(3);
  Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    Matrix s = LowRank(1 + rng.below(8), 1 + rng.below(10), 3, f, rng);
    Row c(s.rows());
    for (auto& x : c) x = rng.uniform(f);
    Row target = MultiplyRow(f, c, s);
    auto got = SolveRowMembership(f, target, s);
    ASSERT_TRUE(got.has_value());
    ASSERT_EQ(MultiplyRow(f, *got, s), target);
    RowSpaceSolver solver(f, s, false);
    ASSERT_TRUE(solver.Contains(target));
    ASSERT_EQ(Rank(f, s) == Rank(f, VStack(s, Matrix::FromRows({target}))),
              true);
  }
}

TEST(RowSpace, ContainmentAndEquality) {
  PrimeField f;
  Rng rng(13);
  Matrix a = Matrix::Random(3, 6, f, rng);
  Matrix mix = Matrix::Random(3, 3, f, rng);
  ASSERT_EQ(Rank(f, mix), 3u);
  EXPECT_TRUE(SameRowSpace(f, a, Multiply(f, mix, a)));
  Matrix b = Matrix::Random(1, 6, f, rng);
  EXPECT_TRUE(RowSpaceContains(f, VStack(a, b), a));
  EXPECT_FALSE(RowSpaceContains(f, a, b));
}

TEST(Matrix, StackingAndSelection) {
  Matrix a = Matrix::FromRows({{1, 2, 3}, {4, 5, 6}});
  std::vector<std::size_t> cols = {2, 0};
  EXPECT_EQ(SelectCols(a, cols), Matrix::FromRows({{3, 1}, {6, 4}}));
  std::vector<std::size_t> rows = {1};
  EXPECT_EQ(SelectRows(a, rows), Matrix::FromRows({{4, 5, 6}}));
  EXPECT_EQ(HStack(a, a).cols(), 6u);
  EXPECT_EQ(VStack(a, a).rows(), 4u);
  EXPECT_EQ(Transpose(Transpose(a)), a);
  EXPECT_THROW(Matrix(0, 2).append_row(Row{1, 2, 3}), Error);
}

}  // namespace
}  // namespace sgc
