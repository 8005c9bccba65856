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

#include <cstdint>

#include "sgc/error.hpp"
#include "sgc/field.hpp"

namespace sgc {
namespace {

// Fermat inverse, independent of the extended-Euclid path in the library.
std::uint64_t PowOracle(std::uint64_t b, std::uint64_t e, std::uint64_t q) {
  std::uint64_t r = 1;
  b %= q;
  for (; e; e >>= 1, b = b * b % q)
    if (e & 1) r = r * b % q;
  return r;
}

TEST(Field, InverseExamples) {
  EXPECT_EQ(PrimeField(5).inv(2), 3u);
  EXPECT_EQ(PrimeField(7).inv(1), 1u);
  EXPECT_EQ(PrimeField(65537).inv(4), PowOracle(4, 65535, 65537));
  EXPECT_EQ(PrimeField(65537).inv(4), 49153u);
}

TEST(Field, ZeroInverseThrows) {
  PrimeField f(65537);
  try {
    f.inv(0);
    FAIL() << "expected throw";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kZeroInverse);
  }
}

TEST(Field, RejectsBadModulus) {
  for (std::uint32_t q : {0u, 1u, 2u, 4u, 9u, 65535u}) {
    EXPECT_THROW(PrimeField{q}, Error) << q;
  }
  EXPECT_NO_THROW(PrimeField{3});
  EXPECT_NO_THROW(PrimeField{2147483647u});
}

TEST(Field, AxiomsHoldOnRandomSamples) {
  for (std::uint32_t q : {3u, 65537u, 2147483647u}) {
    PrimeField f(q);
    Rng rng(q);
    for (int i = 0; i < 10000; ++i) {
      Elem a = rng.uniform(f), b = rng.uniform(f), c = rng.uniform(f);
      ASSERT_EQ(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
      ASSERT_EQ(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
      ASSERT_EQ(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
      ASSERT_EQ(f.add(a, f.neg(a)), 0u);
      ASSERT_EQ(f.sub(a, b), f.add(a, f.neg(b)));
      if (a != 0) {
        ASSERT_EQ(f.mul(a, f.inv(a)), 1u);
        ASSERT_EQ(f.inv(a), PowOracle(a, q - 2, q));
      }
    }
  }
}

TEST(Field, FractionsAndSignedMapping) {
  PrimeField f(65537);
  EXPECT_EQ(f.mul(f.from_fraction(11, 4), 4), 11u);
  EXPECT_EQ(f.from_int(-1), 65536u);
  EXPECT_EQ(f.to_signed(f.from_int(-5)), -5);
  EXPECT_EQ(f.from_fraction(-3, 2), f.neg(f.from_fraction(3, 2)));
}

TEST(Rng, SameSeedSameStream) {
  Rng a(42), b(42);
  for (int i = 0; i < 100; ++i) ASSERT_EQ(a.next(), b.next());
  PrimeField f(3);
  Rng c(1);
  for (int i = 0; i < 1000; ++i) ASSERT_NE(c.nonzero(f), 0u);
}

TEST(Rng, ForkedStreamsDiffer) {
  Rng a(7), b(7);
  Rng x = a.fork(1), y = b.fork(2);
  EXPECT_NE(x.next(), y.next());
}

}  // namespace
}  // namespace sgc
