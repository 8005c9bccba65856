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

#include "sgc/field.hpp"
#include "sgc/kernels.hpp"

namespace sgc::kernels {
namespace {

// Primes chosen to cover the tiny field, the default, the largest modulus
// the vector path accepts and one that forces the scalar fallback.
const std::uint32_t kModuli[] = {3u, 65537u, 67108859u, 2147483647u};

std::vector<Elem> RandomVec(std::size_t n, const PrimeField& f, Rng& rng) {
  std::vector<Elem> v(n);
  for (auto& x : v) x = rng.uniform(f);
  return v;
}

class KernelEquivalence : public ::testing::Test {
 protected:
  void SetUp() override {
    if (Avx2Table() == nullptr) GTEST_SKIP() << "AVX2 not available";
  }
};

TEST_F(KernelEquivalence, AxpyMatchesScalar) {
  for (std::uint32_t q : kModuli) {
    PrimeField f(q);
    Rng rng(q ^ 0x51);
    for (std::size_t n = 0; n < 70; ++n) {
      auto src = RandomVec(n, f, rng);
      auto a = RandomVec(n, f, rng);
      auto b = a;
      Elem factor = rng.uniform(f);
      if (n % 7 == 0) factor = q - 1;
      ScalarTable().axpy(a, src, factor, q);
      Avx2Table()->axpy(b, src, factor, q);
      ASSERT_EQ(a, b) << "q=" << q << " n=" << n;
    }
  }
}

TEST_F(KernelEquivalence, ScaleMatchesScalar) {
  for (std::uint32_t q : kModuli) {
    PrimeField f(q);
    Rng rng(q ^ 0x52);
    for (std::size_t n = 0; n < 70; ++n) {
      auto a = RandomVec(n, f, rng);
      auto b = a;
      Elem factor = rng.uniform(f);
      ScalarTable().scale(a, factor, q);
      Avx2Table()->scale(b, factor, q);
      ASSERT_EQ(a, b) << "q=" << q << " n=" << n;
    }
  }
}

TEST_F(KernelEquivalence, DotMatchesScalar) {
  for (std::uint32_t q : kModuli) {
    PrimeField f(q);
    Rng rng(q ^ 0x53);
    for (std::size_t n : {0u, 1u, 3u, 4u, 5u, 8u, 31u, 64u, 1000u, 4099u}) {
      auto a = RandomVec(n, f, rng);
      auto b = RandomVec(n, f, rng);
      ASSERT_EQ(ScalarTable().dot(a, b, q), Avx2Table()->dot(a, b, q))
          << "q=" << q << " n=" << n;
    }
  }
}

TEST_F(KernelEquivalence, ExtremeValues) {
  for (std::uint32_t q : kModuli) {
    std::vector<Elem> a(37, q - 1), b(37, q - 1), src(37, q - 1);
    auto c = a;
    ScalarTable().axpy(a, src, q - 1, q);
    Avx2Table()->axpy(c, src, q - 1, q);
    EXPECT_EQ(a, c);
    EXPECT_EQ(ScalarTable().dot(b, src, q), Avx2Table()->dot(b, src, q));
  }
}

TEST(KernelScalar, ReferenceValues) {
  std::vector<Elem> d = {1, 2, 3, 4};
  std::vector<Elem> s = {4, 3, 2, 1};
  ScalarTable().axpy(d, s, 2, 5);
  EXPECT_EQ(d, (std::vector<Elem>{4, 3, 2, 1}));
  EXPECT_EQ(ScalarTable().dot(d, s, 7), (16 + 9 + 4 + 1) % 7u);
}

TEST(KernelDispatch, ActiveIsOneOfTheTables) {
  std::string name = Active().name;
  EXPECT_TRUE(name == "scalar" || name == "avx2");
}

}  // namespace
}  // namespace sgc::kernels
