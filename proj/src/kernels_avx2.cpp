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

// AVX2 variants of the mod-q row kernels.
//
// Four lanes of double precision hold residues exactly. With q < 2^26 the
// term dst + factor * src is below 2^53, so the fused multiply-add is exact;
// the quotient estimate floor(p / q) may be off by one in either direction
// and is corrected with two masked adds.

#include <cassert>

#include "sgc/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)
#define SGC_HAVE_X86 1
#include <immintrin.h>
#else
#define SGC_HAVE_X86 0
#endif

namespace sgc::kernels::avx2 {

#if SGC_HAVE_X86

namespace {

#define SGC_AVX2_TARGET __attribute__((target("avx2,fma")))

SGC_AVX2_TARGET inline __m256d ReduceLanes(__m256d p, __m256d vq,
                                           __m256d vqinv) {
  __m256d quot = _mm256_floor_pd(_mm256_mul_pd(p, vqinv));
  __m256d r = _mm256_fnmadd_pd(quot, vq, p);
  // r in [-q, 2q)
  __m256d neg = _mm256_cmp_pd(r, _mm256_setzero_pd(), _CMP_LT_OQ);
  r = _mm256_add_pd(r, _mm256_and_pd(neg, vq));
  __m256d over = _mm256_cmp_pd(r, vq, _CMP_GE_OQ);
  r = _mm256_sub_pd(r, _mm256_and_pd(over, vq));
  return r;
}

SGC_AVX2_TARGET inline __m256d Load4(const Elem* p) {
  return _mm256_cvtepi32_pd(
      _mm_loadu_si128(reinterpret_cast<const __m128i*>(p)));
}

SGC_AVX2_TARGET inline void Store4(Elem* p, __m256d v) {
  _mm_storeu_si128(reinterpret_cast<__m128i*>(p), _mm256_cvtpd_epi32(v));
}

SGC_AVX2_TARGET void AxpyImpl(std::span<Elem> dst, std::span<const Elem> src,
                              Elem factor, std::uint32_t q) {
  const __m256d vq = _mm256_set1_pd(static_cast<double>(q));
  const __m256d vqinv = _mm256_set1_pd(1.0 / static_cast<double>(q));
  const __m256d vf = _mm256_set1_pd(static_cast<double>(factor));
  const std::size_t n = dst.size();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d p = _mm256_fmadd_pd(Load4(src.data() + i), vf,
                                Load4(dst.data() + i));
    Store4(dst.data() + i, ReduceLanes(p, vq, vqinv));
  }
  if (i < n) {
    scalar::Axpy(dst.subspan(i), src.subspan(i), factor, q);
  }
}

SGC_AVX2_TARGET void ScaleImpl(std::span<Elem> v, Elem factor,
                               std::uint32_t q) {
  const __m256d vq = _mm256_set1_pd(static_cast<double>(q));
  const __m256d vqinv = _mm256_set1_pd(1.0 / static_cast<double>(q));
  const __m256d vf = _mm256_set1_pd(static_cast<double>(factor));
  const std::size_t n = v.size();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d p = _mm256_mul_pd(Load4(v.data() + i), vf);
    Store4(v.data() + i, ReduceLanes(p, vq, vqinv));
  }
  if (i < n) scalar::Scale(v.subspan(i), factor, q);
}

SGC_AVX2_TARGET Elem DotImpl(std::span<const Elem> a, std::span<const Elem> b,
                             std::uint32_t q) {
  const __m256d vq = _mm256_set1_pd(static_cast<double>(q));
  const __m256d vqinv = _mm256_set1_pd(1.0 / static_cast<double>(q));
  __m256d acc = _mm256_setzero_pd();
  const std::size_t n = a.size();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d p = _mm256_fmadd_pd(Load4(a.data() + i), Load4(b.data() + i), acc);
    acc = ReduceLanes(p, vq, vqinv);
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, acc);
  std::uint64_t total = 0;
  for (double lane : lanes) total += static_cast<std::uint64_t>(lane);
  total %= q;
  if (i < n) total = (total + scalar::Dot(a.subspan(i), b.subspan(i), q)) % q;
  return static_cast<Elem>(total);
}

}  // namespace

bool Supported() {
  static const bool ok =
      __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
  return ok;
}

void Axpy(std::span<Elem> dst, std::span<const Elem> src, Elem factor,
          std::uint32_t q) {
  assert(dst.size() == src.size());
  if (factor == 0) return;
  if (q >= kMaxModulus) return scalar::Axpy(dst, src, factor, q);
  AxpyImpl(dst, src, factor, q);
}

void Scale(std::span<Elem> v, Elem factor, std::uint32_t q) {
  if (q >= kMaxModulus) return scalar::Scale(v, factor, q);
  ScaleImpl(v, factor, q);
}

Elem Dot(std::span<const Elem> a, std::span<const Elem> b, std::uint32_t q) {
  assert(a.size() == b.size());
  if (q >= kMaxModulus) return scalar::Dot(a, b, q);
  return DotImpl(a, b, q);
}

#else  // !SGC_HAVE_X86

bool Supported() { return false; }
void Axpy(std::span<Elem> dst, std::span<const Elem> src, Elem factor,
          std::uint32_t q) {
  scalar::Axpy(dst, src, factor, q);
}
void Scale(std::span<Elem> v, Elem factor, std::uint32_t q) {
  scalar::Scale(v, factor, q);
}
Elem Dot(std::span<const Elem> a, std::span<const Elem> b, std::uint32_t q) {
  return scalar::Dot(a, b, q);
}

#endif

}  // namespace sgc::kernels::avx2
