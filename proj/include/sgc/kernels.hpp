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

#ifndef SGC_KERNELS_HPP_
#define SGC_KERNELS_HPP_

// Row kernels for mod-q vector arithmetic. Every kernel has a scalar
// reference implementation; SIMD variants must produce bit-identical output
// and are selected once at startup from the CPU feature set.
//
// Set SGC_KERNELS=scalar in the environment to force the reference path.

#include <cstdint>
#include <span>

#include "sgc/field.hpp"

namespace sgc::kernels {

// dst[i] <- (dst[i] + factor * src[i]) mod q. Inputs must be reduced.
using AxpyFn = void (*)(std::span<Elem> dst, std::span<const Elem> src,
                        Elem factor, std::uint32_t q);
// v[i] <- factor * v[i] mod q.
using ScaleFn = void (*)(std::span<Elem> v, Elem factor, std::uint32_t q);
// sum_i a[i] * b[i] mod q.
using DotFn = Elem (*)(std::span<const Elem> a, std::span<const Elem> b,
                       std::uint32_t q);

struct KernelTable {
  const char* name;
  AxpyFn axpy;
  ScaleFn scale;
  DotFn dot;
};

namespace scalar {
void Axpy(std::span<Elem> dst, std::span<const Elem> src, Elem factor,
          std::uint32_t q);
void Scale(std::span<Elem> v, Elem factor, std::uint32_t q);
Elem Dot(std::span<const Elem> a, std::span<const Elem> b, std::uint32_t q);
}  // namespace scalar

namespace avx2 {
// The vector path works in double precision and needs q < 2^26 so that
// products stay exact; larger moduli fall through to the scalar kernels.
inline constexpr std::uint32_t kMaxModulus = 1u << 26;

// True when compiled for x86-64 and the running CPU has AVX2 and FMA.
bool Supported();
void Axpy(std::span<Elem> dst, std::span<const Elem> src, Elem factor,
          std::uint32_t q);
void Scale(std::span<Elem> v, Elem factor, std::uint32_t q);
Elem Dot(std::span<const Elem> a, std::span<const Elem> b, std::uint32_t q);
}  // namespace avx2

const KernelTable& ScalarTable();
// nullptr when the AVX2 variant is unavailable on this build or CPU.
const KernelTable* Avx2Table();
// The table used by the linear algebra layer.
const KernelTable& Active();

}  // namespace sgc::kernels

#endif  // SGC_KERNELS_HPP_
