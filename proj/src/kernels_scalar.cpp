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

#include <cassert>

#include "sgc/kernels.hpp"

namespace sgc::kernels::scalar {

void Axpy(std::span<Elem> dst, std::span<const Elem> src, Elem factor,
          std::uint32_t q) {
  assert(dst.size() == src.size());
  if (factor == 0) return;
  for (std::size_t i = 0; i < dst.size(); ++i) {
    dst[i] = static_cast<Elem>(
        (dst[i] + static_cast<std::uint64_t>(factor) * src[i]) % q);
  }
}

void Scale(std::span<Elem> v, Elem factor, std::uint32_t q) {
  for (auto& x : v) {
    x = static_cast<Elem>(static_cast<std::uint64_t>(factor) * x % q);
  }
}

Elem Dot(std::span<const Elem> a, std::span<const Elem> b, std::uint32_t q) {
  assert(a.size() == b.size());
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    acc = (acc + static_cast<std::uint64_t>(a[i]) * b[i]) % q;
  }
  return static_cast<Elem>(acc);
}

}  // namespace sgc::kernels::scalar
