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

#include <cstdlib>
#include <string_view>

#include "sgc/kernels.hpp"

namespace sgc::kernels {

const KernelTable& ScalarTable() {
  static const KernelTable table{"scalar", &scalar::Axpy, &scalar::Scale,
                                 &scalar::Dot};
  return table;
}

const KernelTable* Avx2Table() {
  static const KernelTable table{"avx2", &avx2::Axpy, &avx2::Scale,
                                 &avx2::Dot};
  return avx2::Supported() ? &table : nullptr;
}

const KernelTable& Active() {
  static const KernelTable& chosen = []() -> const KernelTable& {
    const char* env = std::getenv("SGC_KERNELS");
    if (env != nullptr && std::string_view(env) == "scalar") {
      return ScalarTable();
    }
    if (const KernelTable* t = Avx2Table()) return *t;
    return ScalarTable();
  }();
  return chosen;
}

}  // namespace sgc::kernels
