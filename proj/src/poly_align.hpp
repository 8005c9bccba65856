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

#ifndef SGC_SRC_POLY_ALIGN_HPP_
#define SGC_SRC_POLY_ALIGN_HPP_

// Polynomial alignment shared by the cyclic code and the third alignment
// strategy.
//
// Server n evaluates at alpha_n and sends s_n = (alpha^{v+m-1}, ...,
// alpha^v, 1, alpha, ..., alpha^{v-1}) applied to [D; V]. The transmission
// coefficient on column (d, j) is then the polynomial
//   P_{d,j}(x) = x^{v+m-1-j} + sum_l V_l(d, j) x^l,
// so choosing P_{d,j} = prod_{n misses d} (x - alpha_n) * Q(x), with Q
// fixed by the zero pattern between degrees v and v+m-2-j, cancels every
// dataset a server does not hold.

#include <vector>

#include "sgc/field.hpp"
#include "sgc/matrix.hpp"

namespace sgc::detail {

inline Row PowerVector(const PrimeField& f, Elem alpha, int m, int v) {
  Row s;
  s.reserve(static_cast<std::size_t>(m + v));
  for (int j = 0; j < m; ++j) s.push_back(f.pow(alpha, v + m - 1 - j));
  for (int l = 0; l < v; ++l) s.push_back(f.pow(alpha, l));
  return s;
}

// Low coefficients V_0..V_{v-1} for sub-message j of a dataset whose
// transmission coefficient must vanish at `roots` (exactly v of them).
inline std::vector<Elem> AlignedCoefficients(const PrimeField& f,
                                             const std::vector<Elem>& roots,
                                             int m, int j) {
  const int v = static_cast<int>(roots.size());
  std::vector<Elem> r(1, 1);  // monic product, low degree first
  for (Elem a : roots) {
    std::vector<Elem> next(r.size() + 1, 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
      next[i + 1] = f.add(next[i + 1], r[i]);
      next[i] = f.sub(next[i], f.mul(a, r[i]));
    }
    r = std::move(next);
  }
  const int dq = m - 1 - j;
  std::vector<Elem> qp(static_cast<std::size_t>(dq + 1), 0);
  qp[dq] = 1;
  for (int k = dq - 1; k >= 0; --k) {
    Elem acc = 0;
    for (int a = k + 1; a <= dq; ++a) {
      int e = v + k - a;
      if (e >= 0) acc = f.add(acc, f.mul(qp[a], r[e]));
    }
    qp[k] = f.neg(acc);
  }
  std::vector<Elem> low(static_cast<std::size_t>(v), 0);
  for (int a = 0; a <= dq; ++a)
    for (int e = 0; e <= v; ++e)
      if (a + e < v) low[a + e] = f.add(low[a + e], f.mul(qp[a], r[e]));
  return low;
}

}  // namespace sgc::detail

#endif  // SGC_SRC_POLY_ALIGN_HPP_
