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

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>

#include "poly_align.hpp"
#include "sgc/codegen.hpp"
#include "sgc/error.hpp"

namespace sgc {

namespace {

// Larger groups skip the any-subset independence check.
constexpr std::uint64_t kMdsCheckLimit = 20000;

Row RandomCombination(const PrimeField& f, const Matrix& basis, Rng& rng) {
  Row c(basis.rows());
  for (auto& x : c) x = rng.nonzero(f);
  return MultiplyRow(f, c, basis);
}

bool IsZero(const Row& r) {
  return std::all_of(r.begin(), r.end(), [](Elem x) { return x == 0; });
}

// s_n as a random element of the left null space of each server's missing
// columns; nullopt if some server has none.
std::optional<Matrix> ServerVectors(const PrimeField& f, const Matrix& rows,
                                    const IAProblem& prob, Rng& rng) {
  Matrix S(0, rows.rows());
  for (const auto& miss : prob.missing) {
    Matrix basis = LeftNullspace(f, SelectCols(rows, miss));
    if (basis.empty()) return std::nullopt;
    Row s = RandomCombination(f, basis, rng);
    if (IsZero(s)) return std::nullopt;
    S.append_row(s);
  }
  return S;
}

bool AnySubsetIndependent(const PrimeField& f, const Matrix& S,
                          std::size_t r) {
  const std::size_t n = S.rows();
  if (n < r || Binomial(static_cast<int>(n), static_cast<int>(r)) > kMdsCheckLimit) return true;
  std::vector<std::size_t> idx(r);
  for (std::size_t i = 0; i < r; ++i) idx[i] = i;
  while (true) {
    if (Rank(f, SelectRows(S, idx)) != r) return false;
    std::size_t i = r;
    while (i > 0 && idx[i - 1] == n - r + i - 1) --i;
    if (i == 0) return true;
    ++idx[i - 1];
    for (std::size_t k = i; k < r; ++k) idx[k] = idx[k - 1] + 1;
  }
}

std::optional<IASolution> TryDirect(const PrimeField& f,
                                    const IAProblem& prob, Rng& rng) {
  IASolution sol;
  sol.strategy = IAStrategy::kDirect;
  sol.rows = VStack(prob.fixed, Matrix::Random(prob.free_rows,
                                               prob.fixed.cols(), f, rng));
  auto S = ServerVectors(f, sol.rows, prob, rng);
  if (!S) return std::nullopt;
  sol.S = std::move(*S);
  return sol;
}

enum class AlignOutcome { kOk, kRetry, kInfeasible };

AlignOutcome TryAlignment(const PrimeField& f, const IAProblem& prob,
                          Rng& rng, IASolution& sol) {
  const std::size_t cols = prob.fixed.cols();
  const std::size_t total = prob.fixed.rows() + prob.free_rows;
  sol = IASolution{};
  sol.strategy = IAStrategy::kAlignment;
  sol.E = Matrix(0, cols);
  for (std::size_t n = 0; n < prob.missing.size(); ++n) {
    const auto& miss = prob.missing[n];
    // Each server needs its missing-column block to lose enough rank that a
    // left null vector survives: |miss| - (total - 1) alignment directions.
    long need = static_cast<long>(miss.size()) - static_cast<long>(total) + 1;
    if (need <= 0) continue;
    Matrix kernel = RightNullspace(f, SelectCols(prob.fixed, miss));
    if (static_cast<long>(kernel.rows()) < need) {
      return AlignOutcome::kInfeasible;
    }
    for (long e = 0; e < need; ++e) {
      Row local = RandomCombination(f, kernel, rng);
      Row full(cols, 0);
      for (std::size_t i = 0; i < miss.size(); ++i) full[miss[i]] = local[i];
      sol.E.append_row(full);
      sol.e_owner.push_back(static_cast<int>(n));
    }
  }
  if (sol.E.empty()) return AlignOutcome::kRetry;  // nothing to align
  Matrix allowed = LeftNullspace(f, Transpose(sol.E));
  if (allowed.rows() < total) return AlignOutcome::kInfeasible;
  Matrix mix = Matrix::Random(prob.free_rows, allowed.rows(), f, rng);
  sol.rows = VStack(prob.fixed, Multiply(f, mix, allowed));
  if (Rank(f, sol.rows) != total) return AlignOutcome::kRetry;
  auto S = ServerVectors(f, sol.rows, prob, rng);
  if (!S) return AlignOutcome::kRetry;
  sol.S = std::move(*S);
  return AlignOutcome::kOk;
}

// Structural preconditions of the polynomial strategy.
bool PolynomialApplies(const IAProblem& prob, int& m_out) {
  const std::size_t cols = prob.fixed.cols();
  if (prob.col_dataset.size() != cols || prob.col_part.size() != cols) {
    return false;
  }
  const int m = static_cast<int>(prob.fixed.rows());
  for (int j = 0; j < m; ++j)
    for (std::size_t c = 0; c < cols; ++c)
      if (prob.fixed(j, c) != (prob.col_part[c] == j ? 1u : 0u)) return false;
  m_out = m;
  return true;
}

std::optional<IASolution> TryPolynomial(const PrimeField& f,
                                        const IAProblem& prob, Rng& rng) {
  int m = 0;
  if (!PolynomialApplies(prob, m)) return std::nullopt;
  const int v = prob.free_rows;
  const std::size_t servers = prob.missing.size();
  const std::size_t cols = prob.fixed.cols();
  if (f.modulus() <= servers + static_cast<std::size_t>(v)) return std::nullopt;

  std::set<Elem> used;
  std::vector<Elem> alpha;
  while (alpha.size() < servers) {
    Elem a = rng.uniform(f);
    if (used.insert(a).second) alpha.push_back(a);
  }
  // Roots per dataset: the points of every server missing any of its columns.
  std::map<int, std::set<std::size_t>> missing_from;
  for (std::size_t n = 0; n < servers; ++n)
    for (std::size_t c : prob.missing[n])
      missing_from[prob.col_dataset[c]].insert(n);
  std::map<int, std::vector<Elem>> roots;
  for (std::size_t c = 0; c < cols; ++c) {
    int d = prob.col_dataset[c];
    if (roots.count(d)) continue;
    std::vector<Elem> r;
    for (std::size_t n : missing_from[d]) r.push_back(alpha[n]);
    if (static_cast<int>(r.size()) > v) return std::nullopt;
    while (static_cast<int>(r.size()) < v) {
      Elem a = rng.uniform(f);
      if (used.insert(a).second) r.push_back(a);
    }
    roots[d] = std::move(r);
  }

  IASolution sol;
  sol.strategy = IAStrategy::kPolynomial;
  Matrix V(static_cast<std::size_t>(v), cols);
  for (std::size_t c = 0; c < cols; ++c) {
    auto low = detail::AlignedCoefficients(f, roots[prob.col_dataset[c]], m,
                                           prob.col_part[c]);
    for (int l = 0; l < v; ++l) V(l, c) = low[l];
  }
  sol.rows = VStack(prob.fixed, V);
  sol.S = Matrix(0, static_cast<std::size_t>(m + v));
  for (Elem a : alpha) sol.S.append_row(detail::PowerVector(f, a, m, v));
  return sol;
}

}  // namespace

std::string_view IAStrategyName(IAStrategy s) {
  switch (s) {
    case IAStrategy::kDirect: return "direct";
    case IAStrategy::kAlignment: return "alignment";
    case IAStrategy::kPolynomial: return "polynomial";
  }
  return "unknown";
}

std::string CheckIASolution(const PrimeField& f, const IAProblem& prob,
                            const IASolution& sol, bool require_mds) {
  const std::size_t total = prob.fixed.rows() + prob.free_rows;
  if (sol.rows.rows() != total || sol.rows.cols() != prob.fixed.cols()) {
    return "completed template has the wrong shape";
  }
  for (std::size_t i = 0; i < prob.fixed.rows(); ++i) {
    if (!std::equal(prob.fixed.row(i).begin(), prob.fixed.row(i).end(),
                    sol.rows.row(i).begin())) {
      return "fixed row " + std::to_string(i + 1) + " was altered";
    }
  }
  if (Rank(f, sol.rows) != total) return "completed template is rank deficient";
  if (!sol.E.empty() && !Multiply(f, sol.rows, Transpose(sol.E)).is_zero()) {
    return "template times E^T is not zero";
  }
  if (sol.S.rows() != prob.missing.size()) return "one s_n per server expected";
  for (std::size_t n = 0; n < prob.missing.size(); ++n) {
    Row s = sol.S.row_copy(n);
    if (IsZero(s)) return "s_" + std::to_string(n + 1) + " is zero";
    Row out = MultiplyRow(f, s, SelectCols(sol.rows, prob.missing[n]));
    if (!IsZero(out)) {
      return "s_" + std::to_string(n + 1) +
             " does not annihilate its missing columns";
    }
  }
  if (require_mds && !AnySubsetIndependent(f, sol.S, total)) {
    return "some " + std::to_string(total) + " of the s_n are dependent";
  }
  return {};
}

IASolution IaSolve(const PrimeField& f, const IAProblem& prob, Rng& rng,
                   const IAOptions& opt) {
  const std::size_t cols = prob.fixed.cols();
  for (const auto& miss : prob.missing)
    for (std::size_t c : miss)
      if (c >= cols) {
        throw Error(ErrorCode::kDimensionMismatch,
                    "missing column outside the template");
      }
  auto accept = [&](const IASolution& s) {
    return CheckIASolution(f, prob, s, opt.require_mds).empty();
  };

  for (int attempt = 0; attempt < opt.max_retries; ++attempt) {
    auto sol = TryDirect(f, prob, rng);
    if (!sol) break;  // generic failure: more draws will not help
    if (accept(*sol)) return *sol;
  }
  std::string why = "per-server alignment found no solution";
  for (int attempt = 0; attempt < opt.max_retries; ++attempt) {
    IASolution sol;
    AlignOutcome out = TryAlignment(f, prob, rng, sol);
    if (out == AlignOutcome::kInfeasible) {
      why = "alignment null space too small for the free rows";
      break;
    }
    if (out == AlignOutcome::kOk && accept(sol)) return sol;
  }
  if (opt.allow_polynomial) {
    for (int attempt = 0; attempt < opt.max_retries; ++attempt) {
      auto sol = TryPolynomial(f, prob, rng);
      if (!sol) break;
      if (accept(*sol)) return *sol;
    }
  }
  throw Error(ErrorCode::kIAInfeasible,
              why + " after " + std::to_string(opt.max_retries) + " draws");
}

IARequirement IaRequired(int N, int M, int m) {
  // Both printed inequalities, doubled to clear the halves.
  const long n = N, mb = M, mm = m;
  const long a2 = 2 * n - 3 * mb - 1;  // 2 (N - 3M/2 - 1/2)
  IARequirement r;
  r.strict_form = 2 * mm * (n - mb) - (n - mb) * (mm - 1) * a2 <
                    2 * n - 3 * mb + 1 + 2 * mm;
  r.nonstrict_form = 2 * mm * (n - mb - 1) <= ((n - mb) * (mm - 1) + 1) * a2;
  const long t = (mb - 1) / 2;
  const long v = t + 1 - (2 * mb - n);
  r.needed = mm * v >= mm + v;
  r.discrepancy = !(r.strict_form == r.nonstrict_form &&
                    r.nonstrict_form == r.needed);
  return r;
}

}  // namespace sgc
