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

#include "sgc/codegen.hpp"

#include <algorithm>
#include <optional>
#include <utility>

#include "poly_align.hpp"
#include "sgc/error.hpp"

namespace sgc {

namespace {

// One level of construction: T = S * F with F's first m rows the demand.
struct Core {
  Assignment a;
  Matrix T;
  Matrix F;
  std::vector<TraceStep> trace;
  bool fallback = false;
  std::vector<std::string> notes;
};

struct Ctx {
  const PrimeField& f;
  Rng& rng;
  const BuildOptions& opt;
};

// Virtual dataset i of a sub-instance stands for sum_c coef * W_{real}.
using LiftMap = std::vector<std::vector<std::pair<int, Elem>>>;

Matrix Lift(const PrimeField& f, const Matrix& sub, int m, int n_real,
            const LiftMap& map) {
  Matrix out(sub.rows(), static_cast<std::size_t>(n_real) * m);
  for (std::size_t r = 0; r < sub.rows(); ++r)
    for (std::size_t i = 0; i < map.size(); ++i)
      for (int j = 0; j < m; ++j) {
        Elem val = sub(r, SubCol(static_cast<int>(i), j, m));
        if (val == 0) continue;
        for (auto [d, c] : map[i]) {
          Elem& dst = out(r, SubCol(d, j, m));
          dst = f.add(dst, f.mul(c, val));
        }
      }
  return out;
}

LiftMap ShiftMap(int count, int offset) {
  LiftMap map(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) map[i] = {{offset + i, 1}};
  return map;
}

Row BlockSum(int n_real, int m, int first, int last, int j, Elem value = 1) {
  Row r(static_cast<std::size_t>(n_real) * m, 0);
  for (int d = first; d < last; ++d) r[SubCol(d, j, m)] = value;
  return r;
}

Row Combine(const PrimeField& f, const Row& a, Elem ca, const Row& b,
            Elem cb) {
  Row out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    out[i] = f.add(f.mul(ca, a[i]), f.mul(cb, b[i]));
  return out;
}

// `count` rows, each a random combination of `basis`. Coefficients are
// uniform over F_q with all-zero rows redrawn: over tiny fields, insisting
// on nonzero entries leaves too few directions for an MDS mix (F_3^2 has
// only two nonzero-entry directions).
Matrix RandomMix(Ctx& cx, std::size_t count, const Matrix& basis) {
  Matrix c(count, basis.rows());
  for (std::size_t i = 0; i < count; ++i) {
    bool zero = true;
    while (zero) {
      for (std::size_t k = 0; k < basis.rows(); ++k) {
        c(i, k) = cx.rng.uniform(cx.f);
        zero = zero && c(i, k) == 0;
      }
      if (basis.rows() == 0) break;
    }
  }
  return Multiply(cx.f, c, basis);
}

void SetRows(Matrix& T, int first, const Matrix& rows) {
  for (std::size_t i = 0; i < rows.rows(); ++i) {
    auto dst = T.row(first + i);
    std::copy(rows.row(i).begin(), rows.row(i).end(), dst.begin());
  }
}

// Coordinates of each row of `T` in the full-row-rank `F`.
Matrix Coordinates(const PrimeField& f, const Matrix& T, const Matrix& F) {
  RowSpaceSolver solver(f, F);
  Matrix S(0, F.rows());
  for (std::size_t n = 0; n < T.rows(); ++n) {
    auto c = solver.Solve(T.row(n));
    if (!c) {
      throw Error(ErrorCode::kConstructionFailed,
                  "sub-plan row outside its recoverable space");
    }
    S.append_row(*c);
  }
  return S;
}

Core BuildCore(int N, int M, int m, Ctx& cx);
Core BuildBranch(Branch b, int N, int M, int m, Ctx& cx);

Core AllHoldAll(int N, int m, Ctx& cx) {
  Core c;
  c.a = FractionalRepetitionAssignment(N, N);
  c.F = DemandMatrix(N, m);
  c.T = RandomMix(cx, static_cast<std::size_t>(N), c.F);
  return c;
}

Core FracRep(int N, int M, int m, Ctx& cx) {
  const int blocks = N / M;
  Core c;
  c.a = FractionalRepetitionAssignment(N, M);
  c.F = DemandMatrix(N, m);
  c.T = Matrix(static_cast<std::size_t>(N), static_cast<std::size_t>(N) * m);
  for (int b = 0; b < blocks; ++b) {
    Matrix sums(0, c.T.cols());
    for (int j = 0; j < m; ++j)
      sums.append_row(BlockSum(N, m, b * M, (b + 1) * M, j));
    if (b + 1 < blocks) c.F.append_rows(sums);
    SetRows(c.T, b * M, RandomMix(cx, static_cast<std::size_t>(M), sums));
  }
  return c;
}

Core Scheme1(int N, int M, int m, Ctx& cx) {
  const int blocks = Scheme1Blocks(N, M);
  const int offset = blocks * M;
  Core sub = BuildCore(N - offset, M, m, cx);
  LiftMap map = ShiftMap(N - offset, offset);
  Core c;
  c.a = Scheme1Assignment(N, M, sub.a);
  c.F = DemandMatrix(N, m);
  c.T = Matrix(static_cast<std::size_t>(N), static_cast<std::size_t>(N) * m);
  for (int b = 0; b < blocks; ++b) {
    Matrix sums(0, c.T.cols());
    for (int j = 0; j < m; ++j)
      sums.append_row(BlockSum(N, m, b * M, (b + 1) * M, j));
    c.F.append_rows(sums);
    SetRows(c.T, b * M, RandomMix(cx, static_cast<std::size_t>(M), sums));
  }
  Matrix lifted_f = Lift(cx.f, sub.F, m, N, map);
  for (std::size_t r = m; r < lifted_f.rows(); ++r)
    c.F.append_row(lifted_f.row(r));
  SetRows(c.T, offset, Lift(cx.f, sub.T, m, N, map));
  c.trace = std::move(sub.trace);
  c.fallback = sub.fallback;
  c.notes = std::move(sub.notes);
  return c;
}

Core Scheme2(int N, int M, int m, Ctx& cx) {
  const int y = 2 * M - N;
  const int half = M / 2;
  const int pairs = N - M;
  Core sub = BuildCore(pairs, half, m, cx);
  LiftMap map(static_cast<std::size_t>(pairs));
  for (int i = 0; i < pairs; ++i) map[i] = {{y + i, 2}, {M + i, 1}};
  const PrimeField& f = cx.f;

  Core c;
  c.a = Scheme2Assignment(N, M, sub.a);
  Matrix D = DemandMatrix(N, m);
  Matrix lifted_f = Lift(f, sub.F, m, N, map);
  Matrix group1(0, D.cols()), group2(0, D.cols());
  for (int j = 0; j < m; ++j) {
    Row dj = D.row_copy(j), ej = lifted_f.row_copy(j);
    group1.append_row(Combine(f, dj, 1, ej, f.neg(1)));
    group2.append_row(Combine(f, dj, 2 % f.modulus(), ej, f.neg(1)));
  }
  c.F = D;
  for (std::size_t r = 0; r < lifted_f.rows(); ++r)
    c.F.append_row(lifted_f.row(r));
  c.T = Matrix(static_cast<std::size_t>(N), D.cols());
  SetRows(c.T, 0, RandomMix(cx, static_cast<std::size_t>(half), group1));
  SetRows(c.T, half, RandomMix(cx, static_cast<std::size_t>(M - half), group2));
  SetRows(c.T, M, Lift(f, sub.T, m, N, map));
  c.trace = std::move(sub.trace);
  c.fallback = sub.fallback;
  c.notes = std::move(sub.notes);
  return c;
}

Core Scheme3(int N, int M, int m, Ctx& cx) {
  const PrimeField& f = cx.f;
  const int y = 2 * M - N;
  const int t = (M - 1) / 2;
  const int p = N - M;
  const int v = t + 1 - y;

  Core c;
  c.a = Scheme3Assignment(N, M);

  // Alignment runs on the sub-message columns of datasets [M, N) only.
  IAProblem prob;
  const std::size_t local_cols = static_cast<std::size_t>(p) * m;
  prob.fixed = Matrix(static_cast<std::size_t>(m), local_cols);
  for (int d = 0; d < p; ++d)
    for (int j = 0; j < m; ++j) {
      prob.fixed(j, SubCol(d, j, m)) = 1;
      prob.col_dataset.push_back(M + d);
      prob.col_part.push_back(j);
    }
  prob.free_rows = v;
  for (int i = 0; i < p; ++i) {
    const auto& zone = c.a.zones[M + i];
    std::vector<std::size_t> miss;
    for (int d = 0; d < p; ++d) {
      if (std::binary_search(zone.begin(), zone.end(), M + d)) continue;
      for (int j = 0; j < m; ++j) miss.push_back(SubCol(d, j, m));
    }
    prob.missing.push_back(std::move(miss));
  }
  IAOptions ia;
  ia.max_retries = cx.opt.max_retries;
  ia.allow_polynomial = cx.opt.allow_polynomial_ia;
  IASolution sol = IaSolve(f, prob, cx.rng, ia);
  c.notes.push_back("scheme3 (" + std::to_string(N) + "," + std::to_string(M) +
                    "): " + std::string(IAStrategyName(sol.strategy)) +
                    " strategy");

  const std::size_t cols = static_cast<std::size_t>(N) * m;
  Matrix P = DemandMatrix(N, m);
  Matrix Q(static_cast<std::size_t>(m), cols);
  for (int j = 0; j < m; ++j) {
    for (int d = t; d < M; ++d) Q(j, SubCol(d, j, m)) = 2 % f.modulus();
    for (int d = M; d < N; ++d) Q(j, SubCol(d, j, m)) = 1;
  }
  Matrix V(static_cast<std::size_t>(v), cols);
  for (int l = 0; l < v; ++l)
    for (std::size_t lc = 0; lc < local_cols; ++lc)
      V(l, static_cast<std::size_t>(M) * m + lc) = sol.rows(m + l, lc);

  Matrix g1(0, cols), g2(0, cols);
  for (int j = 0; j < m; ++j) {
    g1.append_row(Combine(f, P.row_copy(j), 1, Q.row_copy(j), f.neg(1)));
    g2.append_row(Combine(f, P.row_copy(j), 2 % f.modulus(), Q.row_copy(j),
                          f.neg(1)));
  }
  Matrix group2 = VStack(g2, V);
  Matrix group3 = VStack(Q, V);

  // Group two misses a subset of what its partner in group three misses,
  // so the partner's s_i would do; an independent draw from the larger
  // null space avoids the pair sending the same vector modulo P - Q.
  Matrix S2 = sol.S;
  if (!cx.opt.reuse_partner_vectors) {
    for (int i = 0; i < p; ++i) {
      const auto& zone = c.a.zones[y + i];
      std::vector<std::size_t> miss;
      for (int d = 0; d < p; ++d) {
        if (std::binary_search(zone.begin(), zone.end(), M + d)) continue;
        for (int j = 0; j < m; ++j) miss.push_back(SubCol(d, j, m));
      }
      Matrix basis = miss.empty()
                         ? Matrix::Identity(sol.rows.rows())
                         : LeftNullspace(f, SelectCols(sol.rows, miss));
      Row coef(basis.rows());
      for (auto& x : coef) x = cx.rng.nonzero(f);
      Row s = MultiplyRow(f, coef, basis);
      std::copy(s.begin(), s.end(), S2.row(i).begin());
    }
  }

  c.F = VStack(VStack(P, Q), V);
  c.T = Matrix(static_cast<std::size_t>(N), cols);
  SetRows(c.T, 0, RandomMix(cx, static_cast<std::size_t>(y), g1));
  SetRows(c.T, y, Multiply(f, S2, group2));
  SetRows(c.T, M, Multiply(f, sol.S, group3));
  return c;
}

Core Scheme4(int N, int M, int m, Ctx& cx) {
  const PrimeField& f = cx.f;
  const int shared = N - M;
  Core sub = BuildCore(M, 2 * M - N, m, cx);
  LiftMap map = ShiftMap(M, shared);
  Matrix sub_s = Coordinates(f, sub.T, sub.F);

  Core c;
  c.a = Scheme4Assignment(N, M, sub.a);
  Matrix lifted_f = Lift(f, sub.F, m, N, map);
  c.F = DemandMatrix(N, m);
  // Remaining rows: lifted sub rows plus a random constant on the shared
  // datasets. The constant is drawn per part j. One constant for the whole
  // row gives every null-space server equal demand coordinates, and nested
  // scheme 4 levels then collide.
  for (std::size_t r = m; r < lifted_f.rows(); ++r) {
    Row row = lifted_f.row_copy(r);
    for (int j = 0; j < m; ++j) {
      Elem a = cx.rng.nonzero(f);
      for (int d = 0; d < shared; ++d) row[SubCol(d, j, m)] = a;
    }
    c.F.append_row(row);
  }
  std::vector<std::size_t> shared_cols;
  for (int d = 0; d < shared; ++d)
    for (int j = 0; j < m; ++j) shared_cols.push_back(SubCol(d, j, m));
  Matrix null_shared = LeftNullspace(f, SelectCols(c.F, shared_cols));

  c.T = Matrix(static_cast<std::size_t>(N), c.F.cols());
  SetRows(c.T, 0, Multiply(f, sub_s, c.F));
  if (!null_shared.empty()) {
    Matrix coef = RandomMix(cx, static_cast<std::size_t>(N - M), null_shared);
    SetRows(c.T, M, Multiply(f, coef, c.F));
  }
  c.trace = std::move(sub.trace);
  c.fallback = sub.fallback;
  c.notes = std::move(sub.notes);
  return c;
}

Core CyclicCode(int N, int M, int m, Ctx& cx) {
  const PrimeField& f = cx.f;
  if (f.modulus() <= static_cast<std::uint32_t>(N)) {
    throw Error(ErrorCode::kInvalidField,
                "cyclic code needs q > N distinct nonzero evaluation points");
  }
  const int v = N - M;
  Core c;
  c.a = CyclicAssignment(N, M);
  // Distinct random points. Fixed small points such as 0 and 1 make some
  // power vectors coincide on the demand coordinates, which breaks the
  // enclosing scheme 4 when this code is a sub-instance.
  std::vector<Elem> alpha;
  while (alpha.size() < static_cast<std::size_t>(N)) {
    Elem a = cx.rng.nonzero(f);
    if (std::find(alpha.begin(), alpha.end(), a) == alpha.end())
      alpha.push_back(a);
  }
  c.F = DemandMatrix(N, m);
  Matrix V(static_cast<std::size_t>(v), c.F.cols());
  for (int d = 0; d < N; ++d) {
    std::vector<Elem> roots;
    for (int n = 0; n < N; ++n)
      if (!std::binary_search(c.a.zones[n].begin(), c.a.zones[n].end(), d))
        roots.push_back(alpha[n]);
    for (int j = 0; j < m; ++j) {
      auto low = detail::AlignedCoefficients(f, roots, m, j);
      for (int l = 0; l < v; ++l) V(l, SubCol(d, j, m)) = low[l];
    }
  }
  c.F.append_rows(V);
  Matrix S(0, static_cast<std::size_t>(m + v));
  for (Elem a : alpha) S.append_row(detail::PowerVector(f, a, m, v));
  c.T = Multiply(f, S, c.F);
  return c;
}

Core BuildBranch(Branch b, int N, int M, int m, Ctx& cx) {
  Core c;
  switch (b) {
    case Branch::kAllHoldAll: c = AllHoldAll(N, m, cx); break;
    case Branch::kFracRep: c = FracRep(N, M, m, cx); break;
    case Branch::kScheme1: c = Scheme1(N, M, m, cx); break;
    case Branch::kScheme2: c = Scheme2(N, M, m, cx); break;
    case Branch::kScheme3: c = Scheme3(N, M, m, cx); break;
    case Branch::kScheme4: c = Scheme4(N, M, m, cx); break;
    case Branch::kCyclicFallback:
      c = CyclicCode(N, M, m, cx);
      c.fallback = true;
      break;
  }
  c.trace.insert(c.trace.begin(), TraceStep{N, M, b});
  return c;
}

Core BuildCore(int N, int M, int m, Ctx& cx) {
  return BuildBranch(SelectBranch(N, M, m), N, M, m, cx);
}

struct Check {
  std::string hard;  // rank, support or layout problem; empty when fine
  std::uint64_t checked = 0;
  std::uint64_t failed = 0;
};

Check Validate(const PrimeField& f, const TransmissionPlan& plan, int h,
               const BuildOptions& opt, Rng& rng) {
  Check out;
  const int N = plan.params.N, Nr = plan.params.Nr, m = plan.params.m;
  if (!SupportRespected(plan)) {
    out.hard = "support violated";
    return out;
  }
  for (int j = 0; j < m; ++j)
    if (!std::equal(plan.D.row(j).begin(), plan.D.row(j).end(),
                    plan.F_full.row(j).begin())) {
      out.hard = "F_full does not start with the demand";
      return out;
    }
  if (Rank(f, plan.F_full) != static_cast<std::size_t>(h)) {
    out.hard = "F_full rank differs from h";
  } else if (Rank(f, plan.T) != static_cast<std::size_t>(h)) {
    out.hard = "rank(T) differs from h";
  } else if (!RowSpaceContains(f, plan.F_full, plan.T)) {
    out.hard = "T outside F_full";
  } else if (!RowSpaceContains(f, plan.T, plan.D)) {
    out.hard = "demand outside rowspace(T)";
  }
  if (!out.hard.empty()) return out;

  auto probe = [&](const std::vector<int>& servers) {
    ++out.checked;
    if (!DecodableFrom(f, plan, servers)) ++out.failed;
  };
  if (Binomial(N, Nr) <= opt.full_check_limit) {
    std::vector<int> idx(static_cast<std::size_t>(Nr));
    for (int i = 0; i < Nr; ++i) idx[i] = i;
    while (true) {
      probe(idx);
      int i = Nr;
      while (i > 0 && idx[i - 1] == N - Nr + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (int k = i; k < Nr; ++k) idx[k] = idx[k - 1] + 1;
    }
  } else {
    std::vector<int> servers(static_cast<std::size_t>(N));
    for (int s = 0; s < opt.sampled_checks; ++s) {
      for (int n = 0; n < N; ++n) servers[n] = n;
      for (int i = N - 1; i > 0; --i)
        std::swap(servers[i],
                  servers[rng.below(static_cast<std::uint64_t>(i) + 1)]);
      std::vector<int> pick(servers.begin(), servers.begin() + Nr);
      std::sort(pick.begin(), pick.end());
      probe(pick);
    }
  }
  return out;
}

int HForTop(Branch b, int N, int M, int m) {
  switch (b) {
    case Branch::kAllHoldAll: return m;
    case Branch::kFracRep: return m * (N / M);
    case Branch::kScheme1: {
      int blocks = Scheme1Blocks(N, M);
      return HRecursive(N - blocks * M, M, m).h + m * blocks;
    }
    case Branch::kScheme2: return HRecursive(N - M, M / 2, m).h + m;
    case Branch::kScheme3: return N - (3 * M - 1) / 2 + 2 * m;
    case Branch::kScheme4: return HRecursive(M, 2 * M - N, m).h;
    case Branch::kCyclicFallback: return N - M + m;
  }
  return 0;
}

TransmissionPlan BuildTop(std::optional<Branch> forced, const Params& p,
                          std::uint32_t q, std::uint64_t seed,
                          const BuildOptions& opt) {
  if (p.K != p.N) {
    throw Error(ErrorCode::kInvalidParams,
                "plans are built at K = N; group datasets first");
  }
  PrimeField f(q);
  const Branch top = forced.value_or(SelectBranch(p.N, p.M, p.m));
  const int h = HForTop(top, p.N, p.M, p.m);
  std::string why;
  std::optional<TransmissionPlan> best;
  std::uint64_t best_failed = 0;
  int decode_draws = 0;
  for (int attempt = 0; attempt < opt.max_retries; ++attempt) {
    Rng rng(MixSeed(seed, static_cast<std::uint64_t>(attempt)));
    Ctx cx{f, rng, opt};
    Core core = BuildBranch(top, p.N, p.M, p.m, cx);
    TransmissionPlan plan;
    plan.params = p;
    plan.assignment = std::move(core.a);
    plan.q = q;
    plan.seed = seed;
    plan.T = std::move(core.T);
    plan.D = DemandMatrix(p.N, p.m);
    plan.F_full = std::move(core.F);
    plan.trace = std::move(core.trace);
    plan.fallback_used = core.fallback;
    plan.notes = std::move(core.notes);
    plan.attempts = attempt + 1;
    Rng check_rng(MixSeed(seed, 0x5EED0000u + attempt));
    Check chk = Validate(f, plan, h, opt, check_rng);
    if (!chk.hard.empty()) {
      why = chk.hard;
      continue;
    }
    plan.patterns_checked = chk.checked;
    plan.patterns_failed = chk.failed;
    if (chk.failed == 0) return plan;
    if (!best || chk.failed < best_failed) {
      best_failed = chk.failed;
      best = std::move(plan);
    }
    // Decoding failures that survive several redraws are structural; keep
    // the best draw rather than burning the whole budget.
    if (++decode_draws >= opt.decode_retries) break;
  }
  if (best) {
    best->notes.push_back(std::to_string(best->patterns_failed) + " of " +
                          std::to_string(best->patterns_checked) +
                          " checked straggler patterns do not decode");
    return std::move(*best);
  }
  throw Error(ErrorCode::kConstructionFailed,
              why + " after " + std::to_string(opt.max_retries) + " draws");
}

[[noreturn]] void Precondition(const std::string& what, const Params& p) {
  throw Error(ErrorCode::kBranchPrecondition,
              what + " does not apply to (N, M, m) = (" +
                  std::to_string(p.N) + ", " + std::to_string(p.M) + ", " +
                  std::to_string(p.m) + ")");
}

}  // namespace

Matrix DemandMatrix(int N, int m) {
  Matrix D(static_cast<std::size_t>(m), static_cast<std::size_t>(N) * m);
  for (int j = 0; j < m; ++j)
    for (int k = 0; k < N; ++k) D(j, SubCol(k, j, m)) = 1;
  return D;
}

TransmissionPlan BuildPlan(const Params& p, std::uint32_t q,
                           std::uint64_t seed, const BuildOptions& opt) {
  return BuildTop(std::nullopt, p, q, seed, opt);
}

TransmissionPlan Scheme1Plan(const Params& p, std::uint32_t q,
                             std::uint64_t seed, const BuildOptions& opt) {
  if (!(p.N > 2 * p.M)) Precondition("scheme 1", p);
  return BuildTop(Branch::kScheme1, p, q, seed, opt);
}

TransmissionPlan Scheme2Plan(const Params& p, std::uint32_t q,
                             std::uint64_t seed, const BuildOptions& opt) {
  if (!(2 * p.N >= 3 * p.M && p.N < 2 * p.M && p.M % 2 == 0 &&
        p.M >= 2 * p.m))
    Precondition("scheme 2", p);
  return BuildTop(Branch::kScheme2, p, q, seed, opt);
}

TransmissionPlan Scheme3Plan(const Params& p, std::uint32_t q,
                             std::uint64_t seed, const BuildOptions& opt) {
  if (!(2 * p.N >= 3 * p.M && p.N < 2 * p.M && p.M % 2 == 1 &&
        p.M >= 2 * p.m + 1))
    Precondition("scheme 3", p);
  return BuildTop(Branch::kScheme3, p, q, seed, opt);
}

TransmissionPlan Scheme4Plan(const Params& p, std::uint32_t q,
                             std::uint64_t seed, const BuildOptions& opt) {
  if (!(p.M < p.N && 2 * p.N < 3 * p.M && p.M >= 2 * p.m))
    Precondition("scheme 4", p);
  return BuildTop(Branch::kScheme4, p, q, seed, opt);
}

TransmissionPlan FracRepPlan(const Params& p, std::uint32_t q,
                             std::uint64_t seed, const BuildOptions& opt) {
  if (p.N % p.M != 0) {
    throw Error(ErrorCode::kNotDivisible,
                std::to_string(p.M) + " does not divide " +
                    std::to_string(p.N));
  }
  return BuildTop(p.N == p.M ? Branch::kAllHoldAll : Branch::kFracRep, p, q,
                  seed, opt);
}

TransmissionPlan CyclicPlan(const Params& p, std::uint32_t q,
                            std::uint64_t seed, const BuildOptions& opt) {
  auto plan = BuildTop(Branch::kCyclicFallback, p, q, seed, opt);
  plan.fallback_used = false;  // requested, not a fallback
  plan.notes.push_back("cyclic baseline");
  return plan;
}

bool SupportRespected(const TransmissionPlan& plan) {
  const int m = plan.params.m;
  for (int n = 0; n < plan.params.N; ++n) {
    const auto& zone = plan.assignment.zones[n];
    for (int k = 0; k < plan.params.N; ++k) {
      if (std::binary_search(zone.begin(), zone.end(), k)) continue;
      for (int j = 0; j < m; ++j)
        if (plan.T(n, SubCol(k, j, m)) != 0) return false;
    }
  }
  return true;
}

bool DecodableFrom(const PrimeField& f, const TransmissionPlan& plan,
                   const std::vector<int>& servers) {
  std::vector<std::size_t> idx(servers.begin(), servers.end());
  RowSpaceSolver solver(f, SelectRows(plan.T, idx), false);
  for (std::size_t j = 0; j < plan.D.rows(); ++j)
    if (!solver.Contains(plan.D.row(j))) return false;
  return true;
}

nlohmann::ordered_json ToJson(const Matrix& m) {
  auto arr = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < m.rows(); ++i)
    arr.push_back(nlohmann::ordered_json(m.row_copy(i)));
  return arr;
}

nlohmann::ordered_json ToJson(const TransmissionPlan& plan) {
  nlohmann::ordered_json j;
  j["params"] = ToJson(plan.params);
  j["assignment"] = ToJson(plan.assignment);
  j["q"] = plan.q;
  j["seed"] = plan.seed;
  j["trace"] = ToJson(plan.trace);
  j["fallback_used"] = plan.fallback_used;
  j["attempts"] = plan.attempts;
  j["notes"] = plan.notes;
  j["patterns_checked"] = plan.patterns_checked;
  j["patterns_failed"] = plan.patterns_failed;
  j["T"] = ToJson(plan.T);
  j["D"] = ToJson(plan.D);
  j["F_full"] = ToJson(plan.F_full);
  return j;
}

}  // namespace sgc
