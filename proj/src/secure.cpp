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


#include "sgc/secure.hpp"

#include <cmath>
#include <numeric>
#include <unordered_map>

#include "sgc/error.hpp"

namespace sgc {

namespace {

std::vector<std::size_t> AsIndex(const std::vector<int>& servers) {
  return {servers.begin(), servers.end()};
}

std::uint64_t CheckedPow(std::uint64_t base, std::uint64_t exp,
                         std::uint64_t cap) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (r > cap / base) return cap + 1;
    r *= base;
  }
  return r;
}

// Advances a base-q odometer; false once it wraps to all zeros.
bool Next(std::vector<Elem>& digits, std::uint32_t q) {
  for (auto& d : digits) {
    if (++d < q) return true;
    d = 0;
  }
  return false;
}

// Exact log_q(n) when n is a power of q.
std::optional<int> LogExact(std::uint64_t n, std::uint32_t q) {
  int e = 0;
  while (n > 1) {
    if (n % q != 0) return std::nullopt;
    n /= q;
    ++e;
  }
  return e;
}

}  // namespace

KeyPlan GenKeys(const TransmissionPlan& plan) {
  PrimeField f(plan.q);
  if (!RowSpaceContains(f, plan.T, plan.D)) {
    throw Error(ErrorCode::kDemandNotRecoverable,
                "demand rows are not in the span of the transmissions");
  }
  KeyPlan k;
  k.m = plan.params.m;
  k.B = plan.D;
  for (std::size_t n = 0; n < plan.T.rows(); ++n) {
    RowSpaceSolver in_b(f, k.B, false);
    if (in_b.Contains(plan.T.row(n))) continue;
    k.B.append_row(plan.T.row(n));
    k.completion_rows.push_back(static_cast<int>(n));
  }
  const std::size_t h = k.B.rows();
  k.r = static_cast<int>(h) - k.m;
  RowSpaceSolver solver(f, k.B);
  k.C = Matrix(0, h);
  for (std::size_t n = 0; n < plan.T.rows(); ++n) k.C.append_row(*solver.Solve(plan.T.row(n)));
  k.Kc = Matrix(plan.T.rows(), static_cast<std::size_t>(k.r));
  for (std::size_t n = 0; n < plan.T.rows(); ++n)
    for (int i = 0; i < k.r; ++i) k.Kc(n, i) = k.C(n, k.m + i);
  return k;
}

KeyPlan ZeroKeys(KeyPlan keys) {
  keys.Kc = Matrix(keys.Kc.rows(), keys.Kc.cols());
  return keys;
}

Matrix DrawMessages(const TransmissionPlan& plan, int len,
                    std::uint64_t seed) {
  PrimeField f(plan.q);
  Rng rng(MixSeed(seed, kMessageStream));
  return Matrix::Random(plan.D.cols(), static_cast<std::size_t>(len), f, rng);
}

Matrix DrawKeys(const TransmissionPlan& plan, const KeyPlan& keys, int len,
                std::uint64_t seed) {
  PrimeField f(plan.q);
  Rng rng(MixSeed(seed, kKeyStream));
  return Matrix::Random(static_cast<std::size_t>(keys.r),
                        static_cast<std::size_t>(len), f, rng);
}

Matrix Encode(const TransmissionPlan& plan, const KeyPlan& keys,
              const Matrix& messages, const Matrix& key_symbols) {
  PrimeField f(plan.q);
  Matrix x = Multiply(f, plan.T, messages);
  if (keys.r == 0) return x;
  Matrix masks = Multiply(f, keys.Kc, key_symbols);
  for (std::size_t n = 0; n < x.rows(); ++n)
    for (std::size_t l = 0; l < x.cols(); ++l)
      x(n, l) = f.add(x(n, l), masks(n, l));
  return x;
}

std::optional<Matrix> CancellingDecoder(const TransmissionPlan& plan,
                                        const KeyPlan& keys,
                                        const std::vector<int>& servers) {
  PrimeField f(plan.q);
  auto idx = AsIndex(servers);
  Matrix joint = HStack(SelectRows(plan.T, idx), SelectRows(keys.Kc, idx));
  RowSpaceSolver solver(f, joint);
  Matrix out(0, servers.size());
  for (std::size_t j = 0; j < plan.D.rows(); ++j) {
    Row target = plan.D.row_copy(j);
    target.resize(joint.cols(), 0);
    auto c = solver.Solve(target);
    if (!c) return std::nullopt;
    out.append_row(*c);
  }
  return out;
}

bool DecodeCancellation(const TransmissionPlan& plan, const KeyPlan& keys,
                        const std::vector<int>& servers) {
  return CancellingDecoder(plan, keys, servers).has_value();
}

SecurityVerdict CheckSecurityRank(const TransmissionPlan& plan,
                                  const KeyPlan& keys) {
  PrimeField f(plan.q);
  SecurityVerdict v;
  v.rank_check = true;
  Matrix null = LeftNullspace(f, keys.Kc);
  RowSpaceSolver demand(f, plan.D, false);
  for (std::size_t i = 0; i < null.rows(); ++i) {
    Row seen = MultiplyRow(f, null.row(i), plan.T);
    if (!demand.Contains(seen)) {
      v.rank_check = false;
      v.witness = std::move(seen);
      break;
    }
  }
  v.notes.push_back("rank: " + std::to_string(null.rows()) +
                    " key-free combinations checked");
  return v;
}

MutualInformation ExhaustiveMutualInformation(const TransmissionPlan& plan,
                                              const KeyPlan& keys,
                                              std::uint64_t max_states) {
  const std::uint32_t q = plan.q;
  PrimeField f(q);
  const std::size_t cols = plan.D.cols();
  const std::size_t N = plan.T.rows();
  const std::size_t m = plan.D.rows();
  const auto r = static_cast<std::size_t>(keys.r);
  const std::uint64_t states = CheckedPow(q, cols + r, max_states);
  if (states > max_states) {
    throw Error(ErrorCode::kTooLarge,
                "q^(mK+r) exceeds " + std::to_string(max_states) + " states");
  }

  // Key masks Kc k for every key tuple, encoded base q.
  std::vector<Row> masks;
  {
    std::vector<Elem> k(r, 0);
    do {
      Row mask(N, 0);
      for (std::size_t n = 0; n < N; ++n)
        for (std::size_t i = 0; i < r; ++i)
          mask[n] = f.add(mask[n], f.mul(keys.Kc(n, i), k[i]));
      masks.push_back(std::move(mask));
    } while (Next(k, q));
  }
  std::uint64_t mask_support = 0;
  {
    std::unordered_map<std::uint64_t, int> seen;
    for (const auto& mask : masks) {
      std::uint64_t code = 0;
      for (std::size_t n = N; n-- > 0;) code = code * q + mask[n];
      seen[code] += 1;
    }
    mask_support = seen.size();
  }

  // Joint counts of (sum, X) over all messages and keys.
  std::vector<std::unordered_map<std::uint64_t, std::uint64_t>> by_sum(
      CheckedPow(q, m, ~0ull));
  std::vector<Elem> w(cols, 0);
  Row x(N);
  do {
    std::uint64_t s = 0;
    for (std::size_t j = m; j-- > 0;) {
      Elem acc = 0;
      for (std::size_t c = 0; c < cols; ++c)
        if (plan.D(j, c) != 0) acc = f.add(acc, f.mul(plan.D(j, c), w[c]));
      s = s * q + acc;
    }
    for (std::size_t n = 0; n < N; ++n) {
      Elem acc = 0;
      for (std::size_t c = 0; c < cols; ++c)
        if (plan.T(n, c) != 0) acc = f.add(acc, f.mul(plan.T(n, c), w[c]));
      x[n] = acc;
    }
    auto& counts = by_sum[s];
    for (const auto& mask : masks) {
      std::uint64_t code = 0;
      for (std::size_t n = N; n-- > 0;) code = code * q + f.add(x[n], mask[n]);
      ++counts[code];
    }
  } while (Next(w, q));

  // I(W; X | S) = H(X | S) - H(X | W). Given W, X is uniform on a coset of
  // im(Kc), so H(X | W) = log |im(Kc)|.
  MutualInformation mi;
  mi.states = states;
  auto kc_dim = LogExact(mask_support, q);
  double h_cond = 0.0;     // in log_q units, floating
  std::int64_t exact_sum = 0;
  bool exact = kc_dim.has_value();
  const double log_q = std::log(static_cast<double>(q));
  for (const auto& counts : by_sum) {
    std::uint64_t total = 0;
    for (const auto& [code, c] : counts) total += c;
    const std::uint64_t first = counts.begin()->second;
    bool flat = true;
    double h = 0.0;
    for (const auto& [code, c] : counts) {
      flat = flat && c == first;
      const double p = static_cast<double>(c) / static_cast<double>(total);
      h -= p * std::log(p) / log_q;
    }
    h_cond += h;
    auto dim = flat ? LogExact(counts.size(), q) : std::nullopt;
    if (!dim) {
      exact = false;
      mi.uniform = false;
    } else {
      exact_sum += *dim;
    }
  }
  const auto sums = static_cast<std::int64_t>(by_sum.size());
  if (exact) {
    mi.log_q = Rational(exact_sum, sums) - Rational(*kc_dim);
    mi.bits = boost::rational_cast<double>(mi.log_q) * std::log2(q);
  } else {
    const double v =
        h_cond / static_cast<double>(sums) -
        std::log(static_cast<double>(mask_support)) / log_q;
    // Not reachable for linear plans; keep a rational approximation so the
    // verdict still compares against zero.
    mi.log_q = Rational(static_cast<std::int64_t>(std::llround(v * 1e6)),
                        1000000);
    mi.bits = v * std::log2(q);
  }
  return mi;
}

SecurityVerdict CheckSecurityExhaustive(const TransmissionPlan& plan,
                                        const KeyPlan& keys,
                                        std::uint64_t max_states) {
  SecurityVerdict v = CheckSecurityRank(plan, keys);
  v.mi = ExhaustiveMutualInformation(plan, keys, max_states);
  v.notes.push_back("exhaustive: " + std::to_string(v.mi->states) +
                    " message-key tuples over F_" + std::to_string(plan.q));
  return v;
}

nlohmann::ordered_json ToJson(const KeyPlan& keys) {
  nlohmann::ordered_json j;
  j["r"] = keys.r;
  j["eta"] = ToJson(keys.eta());
  j["completion_rows"] = keys.completion_rows;
  j["Kc"] = ToJson(keys.Kc);
  return j;
}

nlohmann::ordered_json ToJson(const MutualInformation& mi) {
  nlohmann::ordered_json j;
  j["log_q"] = ToJson(mi.log_q);
  j["bits"] = mi.bits;
  j["states"] = mi.states;
  j["uniform"] = mi.uniform;
  return j;
}

nlohmann::ordered_json ToJson(const SecurityVerdict& v) {
  nlohmann::ordered_json j;
  j["pass"] = v.pass();
  j["rank_check"] = v.rank_check;
  j["witness"] = v.witness ? nlohmann::ordered_json(*v.witness)
                           : nlohmann::ordered_json(nullptr);
  j["mi"] = v.mi ? ToJson(*v.mi) : nlohmann::ordered_json(nullptr);
  j["notes"] = v.notes;
  return j;
}

}  // namespace sgc
