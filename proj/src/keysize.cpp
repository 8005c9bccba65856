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

#include "sgc/keysize.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "sgc/error.hpp"
#include "sgc/field.hpp"

namespace sgc {

namespace {

int HInto(int N, int M, int m, HResult& out) {
  Branch b = SelectBranch(N, M, m);
  out.trace.push_back({N, M, b});
  switch (b) {
    case Branch::kAllHoldAll:
      return m;
    case Branch::kFracRep:
      return m * (N / M);
    case Branch::kScheme1: {
      int blocks = Scheme1Blocks(N, M);
      return HInto(N - blocks * M, M, m, out) + m * blocks;
    }
    case Branch::kScheme2:
      return HInto(N - M, M / 2, m, out) + m;
    case Branch::kScheme3:
      return N - (3 * M - 1) / 2 + 2 * m;
    case Branch::kScheme4:
      return HInto(M, 2 * M - N, m, out);
    case Branch::kCyclicFallback:
      out.fallback_used = true;
      return N - M + m;
  }
  return 0;
}

// Per-dataset occurrence counts of the servers in `set`.
void CountsOf(const Assignment& a, std::uint32_t set, std::vector<int>& cnt) {
  std::fill(cnt.begin(), cnt.end(), 0);
  for (int n = 0; n < a.n; ++n)
    if (set >> n & 1u)
      for (int d : a.zones[n]) ++cnt[d];
}

bool CanExtend(const Assignment& a, int m, int server,
               const std::vector<int>& cnt) {
  for (int d : a.zones[server])
    if (cnt[d] <= m - 1) return true;
  return false;
}

int DatasetCount(const Assignment& a) {
  int k = 0;
  for (const auto& z : a.zones)
    for (int d : z) k = std::max(k, d + 1);
  return k;
}

ChainResult ExhaustiveChain(const Assignment& a, int m) {
  const int N = a.n;
  const std::uint32_t full = N == 32 ? ~0u : (1u << N) - 1;
  // Whether the next server is admissible depends only on the set chosen
  // so far, so reachability over subsets is exact.
  std::vector<std::int8_t> parent(static_cast<std::size_t>(full) + 1, -1);
  std::vector<bool> reach(static_cast<std::size_t>(full) + 1, false);
  std::vector<int> cnt(static_cast<std::size_t>(DatasetCount(a)));
  reach[0] = true;
  std::uint32_t best = 0;
  for (std::uint32_t s = 0; s <= full; ++s) {
    if (!reach[s]) continue;
    if (std::popcount(s) > std::popcount(best)) best = s;
    CountsOf(a, s, cnt);
    for (int n = 0; n < N; ++n) {
      std::uint32_t t = s | (1u << n);
      if (t == s || reach[t]) continue;
      if (CanExtend(a, m, n, cnt)) {
        reach[t] = true;
        parent[t] = static_cast<std::int8_t>(n);
      }
    }
    if (s == full) break;
  }
  ChainResult r;
  r.exhaustive = true;
  r.length = std::popcount(best);
  for (std::uint32_t s = best; s != 0;) {
    int n = parent[s];
    r.witness.push_back(n);
    s &= ~(1u << n);
  }
  std::reverse(r.witness.begin(), r.witness.end());
  return r;
}

ChainResult GreedyChain(const Assignment& a, int m, std::uint64_t seed,
                        int restarts) {
  Rng rng(MixSeed(seed, 0xC4A1));
  std::vector<int> order(static_cast<std::size_t>(a.n));
  std::vector<int> cnt(static_cast<std::size_t>(DatasetCount(a)));
  ChainResult best;
  for (int attempt = 0; attempt < restarts; ++attempt) {
    std::iota(order.begin(), order.end(), 0);
    for (int i = a.n - 1; i > 0; --i)
      std::swap(order[i], order[rng.below(static_cast<std::uint64_t>(i) + 1)]);
    std::fill(cnt.begin(), cnt.end(), 0);
    std::vector<bool> used(static_cast<std::size_t>(a.n), false);
    std::vector<int> chain;
    for (bool grew = true; grew;) {
      grew = false;
      for (int n : order) {
        if (used[n] || !CanExtend(a, m, n, cnt)) continue;
        used[n] = true;
        chain.push_back(n);
        for (int d : a.zones[n]) ++cnt[d];
        grew = true;
        break;
      }
    }
    if (static_cast<int>(chain.size()) > best.length) {
      best.length = static_cast<int>(chain.size());
      best.witness = chain;
    }
  }
  best.exhaustive = false;
  return best;
}

}  // namespace

HResult HRecursive(int N, int M, int m) {
  if (m < 1 || M < m || M > N) {
    throw Error(ErrorCode::kInvalidParams,
                "h needs 1 <= m <= M <= N, got N=" + std::to_string(N) +
                    " M=" + std::to_string(M) + " m=" + std::to_string(m));
  }
  HResult r;
  r.h = HInto(N, M, m, r);
  return r;
}

std::string FormatTrace(const std::vector<TraceStep>& trace) {
  std::string s;
  for (const auto& step : trace) {
    if (!s.empty()) s += " -> ";
    s += "(" + std::to_string(step.N) + "," + std::to_string(step.M) + ")" +
         std::string(BranchName(step.branch));
  }
  return s;
}

Rational EtaAchievable(int N, int M, int m) {
  return Rational(HRecursive(N, M, m).h, m) - 1;
}

Rational EtaConverseClosed(int N, int Nr, int m) {
  const std::int64_t M = N - Nr + m;
  const std::int64_t ceil = (static_cast<std::int64_t>(m) * N + M - 1) / M;
  return Rational(ceil, m) - 1;
}

Rational EtaCyclicClosed(int Nr, int m) { return Rational(Nr, m) - 1; }

std::optional<Rational> EtaFracRep(int N, int M) {
  if (M < 1 || N % M != 0) return std::nullopt;
  return Rational(N / M - 1);
}

ChainResult LongestChain(const Assignment& a, int m, std::uint64_t seed,
                         int greedy_restarts) {
  if (a.n <= kExhaustiveChainMaxN) return ExhaustiveChain(a, m);
  return GreedyChain(a, m, seed, greedy_restarts);
}

bool IsValidChain(const Assignment& a, int m, const std::vector<int>& chain) {
  std::vector<int> cnt(static_cast<std::size_t>(DatasetCount(a)), 0);
  std::vector<bool> used(static_cast<std::size_t>(a.n), false);
  for (int n : chain) {
    if (n < 0 || n >= a.n || used[n]) return false;
    if (!CanExtend(a, m, n, cnt)) return false;
    used[n] = true;
    for (int d : a.zones[n]) ++cnt[d];
  }
  return true;
}

Rational ChainBound(int length, int m) { return Rational(length, m) - 1; }

KeySizeReport ClosedFormReport(const Params& p) {
  KeySizeReport r;
  r.params = p;
  HResult h = HRecursive(p.N, p.M, p.m);
  r.h_value = h.h;
  r.eta_achieved = Rational(h.h, p.m) - 1;
  r.eta_converse = EtaConverseClosed(p.N, p.Nr, p.m);
  r.eta_cyclic = EtaCyclicClosed(p.Nr, p.m);
  r.eta_fracrep = EtaFracRep(p.N, p.M);
  r.fallback_used = h.fallback_used;
  r.trace = std::move(h.trace);
  return r;
}

nlohmann::ordered_json ToJson(const Rational& r) {
  nlohmann::ordered_json j;
  j["num"] = r.numerator();
  j["den"] = r.denominator();
  return j;
}

nlohmann::ordered_json ToJson(const std::vector<TraceStep>& trace) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& s : trace) {
    nlohmann::ordered_json j;
    j["n"] = s.N;
    j["m_big"] = s.M;
    j["branch"] = std::string(BranchName(s.branch));
    arr.push_back(std::move(j));
  }
  return arr;
}

nlohmann::ordered_json ToJson(const KeySizeReport& r) {
  nlohmann::ordered_json j;
  j["params"] = ToJson(r.params);
  j["h_value"] = r.h_value;
  j["eta_achieved"] = ToJson(r.eta_achieved);
  j["eta_converse"] = ToJson(r.eta_converse);
  j["eta_cyclic"] = ToJson(r.eta_cyclic);
  j["eta_fracrep"] = r.eta_fracrep ? ToJson(*r.eta_fracrep) : nullptr;
  j["chain_length"] =
      r.chain_length ? nlohmann::ordered_json(*r.chain_length) : nullptr;
  j["chain_exhaustive"] = r.chain_exhaustive;
  j["chain_bound"] = r.chain_bound ? ToJson(*r.chain_bound) : nullptr;
  j["fallback_used"] = r.fallback_used;
  j["trace"] = ToJson(r.trace);
  j["note"] =
      "chain bound assumes equal-length linear transmissions per server";
  return j;
}

}  // namespace sgc
