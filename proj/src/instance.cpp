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

#include "sgc/instance.hpp"

#include <algorithm>
#include <limits>

#include "sgc/error.hpp"

namespace sgc {

namespace {

[[noreturn]] void Invalid(const std::string& why) {
  throw Error(ErrorCode::kInvalidParams, why);
}

Assignment Empty(int N, int M) {
  Assignment a;
  a.n = N;
  a.m_big = M;
  a.zones.assign(static_cast<std::size_t>(N), {});
  return a;
}

void SortZones(Assignment& a) {
  for (auto& z : a.zones) std::sort(z.begin(), z.end());
}

}  // namespace

Params DeriveParams(int K, int N, int Nr, int m) {
  if (N < 1) Invalid("N must be positive");
  if (m < 1) Invalid("m must be at least 1");
  if (Nr < 1) Invalid("N_r must be positive");
  if (Nr > N) {
    Invalid("N_r = " + std::to_string(Nr) + " exceeds N = " +
            std::to_string(N));
  }
  if (K < 1 || K % N != 0) {
    Invalid("K = " + std::to_string(K) + " is not a positive multiple of N");
  }
  Params p{K, N, Nr, m, N - Nr + m, 1};
  if (p.M > N) {
    Invalid("M = N - N_r + m = " + std::to_string(p.M) + " exceeds N");
  }
  return p;
}

Params ParamsFromReplication(int N, int M, int m) {
  if (M < 1 || M > N) Invalid("M must lie in [1, N]");
  if (m > M) Invalid("m must not exceed M");
  return DeriveParams(N, N, N - M + m, m);
}

std::uint64_t Binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
    if (r > std::numeric_limits<std::uint64_t>::max())
      return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(r);
}

Assignment CyclicAssignment(int N, int M) {
  Assignment a = Empty(N, M);
  for (int n = 0; n < N; ++n)
    for (int j = 0; j < M; ++j) a.zones[n].push_back((n + j) % N);
  SortZones(a);
  return a;
}

Assignment FractionalRepetitionAssignment(int N, int M) {
  if (M < 1 || N % M != 0) {
    throw Error(ErrorCode::kNotDivisible,
                std::to_string(M) + " does not divide " + std::to_string(N));
  }
  Assignment a = Empty(N, M);
  for (int n = 0; n < N; ++n) {
    int block = n / M;
    for (int j = 0; j < M; ++j) a.zones[n].push_back(block * M + j);
  }
  return a;
}

std::string_view BranchName(Branch b) {
  switch (b) {
    case Branch::kAllHoldAll: return "all-hold-all";
    case Branch::kFracRep: return "fractional-repetition";
    case Branch::kScheme1: return "scheme1";
    case Branch::kScheme2: return "scheme2";
    case Branch::kScheme3: return "scheme3";
    case Branch::kScheme4: return "scheme4";
    case Branch::kCyclicFallback: return "cyclic-fallback";
  }
  return "unknown";
}

Branch SelectBranch(int N, int M, int m) {
  if (N == M) return Branch::kAllHoldAll;
  if (N % M == 0) return Branch::kFracRep;
  if (N > 2 * M) return Branch::kScheme1;
  // 1.5M <= N < 2M, written without fractions.
  if (2 * N >= 3 * M) {
    if (M % 2 == 0 && M >= 2 * m) return Branch::kScheme2;
    if (M % 2 == 1 && M >= 2 * m + 1) return Branch::kScheme3;
    return Branch::kCyclicFallback;
  }
  if (M >= 2 * m) return Branch::kScheme4;
  return Branch::kCyclicFallback;
}

Assignment Scheme1Assignment(int N, int M, const Assignment& sub) {
  const int b = Scheme1Blocks(N, M);
  const int offset = b * M;
  Assignment a = Empty(N, M);
  for (int n = 0; n < offset; ++n) {
    int block = n / M;
    for (int j = 0; j < M; ++j) a.zones[n].push_back(block * M + j);
  }
  for (int n = 0; n < sub.n; ++n)
    for (int d : sub.zones[n]) a.zones[offset + n].push_back(offset + d);
  SortZones(a);
  return a;
}

Assignment Scheme2Assignment(int N, int M, const Assignment& sub) {
  const int y = 2 * M - N;
  const int half = M / 2;
  Assignment a = Empty(N, M);
  for (int n = 0; n < half; ++n)
    for (int d = 0; d < M; ++d) a.zones[n].push_back(d);
  for (int n = half; n < M; ++n) {
    for (int d = 0; d < y; ++d) a.zones[n].push_back(d);
    for (int d = M; d < N; ++d) a.zones[n].push_back(d);
  }
  // Sub-dataset i is the pair {y + i, M + i}.
  for (int n = 0; n < sub.n; ++n) {
    for (int i : sub.zones[n]) {
      a.zones[M + n].push_back(y + i);
      a.zones[M + n].push_back(M + i);
    }
  }
  SortZones(a);
  return a;
}

Assignment Scheme3Assignment(int N, int M) {
  const int y = 2 * M - N;
  const int t = (M - 1) / 2;
  const int p = N - M;
  Assignment a = Empty(N, M);
  for (int n = 0; n < y; ++n)
    for (int d = 0; d < M; ++d) a.zones[n].push_back(d);
  for (int i = 0; i < p; ++i) {
    auto& z2 = a.zones[y + i];
    for (int d = 0; d < t; ++d) z2.push_back(d);
    for (int r = 0; r <= t; ++r) z2.push_back(M + (i + r) % p);
    auto& z3 = a.zones[M + i];
    for (int d = t; d < M; ++d) z3.push_back(d);
    for (int r = 0; r < t; ++r) z3.push_back(M + (i + r) % p);
  }
  SortZones(a);
  return a;
}

Assignment Scheme4Assignment(int N, int M, const Assignment& sub) {
  const int shared = N - M;
  Assignment a = Empty(N, M);
  for (int n = 0; n < M; ++n) {
    for (int d = 0; d < shared; ++d) a.zones[n].push_back(d);
    for (int d : sub.zones[n]) a.zones[n].push_back(shared + d);
  }
  for (int n = M; n < N; ++n)
    for (int d = shared; d < N; ++d) a.zones[n].push_back(d);
  SortZones(a);
  return a;
}

Assignment CombinedAssignment(int N, int M, int m) {
  switch (SelectBranch(N, M, m)) {
    case Branch::kAllHoldAll:
    case Branch::kFracRep:
      return FractionalRepetitionAssignment(N, M);
    case Branch::kScheme1: {
      int rest = N - Scheme1Blocks(N, M) * M;
      return Scheme1Assignment(N, M, CombinedAssignment(rest, M, m));
    }
    case Branch::kScheme2:
      return Scheme2Assignment(N, M, CombinedAssignment(N - M, M / 2, m));
    case Branch::kScheme3:
      return Scheme3Assignment(N, M);
    case Branch::kScheme4:
      return Scheme4Assignment(N, M, CombinedAssignment(M, 2 * M - N, m));
    case Branch::kCyclicFallback:
      return CyclicAssignment(N, M);
  }
  throw Error(ErrorCode::kUnsupportedBranch, "no construction applies");
}

Assignment CombinedAssignment(const Params& p) {
  if (p.K != p.N) {
    throw Error(ErrorCode::kInvalidParams,
                "combined assignment needs K = N; group datasets first");
  }
  return CombinedAssignment(p.N, p.M, p.m);
}

std::vector<std::vector<int>> GroupDatasets(int K, int N) {
  if (N < 1 || K < 1 || K % N != 0) {
    throw Error(ErrorCode::kNotDivisible,
                "N = " + std::to_string(N) + " does not divide K = " +
                    std::to_string(K));
  }
  std::vector<std::vector<int>> groups(static_cast<std::size_t>(N));
  for (int k = 0; k < K; ++k) groups[k % N].push_back(k);
  return groups;
}

AssignmentReport ValidateAssignment(const Assignment& a, const Params& p) {
  AssignmentReport r;
  const int K = p.N;  // coding always runs at K = N
  r.multiplicity.assign(static_cast<std::size_t>(K), 0);
  if (static_cast<int>(a.zones.size()) != p.N) {
    r.problems.push_back("expected " + std::to_string(p.N) + " zones, got " +
                         std::to_string(a.zones.size()));
  }
  for (std::size_t n = 0; n < a.zones.size(); ++n) {
    const auto& z = a.zones[n];
    if (static_cast<int>(z.size()) != p.M) {
      r.problems.push_back("server " + std::to_string(n + 1) + " holds " +
                           std::to_string(z.size()) + " datasets");
    }
    for (std::size_t i = 0; i < z.size(); ++i) {
      int d = z[i];
      if (d < 0 || d >= K) {
        r.problems.push_back("server " + std::to_string(n + 1) +
                             " holds unknown dataset " + std::to_string(d + 1));
        continue;
      }
      if (i > 0 && z[i - 1] == d) {
        r.problems.push_back("server " + std::to_string(n + 1) +
                             " lists dataset " + std::to_string(d + 1) +
                             " twice");
      }
      ++r.multiplicity[d];
    }
  }
  for (int k = 0; k < K; ++k) {
    if (r.multiplicity[k] != p.M) {
      r.problems.push_back("dataset " + std::to_string(k + 1) + " appears " +
                           std::to_string(r.multiplicity[k]) + " times");
    }
  }
  r.pass = r.problems.empty();
  return r;
}

nlohmann::ordered_json ToJson(const Params& p) {
  nlohmann::ordered_json j;
  j["k"] = p.K;
  j["n"] = p.N;
  j["nr"] = p.Nr;
  j["m"] = p.m;
  j["m_big"] = p.M;
  return j;
}

nlohmann::ordered_json ToJson(const Assignment& a) {
  nlohmann::ordered_json j;
  j["n"] = a.n;
  j["m_big"] = a.m_big;
  auto zones = nlohmann::ordered_json::array();
  for (const auto& z : a.zones) {
    auto row = nlohmann::ordered_json::array();
    for (int d : z) row.push_back(d + 1);
    zones.push_back(std::move(row));
  }
  j["zones"] = std::move(zones);
  return j;
}

Assignment AssignmentFromJson(const nlohmann::json& j) {
  Assignment a;
  a.n = j.at("n").get<int>();
  a.m_big = j.at("m_big").get<int>();
  for (const auto& z : j.at("zones")) {
    std::vector<int> zone;
    for (const auto& d : z) zone.push_back(d.get<int>() - 1);
    std::sort(zone.begin(), zone.end());
    a.zones.push_back(std::move(zone));
  }
  return a;
}

}  // namespace sgc
