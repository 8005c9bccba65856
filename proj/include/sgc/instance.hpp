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

#ifndef SGC_INSTANCE_HPP_
#define SGC_INSTANCE_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace sgc {

// (K, N, N_r, m) plus the derived replication factor M = N - N_r + m.
struct Params {
  int K = 0;
  int N = 0;
  int Nr = 0;
  int m = 0;
  int M = 0;
  int L_sub = 1;

  bool operator==(const Params&) const = default;
};

// Throws InvalidParams naming the violated constraint.
Params DeriveParams(int K, int N, int Nr, int m);
// K = N instance with replication M, i.e. N_r = N - M + m.
Params ParamsFromReplication(int N, int M, int m);

// Datasets and servers are 0-based here; JSON output is 1-based.
struct Assignment {
  int n = 0;
  int m_big = 0;
  std::vector<std::vector<int>> zones;  // each sorted ascending

  bool operator==(const Assignment&) const = default;
};

// C(n, k), saturating at UINT64_MAX; 0 when k is out of range.
std::uint64_t Binomial(int n, int k);

Assignment CyclicAssignment(int N, int M);
// Throws NotDivisible when M does not divide N.
Assignment FractionalRepetitionAssignment(int N, int M);

// Which construction handles (N, M) at one level of the recursion.
enum class Branch {
  kAllHoldAll,     // N = M
  kFracRep,        // M | N
  kScheme1,        // N > 2M
  kScheme2,        // 1.5M <= N < 2M, M even, M >= 2m
  kScheme3,        // 1.5M <= N < 2M, M odd, M >= 2m + 1
  kScheme4,        // M < N < 1.5M, M >= 2m
  kCyclicFallback  // none of the above preconditions hold
};

std::string_view BranchName(Branch b);
Branch SelectBranch(int N, int M, int m);

// Scheme 1: the number of leading fractional-repetition blocks.
inline int Scheme1Blocks(int N, int M) { return N / M - 1; }

// One level of each recursive construction, given the already-built
// assignment of the sub-instance it recurses into.
//   scheme 1: sub is (N - bM, M)
//   scheme 2: sub is (N - M, M/2), over the N - M pairs
//   scheme 4: sub is (M, 2M - N), over datasets [N-M, N)
Assignment Scheme1Assignment(int N, int M, const Assignment& sub);
Assignment Scheme2Assignment(int N, int M, const Assignment& sub);
Assignment Scheme3Assignment(int N, int M);
Assignment Scheme4Assignment(int N, int M, const Assignment& sub);

Assignment CombinedAssignment(int N, int M, int m);
// Requires K = N.
Assignment CombinedAssignment(const Params& p);

// Group i collects datasets k with k mod N = i. Throws NotDivisible.
std::vector<std::vector<int>> GroupDatasets(int K, int N);

struct AssignmentReport {
  bool pass = false;
  std::vector<int> multiplicity;  // per dataset
  std::vector<std::string> problems;
};

AssignmentReport ValidateAssignment(const Assignment& a, const Params& p);

nlohmann::ordered_json ToJson(const Params& p);
nlohmann::ordered_json ToJson(const Assignment& a);
Assignment AssignmentFromJson(const nlohmann::json& j);

}  // namespace sgc

#endif  // SGC_INSTANCE_HPP_
