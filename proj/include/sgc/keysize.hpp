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

#ifndef SGC_KEYSIZE_HPP_
#define SGC_KEYSIZE_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "json.hpp"
#include "sgc/instance.hpp"

namespace sgc {

using Rational = boost::rational<std::int64_t>;

struct TraceStep {
  int N = 0;
  int M = 0;
  Branch branch = Branch::kAllHoldAll;
};

struct HResult {
  int h = 0;
  std::vector<TraceStep> trace;  // outermost level first
  bool fallback_used = false;
};

// Number of independent coded combinations sent by the combined scheme.
// Total: sub-instances that meet no case condition use the cyclic value
// N - M + m and are marked in the trace.
HResult HRecursive(int N, int M, int m);
std::string FormatTrace(const std::vector<TraceStep>& trace);

Rational EtaAchievable(int N, int M, int m);
// ceil(mN / (N - N_r + m)) / m - 1
Rational EtaConverseClosed(int N, int Nr, int m);
// N_r / m - 1
Rational EtaCyclicClosed(int Nr, int m);
// N / M - 1 when M divides N.
std::optional<Rational> EtaFracRep(int N, int M);

struct ChainResult {
  int length = 0;
  std::vector<int> witness;  // 0-based servers, in chain order
  bool exhaustive = false;   // false: greedy lower bound
};

// Exhaustive search is used up to this many servers.
inline constexpr int kExhaustiveChainMaxN = 20;

// Longest ordered server sequence in which every server holds a dataset
// that appears at most m - 1 times among the servers before it.
ChainResult LongestChain(const Assignment& a, int m, std::uint64_t seed = 0,
                         int greedy_restarts = 1000);
// True iff `chain` satisfies the ordering condition on `a`.
bool IsValidChain(const Assignment& a, int m, const std::vector<int>& chain);
// length / m - 1
Rational ChainBound(int length, int m);

struct KeySizeReport {
  Params params;
  int h_value = 0;
  Rational eta_achieved;
  Rational eta_converse;
  Rational eta_cyclic;
  std::optional<Rational> eta_fracrep;
  std::optional<int> chain_length;
  bool chain_exhaustive = false;
  std::optional<Rational> chain_bound;
  bool fallback_used = false;
  std::vector<TraceStep> trace;
};

// Closed forms only: no plan is built and no chain search is run.
KeySizeReport ClosedFormReport(const Params& p);

nlohmann::ordered_json ToJson(const Rational& r);
nlohmann::ordered_json ToJson(const std::vector<TraceStep>& trace);
nlohmann::ordered_json ToJson(const KeySizeReport& r);

}  // namespace sgc

#endif  // SGC_KEYSIZE_HPP_
