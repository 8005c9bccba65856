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


#ifndef SGC_HARNESS_HPP_
#define SGC_HARNESS_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "sgc/codegen.hpp"
#include "sgc/keysize.hpp"
#include "sgc/secure.hpp"

namespace sgc {

struct VerifyOptions {
  // Above this many size-N_r subsets, verification samples.
  std::uint64_t exhaustive_limit = 1000000;
  std::uint64_t samples = 100000;
  std::uint64_t seed = 0;
  bool exhaustive_security = false;
  std::size_t max_listed_failures = 100;
};

struct VerificationReport {
  Params params;
  std::uint32_t q = 0;
  std::uint64_t seed = 0;
  bool sampled = false;
  std::uint64_t subsets_total = 0;  // C(N, N_r), saturating
  std::uint64_t subsets_checked = 0;
  std::uint64_t subsets_failed_count = 0;
  std::vector<std::vector<int>> subsets_failed;  // first few, 0-based
  Rational worst_cost;
  int rank_lambda = 0;
  Rational eta_achieved;
  SecurityVerdict security;
  ChainResult chain;
  Rational chain_bound;
  Rational converse_closed;
  Rational eta_cyclic;
  std::vector<TraceStep> trace;
  bool fallback_used = false;

  bool decodable() const { return subsets_failed_count == 0; }
  bool cost_optimal() const {
    return worst_cost == Rational(params.Nr, params.m);
  }
  bool pass() const { return decodable() && security.pass() && cost_optimal(); }
};

// Decode-with-cancellation on every size-N_r subset in lexicographic
// order, or on `samples` seeded uniform subsets above the limit.
VerificationReport VerifyAllSubsets(const TransmissionPlan& plan,
                                    const KeyPlan& keys,
                                    const VerifyOptions& opt = {});

// Largest total upload from any N_r servers, in units of L. Every server
// sends one block of L/m symbols per row it transmits.
Rational MeasureCost(const TransmissionPlan& plan);

// Builds the combined plan and its keys and fills the report from
// measurements: eta from the key count, chain bound from the assignment.
KeySizeReport Compare(const Params& p, std::uint32_t q, std::uint64_t seed);

nlohmann::ordered_json ToJson(const ChainResult& c);
nlohmann::ordered_json ToJson(const VerificationReport& r);

// Sweep CSV. `verified` is "true", "false" or "skipped".
std::string CsvHeader();
std::string CsvRow(const KeySizeReport& r, const std::string& verified);

}  // namespace sgc

#endif  // SGC_HARNESS_HPP_
