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

#ifndef SGC_CODEGEN_HPP_
#define SGC_CODEGEN_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "sgc/field.hpp"
#include "sgc/instance.hpp"
#include "sgc/keysize.hpp"
#include "sgc/matrix.hpp"

namespace sgc {

// Sub-message W_{k,j} (0-based) lives at column k * m + j of every
// coefficient matrix.
inline std::size_t SubCol(int k, int j, int m) {
  return static_cast<std::size_t>(k) * m + j;
}

// m x mN matrix whose row j sums sub-message j over all datasets.
Matrix DemandMatrix(int N, int m);

struct TransmissionPlan {
  Params params;
  Assignment assignment;
  std::uint32_t q = kDefaultModulus;
  std::uint64_t seed = 0;
  Matrix T;       // N x mN, row n = server n's coefficients
  Matrix D;       // m x mN
  Matrix F_full;  // h x mN, first m rows equal D
  std::vector<TraceStep> trace;
  bool fallback_used = false;
  int attempts = 0;                // redraws used, starting at 1
  std::vector<std::string> notes;  // e.g. the alignment strategy per level
  // Straggler patterns probed at construction and how many did not decode.
  std::uint64_t patterns_checked = 0;
  std::uint64_t patterns_failed = 0;
};

struct BuildOptions {
  int max_retries = 32;
  // Scheme 3 may fall back to polynomial alignment when the per-server
  // alignment system has no solution; disable to see IAInfeasible instead.
  bool allow_polynomial_ia = true;
  // Scheme 3 group two reuses its partner's s_i verbatim. Many more
  // straggler patterns then fail to decode; kept for reproducing that.
  bool reuse_partner_vectors = false;
  // Above this many straggler patterns the construction check samples.
  std::uint64_t full_check_limit = 5000;
  int sampled_checks = 200;
  // Rank and support failures always redraw up to max_retries. Draws that
  // only fail decoding stop after this many and return the best one.
  int decode_retries = 32;
};

// Combined construction for K = N.
TransmissionPlan BuildPlan(const Params& p, std::uint32_t q,
                           std::uint64_t seed, const BuildOptions& opt = {});

// A single top-level construction; each throws BranchPrecondition when its
// case condition does not hold. Sub-instances still use the combined logic.
TransmissionPlan Scheme1Plan(const Params& p, std::uint32_t q,
                             std::uint64_t seed, const BuildOptions& opt = {});
TransmissionPlan Scheme2Plan(const Params& p, std::uint32_t q,
                             std::uint64_t seed, const BuildOptions& opt = {});
TransmissionPlan Scheme3Plan(const Params& p, std::uint32_t q,
                             std::uint64_t seed, const BuildOptions& opt = {});
TransmissionPlan Scheme4Plan(const Params& p, std::uint32_t q,
                             std::uint64_t seed, const BuildOptions& opt = {});
// Fractional repetition; needs M | N.
TransmissionPlan FracRepPlan(const Params& p, std::uint32_t q,
                             std::uint64_t seed, const BuildOptions& opt = {});
// Cyclic assignment with a polynomial (Reed-Solomon style) code; rank N_r.
// Needs q > N.
TransmissionPlan CyclicPlan(const Params& p, std::uint32_t q,
                            std::uint64_t seed, const BuildOptions& opt = {});

// Interference alignment for one group of servers.
//
// The template has `fixed.rows()` known rows and `free_rows` unknown rows,
// all over the same columns. Server n cannot compute the columns in
// missing[n] and must find s_n with s_n * template|missing[n] = 0.
struct IAProblem {
  Matrix fixed;
  int free_rows = 0;
  std::vector<std::vector<std::size_t>> missing;
  // Optional structure: dataset and sub-message index of each column.
  // Required by the polynomial strategy, which also needs fixed row j to
  // be the indicator of sub-message j.
  std::vector<int> col_dataset;
  std::vector<int> col_part;
};

enum class IAStrategy { kDirect, kAlignment, kPolynomial };
std::string_view IAStrategyName(IAStrategy s);

struct IASolution {
  Matrix rows;  // fixed rows followed by the completed free rows
  Matrix E;     // stacked alignment vectors, one per row (may be empty)
  std::vector<int> e_owner;  // server of each row of E
  Matrix S;     // one row per server, length rows.rows()
  IAStrategy strategy = IAStrategy::kDirect;
};

struct IAOptions {
  int max_retries = 32;
  bool allow_polynomial = true;
  // Also require any rows.rows() of the s_n to be independent.
  bool require_mds = true;
};

// Throws IAInfeasible when no strategy succeeds.
IASolution IaSolve(const PrimeField& f, const IAProblem& prob, Rng& rng,
                   const IAOptions& opt = {});

// Checks every identity the solution must satisfy; returns a description
// of the first failure or an empty string.
std::string CheckIASolution(const PrimeField& f, const IAProblem& prob,
                            const IASolution& sol, bool require_mds = true);

// The two printed applicability inequalities and what the construction
// actually needs (m v >= m + v, v = unknown rows per server).
struct IARequirement {
  bool strict_form = false;  // strict inequality variant
  bool nonstrict_form = false;  // non-strict variant
  bool needed = false;
  bool discrepancy = false;    // the three verdicts are not all equal
};
IARequirement IaRequired(int N, int M, int m);

// Zero outside each server's zone.
bool SupportRespected(const TransmissionPlan& plan);
// Rows of D in rowspace(T_A) for the given servers.
bool DecodableFrom(const PrimeField& f, const TransmissionPlan& plan,
                   const std::vector<int>& servers);

nlohmann::ordered_json ToJson(const Matrix& m);
nlohmann::ordered_json ToJson(const TransmissionPlan& plan);

}  // namespace sgc

#endif  // SGC_CODEGEN_HPP_
