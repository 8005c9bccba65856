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


#ifndef SGC_SECURE_HPP_
#define SGC_SECURE_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "sgc/codegen.hpp"
#include "sgc/keysize.hpp"
#include "sgc/matrix.hpp"

namespace sgc {

// T = C * B with B's first m rows equal to D. Kc holds the last r columns
// of C: server n adds Kc[n] . (K_1..K_r) to its coded message.
struct KeyPlan {
  int m = 0;
  int r = 0;
  Matrix B;  // rank(T) x mK
  Matrix C;  // N x rank(T)
  Matrix Kc; // N x r
  std::vector<int> completion_rows;  // rows of T appended to D to form B

  Rational eta() const { return Rational(r, m); }
};

// Deterministic in the plan. Throws DemandNotRecoverable when D is not in
// rowspace(T).
KeyPlan GenKeys(const TransmissionPlan& plan);

// Same layout with every key coefficient zero: the insecure transmission.
KeyPlan ZeroKeys(KeyPlan keys);

// Message and key symbols come from separate streams of the same seed, so
// redrawing keys never perturbs messages and vice versa.
inline constexpr std::uint64_t kMessageStream = 0x6d657373616765ull;
inline constexpr std::uint64_t kKeyStream = 0x6b657973ull;

// mK x len sub-message symbols, row SubCol(k, j).
Matrix DrawMessages(const TransmissionPlan& plan, int len, std::uint64_t seed);
// r x len key symbols, uniform and independent of the messages.
Matrix DrawKeys(const TransmissionPlan& plan, const KeyPlan& keys, int len,
                std::uint64_t seed);

// X = T W + Kc K, one row per server.
Matrix Encode(const TransmissionPlan& plan, const KeyPlan& keys,
              const Matrix& messages, const Matrix& key_symbols);

// Coefficients c_j with c_j T_A = D_j and c_j Kc_A = 0, one row per j, over
// the listed servers. nullopt when some demand row has no such c_j.
std::optional<Matrix> CancellingDecoder(const TransmissionPlan& plan,
                                        const KeyPlan& keys,
                                        const std::vector<int>& servers);
bool DecodeCancellation(const TransmissionPlan& plan, const KeyPlan& keys,
                        const std::vector<int>& servers);

// Mutual information I(W; X | sum), measured in units of log q. For a
// linear scheme it is an integer: the dimension gap between the affine
// spaces X ranges over given the sum and given all of W.
struct MutualInformation {
  Rational log_q{0};
  double bits = 0.0;
  std::uint64_t states = 0;  // message-key tuples enumerated
  bool uniform = true;       // every conditional law was uniform on its support
};

struct SecurityVerdict {
  bool rank_check = false;
  std::optional<Row> witness;  // c T for a key-free c outside rowspace(D)
  std::optional<MutualInformation> mi;
  std::vector<std::string> notes;

  bool pass() const {
    return rank_check && (!mi || mi->log_q == Rational(0));
  }
};

// Every left-null vector c of Kc must map T into rowspace(D).
SecurityVerdict CheckSecurityRank(const TransmissionPlan& plan,
                                  const KeyPlan& keys);

inline constexpr std::uint64_t kMaxSecurityStates = 100000000;

// Enumerates every message and key tuple over F_q with one symbol per
// sub-message. Throws TooLarge above max_states.
MutualInformation ExhaustiveMutualInformation(
    const TransmissionPlan& plan, const KeyPlan& keys,
    std::uint64_t max_states = kMaxSecurityStates);

// Rank check plus the enumeration.
SecurityVerdict CheckSecurityExhaustive(
    const TransmissionPlan& plan, const KeyPlan& keys,
    std::uint64_t max_states = kMaxSecurityStates);

nlohmann::ordered_json ToJson(const KeyPlan& keys);
nlohmann::ordered_json ToJson(const MutualInformation& mi);
nlohmann::ordered_json ToJson(const SecurityVerdict& v);

}  // namespace sgc

#endif  // SGC_SECURE_HPP_
