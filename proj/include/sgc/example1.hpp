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


#ifndef SGC_EXAMPLE1_HPP_
#define SGC_EXAMPLE1_HPP_

#include <string>
#include <vector>

#include "sgc/codegen.hpp"
#include "sgc/keysize.hpp"

namespace sgc {

// The printed (12, 7), m = 2 instance. Loading converts the part-major
// column order of the printed matrices to SubCol order and every index to
// 0-based.
struct Example1Fixture {
  Params params;
  std::uint32_t q = kDefaultModulus;
  Assignment printed;
  Matrix F;                 // h x mN
  std::vector<int> local_datasets;  // datasets covered by F1_prime and E
  Matrix F1_prime;          // 4 x (m * local_datasets)
  std::vector<int> e_servers;
  Matrix E;
  std::vector<int> s_servers;
  Matrix S;                 // rows over [f3; f4; f5; f6]
  Matrix group1_mix;        // m x m
  int h = 0;
  Rational eta;
};

// Fixture directory: $SGC_DATA_DIR if set, else the source tree's data/.
std::string DefaultDataDir();
std::string DefaultFixturePath();

// Throws Io when unreadable, FixtureMismatch when shapes are inconsistent.
Example1Fixture LoadExample1Fixture(const std::string& path,
                                    std::uint32_t q = kDefaultModulus);

struct IdentityCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

// Columns of the local datasets a server cannot compute, in local layout.
std::vector<std::size_t> LocalMissing(const Example1Fixture& fx, int server);

// The printed transmissions: group one mixes (F1 - F3, F2 - F4), group
// three sends s_n [f3; f4; f5; f6], group two sends s_{n+5} applied to
// [2 f1 - f3; 2 f2 - f4; f5; f6].
TransmissionPlan PinnedPlan(const Example1Fixture& fx);

// Every printed identity, in a fixed order.
std::vector<IdentityCheck> CheckFixture(const Example1Fixture& fx);

}  // namespace sgc

#endif  // SGC_EXAMPLE1_HPP_
