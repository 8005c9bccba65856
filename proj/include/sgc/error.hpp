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

#ifndef SGC_ERROR_HPP_
#define SGC_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace sgc {

enum class ErrorCode {
  kZeroInverse,
  kDimensionMismatch,
  kInvalidField,
  kInvalidParams,
  kNotDivisible,
  kUnsupportedBranch,
  kBranchPrecondition,
  kIAInfeasible,
  kConstructionFailed,
  kDemandNotRecoverable,
  kTooLarge,
  kFixtureMismatch,
  kIo,
};

std::string_view ErrorCodeName(ErrorCode code);

// All library failures surface as this exception; `code()` names the
// failing condition so callers (the CLI in particular) can map it to an exit
// status without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace sgc

#endif  // SGC_ERROR_HPP_
