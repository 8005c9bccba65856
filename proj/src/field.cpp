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

#include "sgc/field.hpp"

#include <string>

#include "sgc/error.hpp"

namespace sgc {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kZeroInverse: return "ZeroInverse";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kInvalidField: return "InvalidField";
    case ErrorCode::kInvalidParams: return "InvalidParams";
    case ErrorCode::kNotDivisible: return "NotDivisible";
    case ErrorCode::kUnsupportedBranch: return "UnsupportedBranch";
    case ErrorCode::kBranchPrecondition: return "BranchPrecondition";
    case ErrorCode::kIAInfeasible: return "IAInfeasible";
    case ErrorCode::kConstructionFailed: return "ConstructionFailed";
    case ErrorCode::kDemandNotRecoverable: return "DemandNotRecoverable";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kFixtureMismatch: return "FixtureMismatch";
    case ErrorCode::kIo: return "Io";
  }
  return "Unknown";
}

bool IsPrime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint32_t q) : q_(q) {
  if (q < 3 || q >= (1u << 31) || !IsPrime(q)) {
    throw Error(ErrorCode::kInvalidField,
                "modulus must be an odd prime below 2^31, got " +
                    std::to_string(q));
  }
}

Elem PrimeField::pow(Elem base, std::uint64_t exp) const {
  Elem result = 1;
  base %= q_;
  while (exp > 0) {
    if (exp & 1) result = mul(result, base);
    base = mul(base, base);
    exp >>= 1;
  }
  return result;
}

Elem PrimeField::inv(Elem a) const {
  if (a % q_ == 0) throw Error(ErrorCode::kZeroInverse, "inverse of 0");
  // Extended Euclid on signed 64-bit; q < 2^31 keeps everything in range.
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = q_, new_r = a % q_;
  while (new_r != 0) {
    std::int64_t quot = r / new_r;
    std::int64_t tmp = t - quot * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - quot * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += q_;
  return static_cast<Elem>(t);
}

Elem PrimeField::from_int(std::int64_t v) const {
  std::int64_t r = v % static_cast<std::int64_t>(q_);
  if (r < 0) r += q_;
  return static_cast<Elem>(r);
}

Elem PrimeField::from_fraction(std::int64_t num, std::int64_t den) const {
  return mul(from_int(num), inv(from_int(den)));
}

std::int64_t PrimeField::to_signed(Elem a) const {
  return a > q_ / 2 ? static_cast<std::int64_t>(a) - q_
                    : static_cast<std::int64_t>(a);
}

std::uint64_t MixSeed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

Rng Rng::fork(std::uint64_t stream) { return Rng(MixSeed(next(), stream)); }

}  // namespace sgc
