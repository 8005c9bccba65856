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

#ifndef SGC_FIELD_HPP_
#define SGC_FIELD_HPP_

#include <cstdint>
#include <random>

namespace sgc {

// A residue in [0, q). Matrices store these densely; the modulus lives in
// the PrimeField that owns the arithmetic.
using Elem = std::uint32_t;

inline constexpr std::uint32_t kDefaultModulus = 65537;

// Arithmetic in F_q for an odd prime q < 2^31.
//
// q must be odd so that 2 is invertible and distinct from 1; several
// constructions use the literal coefficient 2.
class PrimeField {
 public:
  explicit PrimeField(std::uint32_t q = kDefaultModulus);

  std::uint32_t modulus() const { return q_; }

  Elem add(Elem a, Elem b) const {
    std::uint32_t s = a + b;
    return s >= q_ ? s - q_ : s;
  }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + q_ - b; }
  Elem neg(Elem a) const { return a == 0 ? 0 : q_ - a; }
  Elem mul(Elem a, Elem b) const {
    return static_cast<Elem>(static_cast<std::uint64_t>(a) * b % q_);
  }
  Elem pow(Elem base, std::uint64_t exp) const;

  // Throws Error(kZeroInverse) for a == 0.
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

  // Maps any signed integer (e.g. -5 or a transcribed fixture entry) into
  // [0, q).
  Elem from_int(std::int64_t v) const;
  // Exact fraction num/den as a field element; den must be nonzero mod q.
  Elem from_fraction(std::int64_t num, std::int64_t den) const;
  // Centered representative in (-q/2, q/2], for human-readable output.
  std::int64_t to_signed(Elem a) const;

  bool operator==(const PrimeField& o) const { return q_ == o.q_; }

 private:
  std::uint32_t q_;
};

bool IsPrime(std::uint64_t n);

// Deterministic 64-bit stream. Element sampling reduces raw draws with `%`
// rather than std::uniform_int_distribution so that a seed produces the same
// coefficients on every standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  Elem uniform(const PrimeField& f) {
    return static_cast<Elem>(engine_() % f.modulus());
  }
  Elem nonzero(const PrimeField& f) {
    return static_cast<Elem>(engine_() % (f.modulus() - 1) + 1);
  }
  std::uint64_t below(std::uint64_t bound) { return engine_() % bound; }

  // Independent child stream; `stream` distinguishes siblings.
  Rng fork(std::uint64_t stream);

 private:
  std::mt19937_64 engine_;
};

// splitmix64 finalizer, used to derive well-separated seeds.
std::uint64_t MixSeed(std::uint64_t seed, std::uint64_t stream);

}  // namespace sgc

#endif  // SGC_FIELD_HPP_
