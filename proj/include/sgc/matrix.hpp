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

#ifndef SGC_MATRIX_HPP_
#define SGC_MATRIX_HPP_

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "sgc/field.hpp"

namespace sgc {

using Row = std::vector<Elem>;

// Dense row-major matrix of residues. The matrix does not know its modulus;
// every operation that does arithmetic takes the PrimeField explicitly.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static Matrix Identity(std::size_t n);
  // All rows must share one length. An empty list gives a 0 x 0 matrix.
  static Matrix FromRows(const std::vector<Row>& rows);
  static Matrix FromRows(std::size_t cols, const std::vector<Row>& rows);
  static Matrix Random(std::size_t rows, std::size_t cols,
                       const PrimeField& f, Rng& rng);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0; }

  Elem& operator()(std::size_t r, std::size_t c) {
    return data_[r * cols_ + c];
  }
  Elem operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  std::span<Elem> row(std::size_t r) {
    return {data_.data() + r * cols_, cols_};
  }
  std::span<const Elem> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  Row row_copy(std::size_t r) const {
    auto s = row(r);
    return Row(s.begin(), s.end());
  }

  void append_row(std::span<const Elem> r);
  void append_rows(const Matrix& m);

  std::vector<Row> to_rows() const;
  const std::vector<Elem>& data() const { return data_; }

  bool is_zero() const;
  bool operator==(const Matrix& o) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Elem> data_;
};

Matrix Transpose(const Matrix& m);
Matrix Multiply(const PrimeField& f, const Matrix& a, const Matrix& b);
Row MultiplyRow(const PrimeField& f, std::span<const Elem> c, const Matrix& m);
Matrix SelectRows(const Matrix& m, std::span<const std::size_t> idx);
Matrix SelectCols(const Matrix& m, std::span<const std::size_t> idx);
Matrix VStack(const Matrix& top, const Matrix& bottom);
Matrix HStack(const Matrix& left, const Matrix& right);

// Reduced row echelon form. `pivots[i]` is the pivot column of row i.
struct Echelon {
  Matrix reduced;  // rank() rows
  std::vector<std::size_t> pivots;
  std::size_t rank() const { return pivots.size(); }
};

Echelon Reduce(const PrimeField& f, const Matrix& m);
std::size_t Rank(const PrimeField& f, const Matrix& m);

// Rows form a basis of {c : c M = 0}; there are rows(M) - rank(M) of them.
Matrix LeftNullspace(const PrimeField& f, const Matrix& m);
// Rows form a basis of {v : M v^T = 0}.
Matrix RightNullspace(const PrimeField& f, const Matrix& m);

// True iff rowspace(a) is contained in rowspace(b).
bool RowSpaceContains(const PrimeField& f, const Matrix& b, const Matrix& a);
bool SameRowSpace(const PrimeField& f, const Matrix& a, const Matrix& b);

// Membership queries against a fixed row space. Construction does one
// elimination; each query then costs O(rank * cols).
class RowSpaceSolver {
 public:
  // With `track_coefficients`, Solve returns c such that c * space == target.
  RowSpaceSolver(const PrimeField& f, const Matrix& space,
                 bool track_coefficients = true);

  std::size_t rank() const { return pivots_.size(); }
  bool Contains(std::span<const Elem> target) const;
  // Throws DimensionMismatch on a length mismatch; nullopt when absent.
  std::optional<Row> Solve(std::span<const Elem> target) const;

 private:
  PrimeField f_;
  std::size_t space_rows_;
  std::size_t cols_;
  bool track_;
  Matrix reduced_;    // rank rows, pivots normalized to 1
  Matrix transform_;  // reduced_ = transform_ * space
  std::vector<std::size_t> pivots_;
};

std::optional<Row> SolveRowMembership(const PrimeField& f,
                                      std::span<const Elem> target,
                                      const Matrix& space);

}  // namespace sgc

#endif  // SGC_MATRIX_HPP_
