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

#include "sgc/matrix.hpp"

#include <algorithm>
#include <string>

#include "sgc/error.hpp"
#include "sgc/kernels.hpp"

namespace sgc {

namespace {

void SwapRows(Matrix& a, std::size_t i, std::size_t j) {
  if (i == j) return;
  auto ri = a.row(i);
  auto rj = a.row(j);
  std::swap_ranges(ri.begin(), ri.end(), rj.begin());
}

// Gauss-Jordan elimination in place, pivoting only on the first
// `pivot_cols` columns. On return rows [0, rank) hold the normalized pivot
// rows and the remaining rows are zero on those columns.
std::vector<std::size_t> GaussJordan(const PrimeField& f, Matrix& a,
                                     std::size_t pivot_cols) {
  const auto& k = kernels::Active();
  const std::uint32_t q = f.modulus();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < pivot_cols && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c) == 0) ++p;
    if (p == a.rows()) continue;
    SwapRows(a, p, r);
    k.scale(a.row(r), f.inv(a(r, c)), q);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i != r && a(i, c) != 0) k.axpy(a.row(i), a.row(r), f.neg(a(i, c)), q);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

void CheckSameCols(const Matrix& a, const Matrix& b, const char* what) {
  if (a.cols() != b.cols() && !a.empty() && !b.empty()) {
    throw Error(ErrorCode::kDimensionMismatch,
                std::string(what) + ": column counts " +
                    std::to_string(a.cols()) + " vs " +
                    std::to_string(b.cols()));
  }
}

}  // namespace

Matrix Matrix::Identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::FromRows(const std::vector<Row>& rows) {
  return FromRows(rows.empty() ? 0 : rows.front().size(), rows);
}

Matrix Matrix::FromRows(std::size_t cols, const std::vector<Row>& rows) {
  Matrix m(0, cols);
  for (const auto& r : rows) m.append_row(r);
  return m;
}

Matrix Matrix::Random(std::size_t rows, std::size_t cols, const PrimeField& f,
                      Rng& rng) {
  Matrix m(rows, cols);
  for (auto& x : m.data_) x = rng.uniform(f);
  return m;
}

void Matrix::append_row(std::span<const Elem> r) {
  if (rows_ == 0 && cols_ == 0) cols_ = r.size();
  if (r.size() != cols_) {
    throw Error(ErrorCode::kDimensionMismatch,
                "append_row: expected " + std::to_string(cols_) +
                    " entries, got " + std::to_string(r.size()));
  }
  data_.insert(data_.end(), r.begin(), r.end());
  ++rows_;
}

void Matrix::append_rows(const Matrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) append_row(m.row(i));
}

std::vector<Row> Matrix::to_rows() const {
  std::vector<Row> out;
  out.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out.push_back(row_copy(i));
  return out;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(),
                     [](Elem x) { return x == 0; });
}

Matrix Transpose(const Matrix& m) {
  Matrix t(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) t(j, i) = m(i, j);
  return t;
}

Matrix Multiply(const PrimeField& f, const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "multiply: " + std::to_string(a.rows()) + "x" +
                    std::to_string(a.cols()) + " by " +
                    std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
  const auto& k = kernels::Active();
  Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t l = 0; l < a.cols(); ++l)
      if (a(i, l) != 0) k.axpy(out.row(i), b.row(l), a(i, l), f.modulus());
  return out;
}

Row MultiplyRow(const PrimeField& f, std::span<const Elem> c,
                const Matrix& m) {
  if (c.size() != m.rows()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "row times matrix: length " + std::to_string(c.size()) +
                    " vs " + std::to_string(m.rows()) + " rows");
  }
  const auto& k = kernels::Active();
  Row out(m.cols(), 0);
  for (std::size_t l = 0; l < c.size(); ++l)
    if (c[l] != 0) k.axpy(out, m.row(l), c[l], f.modulus());
  return out;
}

Matrix SelectRows(const Matrix& m, std::span<const std::size_t> idx) {
  Matrix out(0, m.cols());
  for (std::size_t i : idx) out.append_row(m.row(i));
  return out;
}

Matrix SelectCols(const Matrix& m, std::span<const std::size_t> idx) {
  Matrix out(m.rows(), idx.size());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < idx.size(); ++j) out(i, j) = m(i, idx[j]);
  return out;
}

Matrix VStack(const Matrix& top, const Matrix& bottom) {
  CheckSameCols(top, bottom, "vstack");
  Matrix out(0, top.empty() ? bottom.cols() : top.cols());
  out.append_rows(top);
  out.append_rows(bottom);
  return out;
}

Matrix HStack(const Matrix& left, const Matrix& right) {
  if (left.rows() != right.rows()) {
    throw Error(ErrorCode::kDimensionMismatch, "hstack: row counts differ");
  }
  Matrix out(left.rows(), left.cols() + right.cols());
  for (std::size_t i = 0; i < left.rows(); ++i) {
    std::copy(left.row(i).begin(), left.row(i).end(), out.row(i).begin());
    std::copy(right.row(i).begin(), right.row(i).end(),
              out.row(i).begin() + static_cast<std::ptrdiff_t>(left.cols()));
  }
  return out;
}

Echelon Reduce(const PrimeField& f, const Matrix& m) {
  Matrix a = m;
  auto pivots = GaussJordan(f, a, a.cols());
  Echelon e;
  e.reduced = Matrix(0, m.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i) e.reduced.append_row(a.row(i));
  e.pivots = std::move(pivots);
  return e;
}

std::size_t Rank(const PrimeField& f, const Matrix& m) {
  Matrix a = m;
  return GaussJordan(f, a, a.cols()).size();
}

Matrix LeftNullspace(const PrimeField& f, const Matrix& m) {
  Matrix a = HStack(m, Matrix::Identity(m.rows()));
  const std::size_t rank = GaussJordan(f, a, m.cols()).size();
  Matrix out(0, m.rows());
  for (std::size_t i = rank; i < a.rows(); ++i)
    out.append_row(a.row(i).subspan(m.cols()));
  return out;
}

Matrix RightNullspace(const PrimeField& f, const Matrix& m) {
  Echelon e = Reduce(f, m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : e.pivots) is_pivot[p] = true;
  Matrix out(0, m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (is_pivot[c]) continue;
    Row v(m.cols(), 0);
    v[c] = 1;
    for (std::size_t i = 0; i < e.rank(); ++i)
      v[e.pivots[i]] = f.neg(e.reduced(i, c));
    out.append_row(v);
  }
  return out;
}

bool RowSpaceContains(const PrimeField& f, const Matrix& b, const Matrix& a) {
  if (a.empty()) return true;
  if (b.empty()) return a.is_zero();
  CheckSameCols(a, b, "row space containment");
  RowSpaceSolver solver(f, b, false);
  for (std::size_t i = 0; i < a.rows(); ++i)
    if (!solver.Contains(a.row(i))) return false;
  return true;
}

bool SameRowSpace(const PrimeField& f, const Matrix& a, const Matrix& b) {
  return RowSpaceContains(f, a, b) && RowSpaceContains(f, b, a);
}

RowSpaceSolver::RowSpaceSolver(const PrimeField& f, const Matrix& space,
                               bool track_coefficients)
    : f_(f),
      space_rows_(space.rows()),
      cols_(space.cols()),
      track_(track_coefficients) {
  Matrix a = track_ ? HStack(space, Matrix::Identity(space.rows())) : space;
  pivots_ = GaussJordan(f, a, cols_);
  reduced_ = Matrix(0, cols_);
  transform_ = Matrix(0, space_rows_);
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    reduced_.append_row(a.row(i).first(cols_));
    if (track_) transform_.append_row(a.row(i).subspan(cols_));
  }
}

bool RowSpaceSolver::Contains(std::span<const Elem> target) const {
  if (target.size() != cols_) {
    throw Error(ErrorCode::kDimensionMismatch,
                "membership target has " + std::to_string(target.size()) +
                    " entries, space has " + std::to_string(cols_));
  }
  const auto& k = kernels::Active();
  Row residual(target.begin(), target.end());
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    Elem c = residual[pivots_[i]];
    if (c != 0) k.axpy(residual, reduced_.row(i), f_.neg(c), f_.modulus());
  }
  return std::all_of(residual.begin(), residual.end(),
                     [](Elem x) { return x == 0; });
}

std::optional<Row> RowSpaceSolver::Solve(std::span<const Elem> target) const {
  if (target.size() != cols_) {
    throw Error(ErrorCode::kDimensionMismatch,
                "membership target has " + std::to_string(target.size()) +
                    " entries, space has " + std::to_string(cols_));
  }
  if (!track_) {
    throw Error(ErrorCode::kInvalidParams,
                "solver built without coefficient tracking");
  }
  const auto& k = kernels::Active();
  const std::uint32_t q = f_.modulus();
  Row residual(target.begin(), target.end());
  Row coef(space_rows_, 0);
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    Elem c = residual[pivots_[i]];
    if (c == 0) continue;
    k.axpy(residual, reduced_.row(i), f_.neg(c), q);
    k.axpy(coef, transform_.row(i), c, q);
  }
  if (!std::all_of(residual.begin(), residual.end(),
                   [](Elem x) { return x == 0; })) {
    return std::nullopt;
  }
  return coef;
}

std::optional<Row> SolveRowMembership(const PrimeField& f,
                                      std::span<const Elem> target,
                                      const Matrix& space) {
  return RowSpaceSolver(f, space).Solve(target);
}

}  // namespace sgc
