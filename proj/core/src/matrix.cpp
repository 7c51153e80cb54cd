// Copyright 2026 The qgroupoid Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qgroupoid/matrix.hpp"

#include <cassert>
#include <utility>

namespace qg {

Matrix::Matrix(std::size_t rows, std::size_t cols, Vec rowMajor)
    : rows_(rows), cols_(cols), data_(std::move(rowMajor)) {
  if (data_.size() != rows * cols) {
    throw Error("dimension-mismatch", "matrix entry count does not equal rows*cols");
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::fromColumns(std::size_t rows, const std::vector<Vec>& columns) {
  Matrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) m.setColumn(c, columns[c]);
  return m;
}

Matrix Matrix::fromRows(const std::vector<Vec>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw Error("dimension-mismatch", "ragged rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Vec Matrix::column(std::size_t c) const {
  Vec v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Vec Matrix::row(std::size_t r) const {
  return Vec(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
             data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

void Matrix::setColumn(std::size_t c, const Vec& v) {
  if (v.size() != rows_) throw Error("dimension-mismatch", "column length");
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
}

Vec Matrix::apply(const Vec& x) const {
  if (x.size() != cols_) throw Error("dimension-mismatch", "matrix-vector product");
  Vec y = zeroVec(rows_);
  for (std::size_t c = 0; c < cols_; ++c) {
    if (qg::isZero(x[c])) continue;
    for (std::size_t r = 0; r < rows_; ++r) {
      const Rational& a = (*this)(r, c);
      if (!qg::isZero(a)) y[r] += a * x[c];
    }
  }
  return y;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

bool Matrix::isZero() const { return qg::isZero(data_); }

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw Error("dimension-mismatch", "matrix product");
  Matrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (qg::isZero(aik)) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Rational& bkj = b(k, j);
        if (!qg::isZero(bkj)) out(i, j) += aik * bkj;
      }
    }
  }
  return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
    throw Error("dimension-mismatch", "matrix sum");
  }
  Matrix out(a);
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i];
  return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
    throw Error("dimension-mismatch", "matrix difference");
  }
  Matrix out(a);
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] -= b.data_[i];
  return out;
}

Matrix operator*(const Rational& s, const Matrix& a) {
  Matrix out(a);
  for (auto& x : out.data_) x *= s;
  return out;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Rational& aij = a(i, j);
      if (isZero(aij)) continue;
      for (std::size_t k = 0; k < b.rows(); ++k) {
        for (std::size_t l = 0; l < b.cols(); ++l) {
          const Rational& bkl = b(k, l);
          if (!isZero(bkl)) out(i * b.rows() + k, j * b.cols() + l) = aij * bkl;
        }
      }
    }
  }
  return out;
}

Matrix vstack(const std::vector<Matrix>& blocks) {
  if (blocks.empty()) return Matrix();
  const std::size_t cols = blocks.front().cols();
  std::size_t rows = 0;
  for (const auto& b : blocks) {
    if (b.cols() != cols) throw Error("dimension-mismatch", "vstack column count");
    rows += b.rows();
  }
  Matrix out(rows, cols);
  std::size_t r0 = 0;
  for (const auto& b : blocks) {
    for (std::size_t r = 0; r < b.rows(); ++r) {
      for (std::size_t c = 0; c < cols; ++c) out(r0 + r, c) = b(r, c);
    }
    r0 += b.rows();
  }
  return out;
}

EchelonForm rref(Matrix a) {
  std::vector<std::size_t> pivots;
  std::size_t pivotRow = 0;
  for (std::size_t col = 0; col < a.cols() && pivotRow < a.rows(); ++col) {
    std::size_t sel = pivotRow;
    while (sel < a.rows() && isZero(a(sel, col))) ++sel;
    if (sel == a.rows()) continue;
    if (sel != pivotRow) {
      for (std::size_t c = col; c < a.cols(); ++c) swap(a(sel, c), a(pivotRow, c));
    }
    const Rational inv = 1 / a(pivotRow, col);
    for (std::size_t c = col; c < a.cols(); ++c) a(pivotRow, c) *= inv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == pivotRow || isZero(a(r, col))) continue;
      const Rational factor = a(r, col);
      for (std::size_t c = col; c < a.cols(); ++c) {
        if (!isZero(a(pivotRow, c))) a(r, c) -= factor * a(pivotRow, c);
      }
    }
    pivots.push_back(col);
    ++pivotRow;
  }
  return {std::move(a), std::move(pivots)};
}

std::size_t rank(const Matrix& a) { return rref(a).pivots.size(); }

std::optional<Vec> solveLinear(const Matrix& a, const Vec& b, Uniqueness uniqueness) {
  if (b.size() != a.rows()) throw Error("dimension-mismatch", "right-hand side length");
  Matrix aug(a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
    aug(r, a.cols()) = b[r];
  }
  const EchelonForm ef = rref(std::move(aug));
  if (!ef.pivots.empty() && ef.pivots.back() == a.cols()) return std::nullopt;
  if (uniqueness == Uniqueness::Required && ef.pivots.size() < a.cols()) {
    throw Error("non-unique", "solution space has dimension " +
                                  std::to_string(a.cols() - ef.pivots.size()));
  }
  Vec x = zeroVec(a.cols());
  for (std::size_t i = 0; i < ef.pivots.size(); ++i) {
    x[ef.pivots[i]] = ef.reduced(i, a.cols());
  }
  return x;
}

std::optional<Matrix> inverse(const Matrix& a) {
  if (a.rows() != a.cols()) return std::nullopt;
  const std::size_t n = a.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = a(r, c);
    aug(r, n + r) = 1;
  }
  const EchelonForm ef = rref(std::move(aug));
  if (ef.pivots.size() < n || ef.pivots[n - 1] != n - 1) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = ef.reduced(r, n + c);
  }
  return inv;
}

}  // namespace qg
