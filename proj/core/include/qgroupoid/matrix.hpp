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

#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "qgroupoid/rational.hpp"

namespace qg {

/// Dense row-major matrix over the rationals. Column j holds the image of the
/// j-th basis vector, so every structure map acts as `map * coordinates`.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}
  Matrix(std::size_t rows, std::size_t cols, Vec rowMajor);

  static Matrix identity(std::size_t n);
  static Matrix fromColumns(std::size_t rows, const std::vector<Vec>& columns);
  static Matrix fromRows(const std::vector<Vec>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Vec& data() const { return data_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  Vec column(std::size_t c) const;
  Vec row(std::size_t r) const;
  void setColumn(std::size_t c, const Vec& v);

  Vec apply(const Vec& x) const;
  Matrix transpose() const;
  bool isZero() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Rational& s, const Matrix& a);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Vec data_;
};

/// (A⊗B)[(i·rB+k),(j·cB+l)] = A[i,j]·B[k,l].
Matrix kron(const Matrix& a, const Matrix& b);

/// Stacks matrices with equal column counts on top of each other.
Matrix vstack(const std::vector<Matrix>& blocks);

struct EchelonForm {
  Matrix reduced;                   // reduced row-echelon form
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

EchelonForm rref(Matrix a);
std::size_t rank(const Matrix& a);

enum class Uniqueness { Any, Required };

/// Some x with A·x = b, or nullopt when the system is inconsistent. With
/// Uniqueness::Required a positive-dimensional solution set throws
/// Error("non-unique").
std::optional<Vec> solveLinear(const Matrix& a, const Vec& b,
                               Uniqueness uniqueness = Uniqueness::Any);

/// Two-sided inverse, or nullopt for singular/non-square input.
std::optional<Matrix> inverse(const Matrix& a);

}  // namespace qg
