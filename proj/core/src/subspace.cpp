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

#include "qgroupoid/subspace.hpp"

namespace qg {

Subspace Subspace::span(std::size_t ambient, const std::vector<Vec>& vectors) {
  Subspace s(ambient);
  if (vectors.empty()) return s;
  const EchelonForm ef = rref(Matrix::fromRows(vectors, ambient));
  for (std::size_t i = 0; i < ef.pivots.size(); ++i) {
    s.basis_.push_back(ef.reduced.row(i));
  }
  s.pivots_ = ef.pivots;
  return s;
}

Subspace Subspace::whole(std::size_t ambient) {
  Subspace s(ambient);
  for (std::size_t i = 0; i < ambient; ++i) {
    s.basis_.push_back(unitVec(ambient, i));
    s.pivots_.push_back(i);
  }
  return s;
}

std::optional<Vec> Subspace::coordinates(const Vec& x) const {
  if (x.size() != ambient_) throw Error("dimension-mismatch", "subspace coordinates");
  Vec coords(pivots_.size());
  for (std::size_t i = 0; i < pivots_.size(); ++i) coords[i] = x[pivots_[i]];
  if (combine(coords) != x) return std::nullopt;
  return coords;
}

bool Subspace::containsAll(const Subspace& other) const {
  for (const auto& v : other.basis_) {
    if (!contains(v)) return false;
  }
  return true;
}

Vec Subspace::combine(const Vec& coords) const {
  Vec x = zeroVec(ambient_);
  for (std::size_t i = 0; i < basis_.size(); ++i) axpy(x, coords.at(i), basis_[i]);
  return x;
}

Matrix Subspace::inclusion() const { return Matrix::fromColumns(ambient_, basis_); }

Subspace kernelBasis(const Matrix& a) {
  const EchelonForm ef = rref(a);
  std::vector<bool> isPivot(a.cols(), false);
  for (auto p : ef.pivots) isPivot[p] = true;
  std::vector<Vec> vectors;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (isPivot[free]) continue;
    Vec v = unitVec(a.cols(), free);
    for (std::size_t i = 0; i < ef.pivots.size(); ++i) v[ef.pivots[i]] = -ef.reduced(i, free);
    vectors.push_back(std::move(v));
  }
  return Subspace::span(a.cols(), vectors);
}

Subspace imageBasis(const Matrix& a) {
  std::vector<Vec> cols;
  cols.reserve(a.cols());
  for (std::size_t c = 0; c < a.cols(); ++c) cols.push_back(a.column(c));
  return Subspace::span(a.rows(), cols);
}

Subspace tensorSubspace(const Subspace& a, const Subspace& b) {
  std::vector<Vec> vectors;
  for (const auto& u : a.basis()) {
    for (const auto& v : b.basis()) {
      Vec w = zeroVec(u.size() * v.size());
      for (std::size_t i = 0; i < u.size(); ++i) {
        if (isZero(u[i])) continue;
        for (std::size_t j = 0; j < v.size(); ++j) w[i * v.size() + j] = u[i] * v[j];
      }
      vectors.push_back(std::move(w));
    }
  }
  return Subspace::span(a.ambientDim() * b.ambientDim(), vectors);
}

Matrix restrictMap(const Matrix& map, const Subspace& source, const Subspace& target) {
  Matrix out(target.dim(), source.dim());
  for (std::size_t j = 0; j < source.dim(); ++j) {
    const Vec image = map.apply(source.vector(j));
    const auto coords = target.coordinates(image);
    if (!coords) {
      throw Error("closure-violation",
                  "image of carrier basis vector " + std::to_string(j) + " = " +
                      formatVec(image) + " leaves the target subspace");
    }
    out.setColumn(j, *coords);
  }
  return out;
}

}  // namespace qg
