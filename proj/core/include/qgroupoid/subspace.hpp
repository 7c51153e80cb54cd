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

#include <optional>
#include <vector>

#include "qgroupoid/matrix.hpp"

namespace qg {

/// A linear subspace of Q^ambient held in reduced row-echelon form, so two
/// subspaces are equal exactly when their bases compare equal.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient) : ambient_(ambient) {}

  /// Canonical basis of the span of the given vectors.
  static Subspace span(std::size_t ambient, const std::vector<Vec>& vectors);
  static Subspace whole(std::size_t ambient);

  std::size_t ambientDim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Vec>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  const Vec& vector(std::size_t i) const { return basis_.at(i); }

  /// Coordinates of x in the canonical basis, or nullopt when x lies outside.
  /// In RREF the coordinates are read off the pivot entries.
  std::optional<Vec> coordinates(const Vec& x) const;
  bool contains(const Vec& x) const { return coordinates(x).has_value(); }
  bool containsAll(const Subspace& other) const;

  /// Vector of the ambient space with the given coordinates.
  Vec combine(const Vec& coords) const;

  /// ambient × dim matrix whose columns are the basis vectors.
  Matrix inclusion() const;

  friend bool operator==(const Subspace& a, const Subspace& b) = default;

 private:
  std::size_t ambient_ = 0;
  std::vector<Vec> basis_;
  std::vector<std::size_t> pivots_;
};

/// Canonical basis of {x : A·x = 0}.
Subspace kernelBasis(const Matrix& a);

/// Canonical basis of the column space of A.
Subspace imageBasis(const Matrix& a);

/// Span of all u⊗v for u in A and v in B, listed in (i, j) order. The tensor
/// of two RREF bases is again in RREF.
Subspace tensorSubspace(const Subspace& a, const Subspace& b);

/// Matrix of the linear map x ↦ coordinates(map(x)) restricted to a
/// subspace, throwing Error("closure-violation") when an image escapes
/// the target.
Matrix restrictMap(const Matrix& map, const Subspace& source, const Subspace& target);

}  // namespace qg
