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
#include <string>
#include <vector>

#include "qgroupoid/qt_cocycle.hpp"
#include "qgroupoid/serialize.hpp"
#include "qgroupoid/weak_hopf.hpp"

namespace qg {

/// A finite groupoid. compose[a][b] is the index of a∘b, defined exactly
/// when source(a) = target(b).
struct GroupoidSpec {
  struct Arrow {
    std::string name;
    std::size_t source;
    std::size_t target;
  };
  std::vector<std::string> objects;
  std::vector<Arrow> arrows;
  std::vector<std::vector<std::optional<std::size_t>>> compose;
  std::vector<std::size_t> inverse;
};

/// Throws Error("invalid-groupoid") naming the violated table entry.
void validateGroupoid(const GroupoidSpec& g);

/// Δ(a) = a⊗a, ε(a) = 1, S(a) = a⁻¹, 1 = Σ identities.
QuantumGroupoid groupoidAlgebra(const std::string& name, const GroupoidSpec& g);

GroupoidSpec discreteGroupoid(const std::vector<std::string>& objects);
/// Matrix units e_ij : j → i on n objects.
GroupoidSpec pairGroupoid(std::size_t objects);
/// One-object groupoid from a multiplication table over element indices.
GroupoidSpec groupAsGroupoid(const std::vector<std::string>& elements,
                             const std::vector<std::vector<std::size_t>>& table);

QuantumGroupoid cyclicGroupAlgebra2();    // kZ₂, basis 1, g
QuantumGroupoid kleinGroupAlgebra();      // kZ₂×Z₂, basis 1, a, b, ab
QuantumGroupoid dihedralGroupAlgebra4();  // kD₄, basis r^i s^j

/// Block-diagonal sum; 1 = 1_A + 1_B. Clashing basis names get "A."/"B."
/// prefixes.
QuantumGroupoid directSum(const std::string& name, const QuantumGroupoid& a,
                          const QuantumGroupoid& b);
/// x_A ⊕ x_B placed in the diagonal blocks of (A⊕B)^{⊗2}.
Vec directSum2(std::size_t dimA, std::size_t dimB, const Vec& xa, const Vec& xb);

/// F = Σ β(χ,ψ) e_χ⊗e_ψ over the characters of the elementary abelian
/// 2-group generated by `generators` (commuting involutions, given as basis
/// indices of a group algebra). beta[c][d] is indexed by character bitmasks.
/// Throws Error("not-a-bicharacter").
WeakCocycle bicharacterCocycle(const QuantumGroupoid& h, const std::vector<std::size_t>& generators,
                               const std::vector<std::vector<int>>& beta);

/// Builtin fixtures: the two-object diagonal algebra N, kZ₂, the pair
/// groupoid, kD₄, Klein four, direct sums, R-matrices and cocycles.
Library builtinZoo();

}  // namespace qg
