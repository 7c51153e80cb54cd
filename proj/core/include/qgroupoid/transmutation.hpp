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

#include "qgroupoid/qt_cocycle.hpp"
#include "qgroupoid/rep_category.hpp"
#include "qgroupoid/subspace.hpp"
#include "qgroupoid/weak_hopf.hpp"

namespace qg {

/// f: source → target; column i of `matrix` is f(e_i).
struct QGMorphism {
  QuantumGroupoid source;
  QuantumGroupoid target;
  Matrix matrix;
};

QGMorphism identityMorphism(const QuantumGroupoid& h);

/// Multiplicativity, unit, comultiplicativity, counit, and the derived f∘S = S∘f.
VerificationReport checkMorphism(const QGMorphism& f);

/// C_L(L_s): elements of L commuting with the source subalgebra.
Subspace centralizer(const QuantumGroupoid& l);

/// Coordinates of v in `sub`; throws Error("closure-violation") naming `what`.
Vec coordinatesOrThrow(const Subspace& sub, const Vec& v, const std::string& what);

enum class PresentationKind { Transmuted, Quantized };

/// The braided category a presentation lives in: the braiding is
/// v⊗w ↦ braid·(w⊗v) with inverse w⊗v ↦ braidInverse·(v⊗w), and tensor
/// products use the cocycle-twisted coproduct when `cocycle` is set.
struct CategoryContext {
  Vec braid;
  Vec braidInverse;
  std::optional<WeakCocycle> cocycle;

  const WeakCocycle* twist() const { return cocycle ? &*cocycle : nullptr; }
};

/// A Hopf algebra in the module category of `acting`, carried by a
/// subspace of `ambient`. With k = dim carrier and t = dim H_t:
///   mul k×k², unit k×t, comul k²×k, counit t×k, antipode k×k,
/// where k² means the plain carrier⊗carrier coordinates. `comul` is the
/// projection of `rawComul` onto the truncated tensor.
struct BraidedHopfPresentation {
  PresentationKind kind = PresentationKind::Transmuted;
  QuantumGroupoid acting;
  QuantumGroupoid ambient;
  Subspace carrier;
  HModule module;
  HModule unitObject;
  Matrix mul;
  Matrix unit;
  Matrix rawComul;
  Matrix comul;
  Matrix counit;
  Matrix antipode;
  CategoryContext context;
};

/// Transmutation of L along f: H → L with the QT structure of H. Throws
/// Error("closure-violation") if any map leaves its codomain and
/// Error("dimension-mismatch") if f does not fit H and L.
BraidedHopfPresentation transmute(const QuantumGroupoid& h, const QTStructure& qt,
                                  const QGMorphism& f);
/// L = H and f = id.
BraidedHopfPresentation selfTransmute(const QuantumGroupoid& h, const QTStructure& qt);

/// Hopf-algebra-in-category axioms: H-linearity of the five maps, unit and
/// counit laws through the unitors, (co)associativity, braided bialgebra
/// compatibility, counit multiplicativity, grouplike unit, and the antipode.
VerificationReport verifyBraidedHopf(const BraidedHopfPresentation& p);

}  // namespace qg
