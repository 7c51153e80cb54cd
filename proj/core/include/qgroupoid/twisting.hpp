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

#include <string>

#include "qgroupoid/quantization.hpp"
#include "qgroupoid/transmutation.hpp"

namespace qg {

/// (H̃, R̃) with Δ̃(h) = F⁻¹Δ(h)F, S̃(h) = vS(h)v⁻¹, R̃ = F₂₁⁻¹RF and
/// R̃⁻¹ = F⁻¹R⁻¹F₂₁.
struct TwistedPair {
  QuantumGroupoid original;
  QTStructure originalQt;
  WeakCocycle cocycle;
  QuantumGroupoid twisted;
  QTStructure twistedQt;
  TwistElements v;
};

/// Throws Error("twist-axiom-failure") naming the first failing check of
/// the twisted pair.
TwistedPair twist(const QuantumGroupoid& h, const QTStructure& qt, const WeakCocycle& wc);

/// α(a) = Ad_{F¹}(a)F² and α⁻¹(a) = F¹ a v S(F²) between the carriers of
/// C_H(H_s)_F and C_H̃(H̃_s), in canonical carrier coordinates.
struct AlphaMaps {
  Matrix alpha;
  Matrix alphaInverse;
  Subspace source;
  Subspace target;
  VerificationReport report;  // equivalent form and two-sided inverse
};

/// Requires cocommutative H and R = Δcop(1)Δ(1): Error("not-cocommutative"),
/// Error("precondition-unmet"); Error("carrier-mismatch") if α does not map
/// one carrier onto the other.
AlphaMaps alphaMap(const QuantumGroupoid& h, const QTStructure& qt, const WeakCocycle& wc);

/// Δ(v⁻¹) = (S⊗S)(F₂₁⁻¹)(v⁻¹⊗v⁻¹)F⁻¹.
VerificationReport checkVInverseCoproduct(const QuantumGroupoid& h, const WeakCocycle& wc);

/// The F-twisted module category of H against the module category of H̃:
/// tensor actions on the regular and adjoint modules, unit objects, and
/// braid elements agree.
VerificationReport checkCategoryIdentification(const TwistedPair& tp);

/// α is an isomorphism of Hopf algebras in the category: module map,
/// algebra map, unit, coalgebra map, counit, antipode, bijectivity. Notes
/// whether the two serialized presentations coincide.
VerificationReport verifyIsomorphism(const QuantumGroupoid& h, const QTStructure& qt,
                                     const WeakCocycle& wc);

/// Canonical text of carrier, action and the five maps (kind and braid
/// excluded), for byte-level comparison and golden files.
std::string serializePresentation(const BraidedHopfPresentation& p);

}  // namespace qg
