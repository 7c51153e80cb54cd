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

#include "qgroupoid/report.hpp"
#include "qgroupoid/weak_hopf.hpp"

namespace qg {

/// R ∈ Δ^cop(1)(H⊗H)Δ(1) with weak inverse R⁻¹ ∈ Δ(1)(H⊗H)Δ^cop(1).
struct QTStructure {
  Vec R;
  Vec Rinv;
};

/// F ∈ Δ(1)(H⊗H)Δ^cop(1) with weak inverse F⁻¹ ∈ Δ^cop(1)(H⊗H)Δ(1).
struct WeakCocycle {
  Vec F;
  Vec Finv;
};

struct DrinfeldElement {
  Vec u;
  Vec uInv;
};

/// v = F^{-(1)}S(F^{-(2)}), v⁻¹ = S(F^{(1)})F^{(2)}. The report carries the
/// coproduct identity for v⁻¹ and, as a note, the value of v·v⁻¹.
struct TwistElements {
  Vec v;
  Vec vInv;
  VerificationReport report;
};

/// Solves X with x·X = leftTarget, X·x = rightTarget and
/// X = leftUnit·X·rightUnit. Throws Error("no-inverse").
Vec solveWeakInverse(const WeakBialgebra& h, const Vec& x, const Vec& leftTarget,
                     const Vec& rightTarget, const Vec& leftUnit, const Vec& rightUnit);

/// Builds a QT structure, solving R⁻¹ when not supplied.
QTStructure makeQTStructure(const WeakBialgebra& h, Vec R, std::optional<Vec> Rinv = {});
/// Builds a cocycle, solving F⁻¹ when not supplied.
WeakCocycle makeWeakCocycle(const WeakBialgebra& h, Vec F, std::optional<Vec> Finv = {});

VerificationReport checkQuasitriangular(const QuantumGroupoid& h, const QTStructure& qt);

/// The standard identity list for quasitriangular quantum groupoids
/// (H_t/H_s exchange rules, counital marginals, antipode relations).
VerificationReport derivedRIdentities(const QuantumGroupoid& h, const QTStructure& qt);

/// u = S(R^{(2)})R^{(1)} and u⁻¹ = R^{(2)}S²(R^{(1)}). Throws
/// Error("u-not-invertible") if they are not mutually inverse.
DrinfeldElement drinfeldElement(const QuantumGroupoid& h, const QTStructure& qt);

/// u·u⁻¹ = u⁻¹·u = 1, S² = u(·)u⁻¹ and Δ(u) = R⁻¹R₂₁⁻¹(u⊗u).
VerificationReport checkDrinfeldElement(const QuantumGroupoid& h, const QTStructure& qt,
                                        const DrinfeldElement& d);

/// R = Δ^cop(1)Δ(1), R⁻¹ = Δ(1)Δ^cop(1). Throws Error("not-cocommutative").
QTStructure canonicalR(const WeakBialgebra& h);

bool isCanonicalR(const WeakBialgebra& h, const QTStructure& qt);

/// Membership, invertibility, the cocycle equation, the six H_s/H_t
/// compatibility relations, and three equivalent forms of the cocycle
/// equation.
VerificationReport checkWeakCocycle(const QuantumGroupoid& h, const WeakCocycle& wc);

TwistElements twistElements(const QuantumGroupoid& h, const WeakCocycle& wc);

// Helpers on H⊗H shared by the higher modules.

/// (A⊗B)x for x in a two-fold tensor space.
Vec applyPair(const Matrix& a, const Matrix& b, const Vec& x);
/// Σ_{a,b} x[a,b]·f(e_a)·g(e_b) for x in H⊗H.
Vec contract(const WeakBialgebra& h, const Vec& x, const Matrix& f, const Matrix& g);

}  // namespace qg
