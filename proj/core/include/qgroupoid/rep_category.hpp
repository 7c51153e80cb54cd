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
#include <vector>

#include "qgroupoid/qt_cocycle.hpp"
#include "qgroupoid/report.hpp"
#include "qgroupoid/subspace.hpp"
#include "qgroupoid/weak_hopf.hpp"

namespace qg {

/// A finite-dimensional left module: action[i] is the matrix of e_i.
struct HModule {
  std::string name;
  std::vector<std::string> basisNames;
  std::vector<Matrix> action;

  std::size_t dim() const { return basisNames.size(); }
  /// Matrix of a general element Σ h_i e_i.
  Matrix act(const Vec& h) const;
};

bool operator==(const HModule& a, const HModule& b);

HModule regularModule(const WeakBialgebra& h);
/// Ad_h(g) = h₁ g S(h₂) on all of H.
HModule adjointModule(const QuantumGroupoid& h);
/// Restriction to an invariant subspace, in its canonical coordinates.
/// Throws Error("closure-violation").
HModule restrictModule(const HModule& m, const Subspace& sub, std::string name);
/// The unit object H_t with h ⊳ z = ε_t(hz), in canonical H_t coordinates.
HModule unitObject(const QuantumGroupoid& h);

/// (gh)·v = g·(h·v) on basis pairs and 1·v = v.
VerificationReport checkModule(const WeakBialgebra& h, const HModule& m);

/// Coproduct that defines the action on tensor products: Δ(x), or
/// F⁻¹Δ(x)F in the twisted category when a cocycle is given.
Vec tensorCoproduct(const WeakBialgebra& h, const Vec& x, const WeakCocycle* wc);

/// Σ x[a,b] M(a)⊗N(b) as a matrix on M⊗N.
Matrix pairAction(const HModule& m, const HModule& n, const Vec& x);

/// Applies Σ x[a,b,c] M(a)⊗M(b)⊗M(c) to a vector of M^{⊗3}.
Vec tripleAction(const HModule& m, const Vec& x, const Vec& v);

/// Flip M⊗N → N⊗M as a permutation matrix.
Matrix swapMatrix(std::size_t dm, std::size_t dn);

struct TruncatedTensor {
  Matrix projector;   // action of the coproduct of 1 on M⊗N
  Subspace image;     // canonical basis of the projector's image
  Matrix inclusion;   // image coordinates → M⊗N
  Matrix projection;  // M⊗N → image coordinates of P·v
  HModule module;     // induced action in image coordinates
};

/// M ⊗_t N, plain (wc == nullptr) or F-twisted. Throws
/// Error("mismatched-algebra") if the modules act through different algebras.
TruncatedTensor truncatedTensor(const QuantumGroupoid& h, const HModule& m, const HModule& n,
                                const WeakCocycle* wc = nullptr);

/// l(z ⊗_t v) = z·v and r(v ⊗_t z) = S⁻¹(z)·v, as matrices from image
/// coordinates of H_t⊗_tM and M⊗_tH_t to M.
struct Unitors {
  Matrix l;
  Matrix r;
  TruncatedTensor left;
  TruncatedTensor right;
};
Unitors unitors(const QuantumGroupoid& h, const HModule& m, const WeakCocycle* wc = nullptr);

/// Both unitors are H-linear and bijective.
VerificationReport checkUnitors(const QuantumGroupoid& h, const HModule& m,
                                const WeakCocycle* wc = nullptr);

/// A braiding v⊗w ↦ B·(w⊗v) between truncated tensors, with its inverse
/// w⊗v ↦ B'·(v⊗w). Matrices act on image coordinates.
struct Braiding {
  Vec element;
  Vec inverseElement;
  Matrix forward;   // M⊗_tN → N⊗_tM
  Matrix backward;  // N⊗_tM → M⊗_tN
  Matrix plain;     // v⊗w ↦ B·(w⊗v) on the untruncated spaces
  TruncatedTensor source;
  TruncatedTensor target;
};

Braiding makeBraiding(const QuantumGroupoid& h, const HModule& m, const HModule& n,
                      const Vec& element, const Vec& inverseElement, const WeakCocycle* wc);

/// Ψ(v⊗w) = R^{(2)}·w ⊗ R^{(1)}·v, inverse w⊗v ↦ R^{-(1)}·v ⊗ R^{-(2)}·w.
Braiding braidingPsi(const QuantumGroupoid& h, const QTStructure& qt, const HModule& m,
                     const HModule& n);

/// Φ(m⊗n) = Ad_{F^{-(1)}F^{(2)}}(n) ⊗ Ad_{F^{-(2)}F^{(1)}}(m) on F-twisted
/// truncated tensors. Throws Error("not-cocommutative").
Braiding braidingPhi(const QuantumGroupoid& h, const WeakCocycle& wc, const HModule& m,
                     const HModule& n);

/// Braid elements: τ(R) for Ψ, F⁻¹·τ(F) for Φ.
Vec psiElement(const QuantumGroupoid& h, const QTStructure& qt);
Vec phiElement(const QuantumGroupoid& h, const WeakCocycle& wc);

/// Invertibility on the images and H-linearity of both directions.
VerificationReport checkBraiding(const QuantumGroupoid& h, const Braiding& b, const HModule& m,
                                 const HModule& n, const WeakCocycle* wc = nullptr);

/// Ψ' ∘ (f⊗g) = (g⊗f) ∘ Ψ for module maps f: M→M', g: N→N'.
VerificationReport checkNaturality(const QuantumGroupoid& h, const Braiding& before,
                                   const Braiding& after, const Matrix& f, const Matrix& g);

/// Both hexagon identities on M⊗M⊗M (optional slow check).
VerificationReport checkHexagons(const QuantumGroupoid& h, const HModule& m, const Vec& element,
                                 const WeakCocycle* wc = nullptr);

}  // namespace qg
