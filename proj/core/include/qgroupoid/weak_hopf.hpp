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
#include <string>
#include <vector>

#include "qgroupoid/matrix.hpp"
#include "qgroupoid/rational.hpp"
#include "qgroupoid/report.hpp"
#include "qgroupoid/subspace.hpp"

namespace qg {

struct Term {
  std::size_t index;
  Rational coeff;
};
using SparseVec = std::vector<Term>;

SparseVec sparse(const Vec& v);

/// Finite-dimensional weak bialgebra given by structure constants over a
/// named basis e_0..e_{n-1}:
///   e_i·e_j = Σ_k mul[(i·n+j)·n+k] e_k,   Δ(e_i) = Σ_{j,k} comul[(i·n+j)·n+k] e_j⊗e_k.
/// Elements of H^{⊗r} are dense vectors of length n^r, leg 0 most significant.
class WeakBialgebra {
 public:
  WeakBialgebra() = default;
  WeakBialgebra(std::string name, std::vector<std::string> basisNames, Vec mul, Vec unit,
                Vec comul, Vec counit);

  const std::string& name() const { return name_; }
  std::size_t dim() const { return basisNames_.size(); }
  const std::vector<std::string>& basisNames() const { return basisNames_; }
  const Vec& mulTensor() const { return mul_; }
  const Vec& unit() const { return unit_; }
  const Vec& comulTensor() const { return comul_; }
  const Vec& counit() const { return counit_; }

  const SparseVec& basisProduct(std::size_t i, std::size_t j) const {
    return mulSparse_[i * dim() + j];
  }
  const SparseVec& basisCoproduct(std::size_t i) const { return comulSparse_[i]; }

  Vec multiply(const Vec& a, const Vec& b) const;
  Vec comultiply(const Vec& a) const;
  Rational counitOf(const Vec& a) const;
  Vec basis(std::size_t i) const { return unitVec(dim(), i); }

  Matrix leftMultiplication(const Vec& a) const;   // x ↦ a·x
  Matrix rightMultiplication(const Vec& a) const;  // x ↦ x·a
  Matrix mulMatrix() const;                        // n × n², a⊗b ↦ ab
  Matrix comulMatrix() const;                      // n² × n

  Vec deltaOne() const;     // Δ(1) = 1₁⊗1₂
  Vec deltaOneCop() const;  // Δ^cop(1) = 1₂⊗1₁

  WeakBialgebra renamed(std::string name) const;

 private:
  std::string name_;
  std::vector<std::string> basisNames_;
  Vec mul_, unit_, comul_, counit_;
  std::vector<SparseVec> mulSparse_;
  std::vector<SparseVec> comulSparse_;
};

/// Equal structure constants and unit/counit; names are ignored.
bool structurallyEqual(const WeakBialgebra& a, const WeakBialgebra& b);

/// A weak bialgebra with a bijective antipode. Construction rejects a
/// non-invertible S with Error("antipode-not-bijective").
class QuantumGroupoid {
 public:
  QuantumGroupoid() = default;
  QuantumGroupoid(WeakBialgebra base, Matrix antipode);

  const WeakBialgebra& base() const { return base_; }
  const std::string& name() const { return base_.name(); }
  std::size_t dim() const { return base_.dim(); }
  const Matrix& antipode() const { return antipode_; }
  const Matrix& antipodeInverse() const { return antipodeInverse_; }

  Vec S(const Vec& a) const { return antipode_.apply(a); }
  Vec Sinv(const Vec& a) const { return antipodeInverse_.apply(a); }

  QuantumGroupoid renamed(std::string name) const;

 private:
  WeakBialgebra base_;
  Matrix antipode_;
  Matrix antipodeInverse_;
};

bool structurallyEqual(const QuantumGroupoid& a, const QuantumGroupoid& b);

// ---------------------------------------------------------------------------
// Tensor powers of an algebra.

/// Product in H^{⊗rank}: (x·y) with factorwise multiplication.
Vec tensorMultiply(const WeakBialgebra& h, std::size_t rank, const Vec& x, const Vec& y);

/// Places a tensor with legs.size() legs at the given positions of a
/// rank-`rank` tensor, filling the remaining legs with 1.
Vec embedLegs(const WeakBialgebra& h, std::size_t rank, const Vec& x,
              const std::vector<std::size_t>& legs);

/// Applies Δ to one leg, producing a tensor of rank+1.
Vec comulOnLeg(const WeakBialgebra& h, std::size_t rank, const Vec& x, std::size_t leg);

/// Applies a linear map (dim × dim) to one leg.
Vec mapOnLeg(std::size_t n, std::size_t rank, const Vec& x, std::size_t leg, const Matrix& m);

/// Output leg k carries input leg perm[k].
Vec permuteLegs(std::size_t n, std::size_t rank, const Vec& x,
                const std::vector<std::size_t>& perm);

/// τ(x) for x in H⊗H.
Vec flip(std::size_t n, const Vec& x);

/// u⊗v as a flat vector.
Vec tensorVec(const Vec& u, const Vec& v);

/// x is viewed as [outer][m.cols()][inner]; the middle block is replaced by
/// its image under m.
Vec applyToBlock(const Vec& x, std::size_t outer, std::size_t inner, const Matrix& m);

/// n×n matrix view of a two-leg tensor, X[a][b] = x[a·n+b].
Matrix asMatrix(std::size_t n, const Vec& x);

// ---------------------------------------------------------------------------
// Counital maps and subalgebras.

Matrix epsilonTMatrix(const WeakBialgebra& h);     // ε_t(x) = ε(1₁x)1₂
Matrix epsilonSMatrix(const WeakBialgebra& h);     // ε_s(x) = 1₁ε(x1₂)
Matrix epsilonSbarMatrix(const WeakBialgebra& h);  // ε̄_s(x) = ε(x1₁)1₂
Matrix epsilonTbarMatrix(const WeakBialgebra& h);  // ε̄_t(x) = 1₁ε(1₂x)

Vec epsilonT(const WeakBialgebra& h, const Vec& x);
Vec epsilonS(const WeakBialgebra& h, const Vec& x);
Vec epsilonSbar(const WeakBialgebra& h, const Vec& x);
Vec epsilonTbar(const WeakBialgebra& h, const Vec& x);

Subspace targetSubalgebra(const WeakBialgebra& h);
Subspace sourceSubalgebra(const WeakBialgebra& h);

/// (f*g) = μ∘(f⊗g)∘Δ.
Matrix convolve(const WeakBialgebra& h, const Matrix& f, const Matrix& g);

/// The unique S with S*id = ε_s, id*S = ε_t and S*id*S = S. Throws
/// Error("no-antipode") or Error("non-unique").
Matrix solveAntipode(const WeakBialgebra& h);

bool isCocommutative(const WeakBialgebra& h);
bool isCommutative(const WeakBialgebra& h);

// ---------------------------------------------------------------------------
// Axiom suites. Every "for all h" axiom is checked on basis tuples; both
// sides are multilinear, so this is exact.

/// Associativity and unit (pairs/triples), coassociativity and counit,
/// multiplicativity of Δ (pairs), weak unit, weak counit (triples).
VerificationReport checkWeakBialgebra(const WeakBialgebra& h);

/// checkWeakBialgebra plus the three antipode axioms, anti-multiplicativity,
/// anti-comultiplicativity and bijectivity of S.
VerificationReport checkQuantumGroupoid(const QuantumGroupoid& h);

}  // namespace qg
