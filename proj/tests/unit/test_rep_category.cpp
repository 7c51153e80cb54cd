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

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "qgroupoid/rep_category.hpp"

using namespace qg;
using qgtest::cocycle;
using qgtest::firstFailure;
using qgtest::groupoid;
using qgtest::ints;
using qgtest::qt;

namespace {

Matrix product(const Matrix& a, const Matrix& b) { return a * b; }

/// Ad restricted to Ad_1(H), where it acts unitally.
HModule unitalAdjoint(const QuantumGroupoid& h) {
  const HModule ad = adjointModule(h);
  const Matrix one = ad.act(h.base().unit());
  std::vector<Vec> columns;
  for (std::size_t i = 0; i < h.dim(); ++i) columns.push_back(one.apply(unitVec(h.dim(), i)));
  return restrictModule(ad, Subspace::span(h.dim(), columns), "ad1(" + h.name() + ")");
}

}  // namespace

TEST(Modules, ZooAndDerivedModulesAreModules) {
  for (const auto& [name, doc] : qgtest::zoo().modules) {
    EXPECT_EQ(firstFailure(checkModule(groupoid(doc.algebra).base(), doc.module)), "") << name;
  }
  for (const char* alg : {"N", "kZ2", "kD4", "pair2", "N+kZ2"}) {
    const QuantumGroupoid& h = groupoid(alg);
    EXPECT_EQ(firstFailure(checkModule(h.base(), regularModule(h.base()))), "") << alg;
    EXPECT_EQ(firstFailure(checkModule(h.base(), unitalAdjoint(h))), "") << alg;
    EXPECT_EQ(firstFailure(checkModule(h.base(), unitObject(h))), "") << alg;
  }
}

TEST(Modules, AdjointOfUnitIsNotIdentityOnPairGroupoid) {
  // Ad_1(e12) = e11 e12 e11 + e22 e12 e22 = 0, so only Ad_1(H) = span{e11, e22}
  // is a unital module.
  const QuantumGroupoid& h = groupoid("pair2");
  const HModule ad = adjointModule(h);
  EXPECT_EQ(ad.act(h.base().unit()).apply(unitVec(4, 1)), zeroVec(4));
  EXPECT_FALSE(checkModule(h.base(), ad).passed());
  EXPECT_EQ(unitalAdjoint(h).dim(), 2u);
  const QuantumGroupoid& d4 = groupoid("kD4");
  EXPECT_EQ(firstFailure(checkModule(d4.base(), adjointModule(d4))), "");
}

TEST(Modules, BrokenActionIsCaught) {
  HModule bad = qgtest::zoo().modules.at("kZ2.sign").module;
  bad.action[1] = Matrix(1, 1, ints({2}));  // g·g·v = 4v ≠ v
  const VerificationReport r = checkModule(groupoid("kZ2").base(), bad);
  ASSERT_FALSE(r.passed());
  EXPECT_TRUE(r.firstFailure()->witness.has_value());
}

TEST(Modules, UnitObjectDimensionIsTargetDimension) {
  EXPECT_EQ(unitObject(groupoid("N")).dim(), 2u);
  EXPECT_EQ(unitObject(groupoid("kD4")).dim(), 1u);
  EXPECT_EQ(unitObject(groupoid("pair2")).dim(), 2u);
  EXPECT_EQ(unitObject(groupoid("N+kZ2")).dim(), 3u);
}

TEST(Modules, AdjointActionOfGroupElementIsConjugation) {
  // Ad_r(s) = r s r⁻¹ = r²s in D4 (index 6).
  const HModule ad = adjointModule(groupoid("kD4"));
  EXPECT_EQ(ad.action[1].apply(unitVec(8, 4)), unitVec(8, 6));
}

TEST(Modules, RestrictionRequiresInvariance) {
  const HModule reg = regularModule(groupoid("kD4").base());
  try {
    restrictModule(reg, Subspace::span(8, {unitVec(8, 1)}), "bad");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), "closure-violation");
  }
  const Vec sum = ints({1, 1, 1, 1, 1, 1, 1, 1});
  const HModule triv = restrictModule(reg, Subspace::span(8, {sum}), "trivial");
  EXPECT_EQ(triv.dim(), 1u);
  EXPECT_EQ(triv.action[5], Matrix::identity(1));
}

TEST(TruncatedTensor, ImageDimensions) {
  auto rank = [](const char* alg) {
    const QuantumGroupoid& h = groupoid(alg);
    const HModule reg = regularModule(h.base());
    return truncatedTensor(h, reg, reg).image.dim();
  };
  // Δ(1) = Σ e_i⊗e_i on N; 1⊗1 on groups; Σ e_ii⊗e_ii on the pair groupoid,
  // whose image is spanned by e_ab⊗e_ad.
  EXPECT_EQ(rank("N"), 2u);
  EXPECT_EQ(rank("kZ2"), 4u);
  EXPECT_EQ(rank("kD4"), 64u);
  EXPECT_EQ(rank("pair2"), 8u);
}

TEST(TruncatedTensor, ProjectorIsIdempotentAndActionIsAModule) {
  for (const char* alg : {"N", "kZ2", "pair2", "N+kZ2"}) {
    const QuantumGroupoid& h = groupoid(alg);
    const HModule reg = regularModule(h.base());
    const TruncatedTensor t = truncatedTensor(h, reg, reg);
    EXPECT_EQ(product(t.projector, t.projector), t.projector) << alg;
    EXPECT_EQ(product(t.projection, t.inclusion), Matrix::identity(t.image.dim())) << alg;
    EXPECT_EQ(firstFailure(checkModule(h.base(), t.module)), "") << alg;
  }
}

TEST(TruncatedTensor, TwistedProjectorUsesTwistedCoproduct) {
  const QuantumGroupoid& h = groupoid("kD4");
  const HModule ad = adjointModule(h);
  const TruncatedTensor t = truncatedTensor(h, ad, ad, &cocycle("kD4.bichar"));
  EXPECT_EQ(firstFailure(checkModule(h.base(), t.module)), "");
  EXPECT_EQ(tensorCoproduct(h.base(), h.base().unit(), nullptr), h.base().deltaOne());
}

TEST(TruncatedTensor, MismatchedAlgebrasRejected) {
  const QuantumGroupoid& h = groupoid("kD4");
  try {
    truncatedTensor(h, regularModule(h.base()), qgtest::zoo().modules.at("kZ2.sign").module);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), "mismatched-algebra");
  }
}

TEST(Unitors, LeftUnitorIsTheAction) {
  const QuantumGroupoid& h = groupoid("N");
  const HModule reg = regularModule(h.base());
  const Unitors u = unitors(h, reg);
  // H_t = N here, so z ⊗_t v ↦ z·v with e_i·e_j = δ_ij e_i.
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      const Vec coords = u.left.projection.apply(tensorVec(unitVec(2, i), unitVec(2, j)));
      EXPECT_EQ(u.l.apply(coords), i == j ? unitVec(2, i) : zeroVec(2));
    }
  }
}

TEST(Unitors, RightAgreesWithLeftOnCommutativeAlgebraWithTrivialAntipode) {
  // S = id and N commutative: r(v ⊗_t z) = z·v = l(z ⊗_t v).
  const QuantumGroupoid& h = groupoid("N");
  const HModule reg = regularModule(h.base());
  const Unitors u = unitors(h, reg);
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      const Vec z = unitVec(2, i), v = unitVec(2, j);
      EXPECT_EQ(u.r.apply(u.right.projection.apply(tensorVec(v, z))),
                u.l.apply(u.left.projection.apply(tensorVec(z, v))));
    }
  }
}

TEST(Unitors, LinearAndBijectiveOnFixtures) {
  for (const char* alg : {"N", "kZ2", "kD4", "pair2", "N+kZ2"}) {
    const QuantumGroupoid& h = groupoid(alg);
    EXPECT_EQ(firstFailure(checkUnitors(h, regularModule(h.base()))), "") << alg;
    EXPECT_EQ(firstFailure(checkUnitors(h, unitalAdjoint(h))), "") << alg;
  }
  const QuantumGroupoid& d4 = groupoid("kD4");
  EXPECT_EQ(firstFailure(checkUnitors(d4, adjointModule(d4), &cocycle("kD4.bichar"))), "");
}

TEST(Braiding, PsiIsDiagonalOnTwoObjectAlgebra) {
  const QuantumGroupoid& h = groupoid("N");
  const HModule reg = regularModule(h.base());
  const Braiding b = braidingPsi(h, qt("N.R"), reg, reg);
  // R = e1⊗e1 + e2⊗e2: e_i⊗e_i is fixed, mixed tensors are killed.
  EXPECT_EQ(b.plain, Matrix(4, 4, ints({1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1})));
  EXPECT_EQ(firstFailure(checkBraiding(h, b, reg, reg)), "");
}

TEST(Braiding, CanonicalPsiOnGroupAlgebraIsTheFlip) {
  const QuantumGroupoid& h = groupoid("kD4");
  const HModule reg = regularModule(h.base());
  EXPECT_EQ(psiElement(h, qt("kD4.R")), tensorVec(h.base().unit(), h.base().unit()));
  EXPECT_EQ(braidingPsi(h, qt("kD4.R"), reg, reg).plain, swapMatrix(8, 8));
}

TEST(Braiding, SuperPsiSignsOddTimesOdd) {
  const QuantumGroupoid& h = groupoid("kZ2");
  const HModule sign = qgtest::zoo().modules.at("kZ2.sign").module;
  const Braiding b = braidingPsi(h, qt("kZ2.super"), sign, sign);
  EXPECT_EQ(b.plain, Matrix(1, 1, ints({-1})));
}

TEST(Braiding, PhiOfTrivialCocycleIsTheFlip) {
  const QuantumGroupoid& h = groupoid("kD4");
  const HModule ad = adjointModule(h);
  EXPECT_EQ(braidingPhi(h, cocycle("kD4.trivial"), ad, ad).plain, swapMatrix(8, 8));
}

TEST(Braiding, PhiOfBicharacterIsSymmetric) {
  const QuantumGroupoid& h = groupoid("kD4");
  const WeakCocycle& wc = cocycle("kD4.bichar");
  // The bicharacter lives on <r², s>; r² is central, so every idempotent that
  // separates r² acts by zero on Ad and Φ collapses to the flip there.
  const HModule ad = adjointModule(h);
  const Braiding onAd = braidingPhi(h, wc, ad, ad);
  EXPECT_EQ(onAd.plain, swapMatrix(8, 8));
  EXPECT_EQ(product(onAd.forward, onAd.forward), Matrix::identity(onAd.source.image.dim()));
  EXPECT_EQ(firstFailure(checkBraiding(h, onAd, ad, ad, &wc)), "");
  // On the regular module the signs survive.
  const HModule reg = regularModule(h.base());
  const Braiding onReg = braidingPhi(h, wc, reg, reg);
  EXPECT_NE(onReg.plain, swapMatrix(8, 8));
  EXPECT_EQ(product(onReg.forward, onReg.forward), Matrix::identity(onReg.source.image.dim()));
  EXPECT_EQ(firstFailure(checkBraiding(h, onReg, reg, reg, &wc)), "");
}

TEST(Braiding, PhiNeedsCocommutativity) {
  const QuantumGroupoid dual = qgtest::functionAlgebra(groupoid("kD4"));
  const HModule reg = regularModule(dual.base());
  const WeakCocycle trivial{dual.base().deltaOne(), dual.base().deltaOneCop()};
  try {
    braidingPhi(dual, trivial, reg, reg);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), "not-cocommutative");
  }
}

TEST(Braiding, NaturalInBothArguments) {
  // Right multiplications are left-module endomorphisms of the regular module.
  const QuantumGroupoid& h = groupoid("kD4");
  const HModule reg = regularModule(h.base());
  const Braiding b = braidingPsi(h, qt("kD4.central"), reg, reg);
  const Matrix f = h.base().rightMultiplication(unitVec(8, 1));
  const Matrix g = h.base().rightMultiplication(unitVec(8, 4));
  EXPECT_EQ(firstFailure(checkNaturality(h, b, b, f, g)), "");
  // A map that is not H-linear breaks naturality: projection onto the line of 1.
  Matrix notLinear(8, 8);
  notLinear(0, 0) = 1;
  EXPECT_FALSE(checkNaturality(h, b, b, notLinear, g).passed());
}

TEST(Braiding, HexagonsHold) {
  const QuantumGroupoid& n = groupoid("N");
  EXPECT_EQ(firstFailure(checkHexagons(n, regularModule(n.base()), psiElement(n, qt("N.R")))),
            "");
  const QuantumGroupoid& z = groupoid("kZ2");
  EXPECT_EQ(
      firstFailure(checkHexagons(z, regularModule(z.base()), psiElement(z, qt("kZ2.super")))),
      "");
  const QuantumGroupoid& p = groupoid("pair2");
  EXPECT_EQ(firstFailure(checkHexagons(p, regularModule(p.base()), psiElement(p, qt("pair2.R")))),
            "");
  const QuantumGroupoid& d = groupoid("kD4");
  const WeakCocycle& wc = cocycle("kD4.bichar");
  EXPECT_EQ(firstFailure(checkHexagons(d, adjointModule(d), phiElement(d, wc), &wc)), "");
}

TEST(Braiding, NonBraidingElementFailsHexagon) {
  // 2·(1⊗1) is invertible but not a braiding.
  const QuantumGroupoid& z = groupoid("kZ2");
  const Vec twice = scale(psiElement(z, qt("kZ2.R")), Rational(2));
  EXPECT_FALSE(checkHexagons(z, regularModule(z.base()), twice).passed());
}
