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
#include "qgroupoid/qt_cocycle.hpp"

using namespace qg;
using qgtest::cocycle;
using qgtest::groupoid;
using qgtest::ints;
using qgtest::qt;
using qgtest::vec;

namespace {

const std::vector<std::pair<std::string, std::string>> kQT = {
    {"N", "N.R"},         {"kZ2", "kZ2.R"},         {"kZ2", "kZ2.super"}, {"kZ2xZ2", "kZ2xZ2.R"},
    {"kD4", "kD4.R"},     {"kD4", "kD4.central"},   {"pair2", "pair2.R"}, {"N+kZ2", "N+kZ2.R"},
    {"kD4+N", "kD4+N.R"}};

const std::vector<std::pair<std::string, std::string>> kCocycles = {
    {"N", "N.F"},           {"N", "N.trivial"},           {"kZ2", "kZ2.bichar"},
    {"kZ2xZ2", "kZ2xZ2.bichar"}, {"kD4", "kD4.trivial"},   {"kD4", "kD4.bichar"}, {"kD4", "kD4.reflection"},
    {"pair2", "pair2.trivial"},  {"kD4+N", "kD4+N.F"},     {"N+kZ2", "N+kZ2.trivial"}};

}  // namespace

TEST(QTStructure, DiagonalRMatrixOfTwoObjectAlgebra) {
  EXPECT_EQ(qt("N.R").R, ints({1, 0, 0, 1}));
  EXPECT_EQ(qt("N.R").Rinv, ints({1, 0, 0, 1}));
  EXPECT_TRUE(isCanonicalR(groupoid("N").base(), qt("N.R")));
}

TEST(QTStructure, SuperRMatrixHasExpectedCoefficients) {
  // ½(1⊗1 + 1⊗g + g⊗1 − g⊗g) in the basis order 1⊗1, 1⊗g, g⊗1, g⊗g.
  EXPECT_EQ(qt("kZ2.super").R, vec({"1/2", "1/2", "1/2", "-1/2"}));
  EXPECT_EQ(qt("kZ2.super").Rinv, qt("kZ2.super").R);
  EXPECT_FALSE(isCanonicalR(groupoid("kZ2").base(), qt("kZ2.super")));
}

TEST(QTStructure, AxiomsAndDerivedIdentitiesOnEveryFixture) {
  for (const auto& [alg, name] : kQT) {
    const QuantumGroupoid& h = groupoid(alg);
    EXPECT_EQ(qgtest::firstFailure(checkQuasitriangular(h, qt(name))), "") << name;
    const VerificationReport derived = derivedRIdentities(h, qt(name));
    EXPECT_EQ(derived.checks().size(), 13u);
    EXPECT_EQ(qgtest::firstFailure(derived), "") << name;
  }
}

TEST(QTStructure, InverseSolvedWhenAbsent) {
  for (const auto& [alg, name] : kQT) {
    const QTStructure solved = makeQTStructure(groupoid(alg).base(), qt(name).R);
    EXPECT_EQ(solved.Rinv, qt(name).Rinv) << name;
  }
}

TEST(QTStructure, NonInvertibleRRejected) {
  try {
    makeQTStructure(groupoid("kZ2").base(), ints({1, 1, 1, 1}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), "no-inverse");
  }
}

TEST(QTStructure, PerturbedRFailsNamedCheck) {
  QTStructure bad = qt("kZ2.super");
  bad.R[3] = Rational(1, 2);  // ½(1⊗1 + 1⊗g + g⊗1 + g⊗g) = Δ-incompatible
  const VerificationReport r = checkQuasitriangular(groupoid("kZ2"), bad);
  EXPECT_FALSE(r.passed());
  const Check* c = r.firstFailure();
  ASSERT_TRUE(c && c->witness);
  EXPECT_NE(c->witness->lhs, c->witness->rhs);
}

TEST(QTStructure, CanonicalRNeedsCocommutativity) {
  const QuantumGroupoid dual = qgtest::functionAlgebra(groupoid("kD4"));
  try {
    canonicalR(dual.base());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), "not-cocommutative");
  }
}

TEST(DrinfeldElement, KnownValues) {
  // Canonical R gives u = 1; the super R gives u = g; the central one u = r².
  EXPECT_EQ(drinfeldElement(groupoid("N"), qt("N.R")).u, ints({1, 1}));
  EXPECT_EQ(drinfeldElement(groupoid("kZ2"), qt("kZ2.super")).u, ints({0, 1}));
  EXPECT_EQ(drinfeldElement(groupoid("kD4"), qt("kD4.central")).u, unitVec(8, 2));
  EXPECT_EQ(drinfeldElement(groupoid("pair2"), qt("pair2.R")).u, groupoid("pair2").base().unit());
}

TEST(DrinfeldElement, IdentitiesOnEveryFixture) {
  for (const auto& [alg, name] : kQT) {
    const QuantumGroupoid& h = groupoid(alg);
    const DrinfeldElement d = drinfeldElement(h, qt(name));
    EXPECT_EQ(qgtest::firstFailure(checkDrinfeldElement(h, qt(name), d)), "") << name;
  }
}

TEST(WeakCocycle, AxiomsOnEveryFixture) {
  for (const auto& [alg, name] : kCocycles) {
    const VerificationReport r = checkWeakCocycle(groupoid(alg), cocycle(name));
    EXPECT_EQ(qgtest::firstFailure(r), "") << name;
    for (const char* form : {"equivalent-form-1", "equivalent-form-2", "equivalent-form-3"}) {
      EXPECT_NE(r.find(form), nullptr) << form;
    }
  }
}

TEST(WeakCocycle, CyclicBicharacterEqualsSuperR) {
  // With e± = (1±g)/2, F = Σβ e_c⊗e_d and β(−,−) = −1 expands to ½(1⊗1+1⊗g+g⊗1−g⊗g).
  EXPECT_EQ(cocycle("kZ2.bichar").F, qt("kZ2.super").R);
}

TEST(WeakCocycle, DihedralBicharacterIsNontrivial) {
  const WeakCocycle& wc = cocycle("kD4.bichar");
  const WeakBialgebra& h = groupoid("kD4").base();
  EXPECT_NE(wc.F, h.deltaOne());
  EXPECT_EQ(tensorMultiply(h, 2, wc.F, wc.Finv), h.deltaOne());
  EXPECT_NE(flip(8, wc.F), wc.F);
}

TEST(WeakCocycle, InverseSolvedWhenAbsent) {
  for (const auto& [alg, name] : kCocycles) {
    EXPECT_EQ(makeWeakCocycle(groupoid(alg).base(), cocycle(name).F).Finv, cocycle(name).Finv)
        << name;
  }
}

TEST(WeakCocycle, PerturbedCocycleEquationFails) {
  // Rescaling one coefficient keeps F invertible but breaks the cocycle equation.
  const WeakBialgebra& h = groupoid("kZ2").base();
  Vec f = cocycle("kZ2.bichar").F;
  f[1] = Rational(1, 4);
  const WeakCocycle bad = makeWeakCocycle(h, f);
  const VerificationReport r = checkWeakCocycle(groupoid("kZ2"), bad);
  const Check* c = r.find("cocycle");
  ASSERT_NE(c, nullptr);
  EXPECT_FALSE(c->passed);
}

TEST(TwistElements, TrivialForDiagonalCocycle) {
  const TwistElements t = twistElements(groupoid("N"), cocycle("N.F"));
  EXPECT_EQ(t.v, ints({1, 1}));
  EXPECT_EQ(t.vInv, ints({1, 1}));
  EXPECT_TRUE(t.report.passed());
}

TEST(TwistElements, VInverseCoproductOnEveryFixture) {
  for (const auto& [alg, name] : kCocycles) {
    const TwistElements t = twistElements(groupoid(alg), cocycle(name));
    EXPECT_EQ(qgtest::firstFailure(t.report), "") << name;
    EXPECT_FALSE(t.report.notes().empty());
  }
}

TEST(Helpers, ContractAndApplyPair) {
  const WeakBialgebra& h = groupoid("kZ2").base();
  const Matrix id = Matrix::identity(2);
  // Σ x[a,b] e_a e_b for x = 1⊗g + g⊗g gives g + 1.
  EXPECT_EQ(contract(h, ints({0, 1, 0, 1}), id, id), ints({1, 1}));
  const Matrix swap(2, 2, ints({0, 1, 1, 0}));
  EXPECT_EQ(applyPair(swap, id, ints({0, 1, 0, 0})), ints({0, 0, 0, 1}));
}
