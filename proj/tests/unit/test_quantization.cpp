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
#include "qgroupoid/quantization.hpp"
#include "qgroupoid/transmutation.hpp"

using namespace qg;
using qgtest::cocycle;
using qgtest::firstFailure;
using qgtest::groupoid;
using qgtest::ints;

namespace {

// D4 indices: 1, r, r², r³, s, rs, r²s, r³s.
constexpr std::size_t kOne = 0, kR = 1, kR2 = 2, kR3 = 3, kS = 4;

Vec productColumn(const Matrix& mul, std::size_t n, std::size_t a, std::size_t b) {
  return mul.apply(unitVec(n * n, a * n + b));
}

bool cocommutative(const QuantumGroupoid& h) {
  const Matrix c = h.base().comulMatrix();
  for (std::size_t i = 0; i < h.dim(); ++i) {
    const Vec d = c.apply(h.base().basis(i));
    if (flip(h.dim(), d) != d) return false;
  }
  return true;
}

}  // namespace

TEST(Quantization, TwoObjectAlgebraIsUnchanged) {
  const BraidedHopfPresentation p = quantize(groupoid("N"), cocycle("N.F"));
  EXPECT_EQ(p.kind, PresentationKind::Quantized);
  EXPECT_EQ(p.mul, groupoid("N").base().mulMatrix());
  EXPECT_EQ(p.comul, Matrix(4, 2, ints({1, 0, 0, 0, 0, 0, 0, 1})));
  EXPECT_EQ(p.counit, Matrix::identity(2));
  EXPECT_EQ(p.antipode, Matrix::identity(2));
}

TEST(Quantization, TrivialCocycleGivesTheUntwistedTransmutation) {
  const QuantumGroupoid& h = groupoid("kD4");
  const BraidedHopfPresentation q = quantize(h, cocycle("kD4.trivial"));
  const BraidedHopfPresentation t = selfTransmute(h, qgtest::qt("kD4.R"));
  EXPECT_EQ(q.carrier, t.carrier);
  EXPECT_EQ(q.mul, t.mul);
  EXPECT_EQ(q.comul, t.comul);
  EXPECT_EQ(q.counit, t.counit);
  EXPECT_EQ(q.antipode, t.antipode);
}

TEST(Quantization, ReflectionTwistDeformsTheProduct) {
  const QuantumGroupoid& h = groupoid("kD4");
  const BraidedHopfPresentation p = quantize(h, cocycle("kD4.reflection"));
  ASSERT_EQ(p.carrier.dim(), 8u);
  // F = 1⊗1 − 2e₋⊗e₋ with e₋ = (1−s)/2, and Ad_{e₋}(r) = (r − r³)/2.
  EXPECT_EQ(productColumn(p.mul, 8, kR, kR), unitVec(8, kOne));
  EXPECT_EQ(productColumn(p.mul, 8, kR, kR3), unitVec(8, kR2));
  EXPECT_EQ(productColumn(p.mul, 8, kS, kR), h.base().multiply(unitVec(8, kS), unitVec(8, kR)));
  EXPECT_NE(p.mul, h.base().mulMatrix());
}

TEST(Quantization, ReflectionTwistDeformsTheCoproduct) {
  const QuantumGroupoid& h = groupoid("kD4");
  const Matrix delta = twistedCoproductOnH(h, cocycle("kD4.reflection"));
  // Δ_F(r) = r⊗r − ½(r − r³)⊗(r − r³).
  Vec diff = zeroVec(8);
  diff[kR] = 1;
  diff[kR3] = -1;
  Vec expected = tensorVec(unitVec(8, kR), unitVec(8, kR));
  axpy(expected, Rational(-1, 2), tensorVec(diff, diff));
  EXPECT_EQ(delta.apply(unitVec(8, kR)), expected);
}

TEST(Quantization, CentralBicharacterCollapses) {
  // Every idempotent separating the central r² acts by zero under Ad.
  const QuantumGroupoid& h = groupoid("kD4");
  EXPECT_EQ(twistedProductOnH(h, cocycle("kD4.bichar")), h.base().mulMatrix());
  EXPECT_EQ(twistedCoproductOnH(h, cocycle("kD4.bichar")), h.base().comulMatrix());
}

TEST(Quantization, CommutativeAlgebraCollapses) {
  const QuantumGroupoid& h = groupoid("kZ2xZ2");
  const BraidedHopfPresentation p = quantize(h, cocycle("kZ2xZ2.bichar"));
  EXPECT_EQ(p.mul, h.base().mulMatrix());
  EXPECT_EQ(p.comul, h.base().comulMatrix());
  EXPECT_EQ(firstFailure(verifyQuantization(p)), "");
}

TEST(Quantization, AxiomsOnEveryCocommutativeCocycle) {
  std::size_t covered = 0;
  for (const auto& [name, doc] : qgtest::zoo().cocycles) {
    const QuantumGroupoid& h = groupoid(doc.algebra);
    if (!cocommutative(h)) continue;
    const VerificationReport r = verifyQuantization(quantize(h, doc.cocycle));
    EXPECT_EQ(firstFailure(r), "") << name;
    EXPECT_NE(r.find("comul-algebra-map"), nullptr);
    ++covered;
  }
  EXPECT_GE(covered, 8u);
}

TEST(Quantization, FourFactorExchangeHolds) {
  for (const char* name : {"N.F", "kZ2.bichar", "kD4.reflection", "pair2.trivial"}) {
    const CocycleDocument& doc = qgtest::zoo().cocycles.at(name);
    EXPECT_EQ(firstFailure(checkFourFactorExchange(groupoid(doc.algebra), doc.cocycle)), "")
        << name;
  }
}

TEST(Quantization, AntipodeIsTheRestrictedAntipode) {
  const QuantumGroupoid& h = groupoid("kD4");
  const BraidedHopfPresentation p = quantize(h, cocycle("kD4.reflection"));
  EXPECT_EQ(p.antipode, h.antipode());
}

TEST(Quantization, NeedsCocommutativity) {
  const QuantumGroupoid dual = qgtest::functionAlgebra(groupoid("kD4"));
  const WeakCocycle trivial{dual.base().deltaOne(), dual.base().deltaOneCop()};
  try {
    quantize(dual, trivial);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), "not-cocommutative");
  }
}

TEST(Quantization, MutatedProductFails) {
  BraidedHopfPresentation p = quantize(groupoid("kD4"), cocycle("kD4.reflection"));
  p.mul(0, kR * 8 + kR) = 0;
  p.mul(kR2, kR * 8 + kR) = 1;  // the undeformed value r·r = r²
  EXPECT_FALSE(verifyQuantization(p).passed());
}
