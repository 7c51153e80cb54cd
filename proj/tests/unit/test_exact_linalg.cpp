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
#include "qgroupoid/matrix.hpp"
#include "qgroupoid/subspace.hpp"

using namespace qg;
using qgtest::ints;
using qgtest::vec;

TEST(Rational, ParsesAndReducesCanonically) {
  EXPECT_EQ(parseRational("6/4"), Rational(3, 2));
  EXPECT_EQ(parseRational("-2/6"), Rational(-1, 3));
  EXPECT_EQ(parseRational("+5"), Rational(5));
  EXPECT_EQ(formatRational(Rational(-6, 4)), "-3/2");
  EXPECT_EQ(formatRational(Rational(4, 2)), "2");
  EXPECT_EQ(formatRational(Rational(0)), "0");
}

TEST(Rational, RejectsMalformedText) {
  for (const char* bad : {"", "1/0", "a", "1/-2", "1.5", "2/", "/3", "--1"}) {
    try {
      parseRational(bad);
      ADD_FAILURE() << "accepted '" << bad << "'";
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), "parse-error") << bad;
    }
  }
}

TEST(Rational, RoundTripsThroughText) {
  for (long p = -7; p <= 7; ++p) {
    for (long q = 1; q <= 6; ++q) {
      Rational r(p, q);
      r.canonicalize();
      EXPECT_EQ(parseRational(formatRational(r)), r);
    }
  }
}

TEST(Matrix, ProductsAndKron) {
  const Matrix a(2, 2, ints({1, 2, 3, 4}));
  const Matrix b(2, 2, ints({0, 1, 1, 0}));
  EXPECT_EQ(a * b, Matrix(2, 2, ints({2, 1, 4, 3})));
  const Matrix k = kron(Matrix::identity(2), b);
  EXPECT_EQ(k.rows(), 4u);
  EXPECT_EQ(k(0, 1), Rational(1));
  EXPECT_EQ(k(2, 3), Rational(1));
  EXPECT_EQ(k(0, 3), Rational(0));
  EXPECT_EQ(kron(a, b) * kron(b, a), kron(a * b, b * a));
}

TEST(Matrix, RrefOfKnownMatrix) {
  const EchelonForm e = rref(Matrix(3, 3, ints({1, 2, 3, 2, 4, 6, 1, 0, 1})));
  EXPECT_EQ(e.pivots, (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(e.reduced.row(0), ints({1, 0, 1}));
  EXPECT_EQ(e.reduced.row(1), ints({0, 1, 1}));
  EXPECT_EQ(rank(e.reduced), 2u);
}

TEST(Matrix, SolveDistinguishesUniqueAndFamilies) {
  const Matrix a(2, 2, ints({2, 1, 1, 1}));
  EXPECT_EQ(*solveLinear(a, ints({3, 2}), Uniqueness::Required), ints({1, 1}));
  const Matrix singular(2, 2, ints({1, 1, 2, 2}));
  EXPECT_FALSE(solveLinear(singular, ints({1, 0})).has_value());
  EXPECT_TRUE(solveLinear(singular, ints({1, 2})).has_value());
  EXPECT_THROW(solveLinear(singular, ints({1, 2}), Uniqueness::Required), Error);
}

TEST(Matrix, InverseIsExact) {
  const Matrix a(3, 3, ints({2, 0, 1, 1, 1, 0, 0, 3, 1}));
  const auto inv = inverse(a);
  ASSERT_TRUE(inv);
  EXPECT_EQ(a * *inv, Matrix::identity(3));
  EXPECT_EQ(*inv * a, Matrix::identity(3));
  EXPECT_EQ((*inv)(0, 0), Rational(1, 5));
  EXPECT_FALSE(inverse(Matrix(2, 2, ints({1, 2, 2, 4}))));
  EXPECT_FALSE(inverse(Matrix(2, 3)));
}

TEST(Subspace, KernelAndImageAreCanonical) {
  const Matrix a(2, 3, ints({1, 1, 0, 0, 0, 1}));
  const Subspace ker = kernelBasis(a);
  ASSERT_EQ(ker.dim(), 1u);
  EXPECT_EQ(ker.vector(0), ints({1, -1, 0}));
  const Subspace img = imageBasis(a);
  EXPECT_EQ(img, Subspace::whole(2));
  // Two spanning sets of the same plane give identical canonical bases.
  EXPECT_EQ(Subspace::span(3, {ints({1, 1, 0}), ints({0, 1, 1})}),
            Subspace::span(3, {ints({1, 2, 1}), ints({2, 1, -1})}));
}

TEST(Subspace, CoordinatesAtPivots) {
  const Subspace s = Subspace::span(3, {ints({1, 0, 2}), ints({0, 1, 3})});
  EXPECT_EQ(*s.coordinates(ints({2, -1, 1})), ints({2, -1}));
  EXPECT_FALSE(s.coordinates(ints({0, 0, 1})));
  EXPECT_EQ(s.combine(ints({2, -1})), ints({2, -1, 1}));
  EXPECT_EQ(s.inclusion().column(1), ints({0, 1, 3}));
}

TEST(Subspace, TensorOfCanonicalBasesIsCanonical) {
  const Subspace a = Subspace::span(2, {ints({1, 1})});
  const Subspace b = Subspace::whole(2);
  const Subspace t = tensorSubspace(a, b);
  EXPECT_EQ(t, Subspace::span(4, {ints({1, 0, 1, 0}), ints({0, 1, 0, 1})}));
  EXPECT_EQ(*t.coordinates(ints({3, 5, 3, 5})), ints({3, 5}));
}

TEST(Subspace, RestrictMapReportsEscapes) {
  const Subspace line = Subspace::span(2, {ints({1, 1})});
  const Matrix swap(2, 2, ints({0, 1, 1, 0}));
  EXPECT_EQ(restrictMap(swap, line, line), Matrix(1, 1, ints({1})));
  const Matrix shear(2, 2, ints({1, 1, 0, 1}));
  try {
    restrictMap(shear, line, line);
    FAIL() << "expected closure-violation";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), "closure-violation");
  }
}

TEST(TensorOps, PermuteAndEmbedLegs) {
  const WeakBialgebra& h = qgtest::groupoid("kZ2").base();
  const Vec g = h.basis(1), one = h.unit();
  const Vec x = tensorVec(tensorVec(g, one), one);
  EXPECT_EQ(permuteLegs(2, 3, x, {1, 2, 0}), tensorVec(tensorVec(one, one), g));
  EXPECT_EQ(embedLegs(h, 3, tensorVec(g, one), {2, 0}), tensorVec(tensorVec(one, one), g));
  EXPECT_EQ(flip(2, tensorVec(g, one)), tensorVec(one, g));
  EXPECT_EQ(comulOnLeg(h, 1, g, 0), tensorVec(g, g));
}
