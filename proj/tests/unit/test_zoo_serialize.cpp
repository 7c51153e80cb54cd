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

#include <fstream>
#include <sstream>

#include "fixtures.hpp"
#include "qgroupoid/serialize.hpp"
#include "qgroupoid/zoo.hpp"

using namespace qg;
using qgtest::firstFailure;
using qgtest::ints;

namespace {

std::string data(const std::string& file) { return std::string(QG_TEST_DATA) + "/" + file; }

std::string readFile(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Parses `text` and returns the error, failing the test if none is thrown.
Error parseError(const std::string& text) {
  try {
    parseLibrary(text, "doc.qg");
  } catch (const Error& e) {
    return e;
  }
  ADD_FAILURE() << "accepted:\n" << text;
  return Error("none", "");
}

const char* kMinimalAlgebra =
    "kind: weak-bialgebra\n"
    "name: A\n"
    "dim: 1\n"
    "basis: x\n"
    "mul:\n"
    "  x x: 1\n"
    "unit: 1\n"
    "comul:\n"
    "  x: 1\n"
    "counit: 1\n";

}  // namespace

TEST(Groupoids, PairGroupoidTables) {
  const GroupoidSpec g = pairGroupoid(2);
  ASSERT_EQ(g.arrows.size(), 4u);
  EXPECT_EQ(g.arrows[1].name, "e12");
  EXPECT_EQ(g.arrows[1].target, 0u);
  EXPECT_EQ(g.arrows[1].source, 1u);
  EXPECT_EQ(g.compose[1][2], std::optional<std::size_t>(0));  // e12∘e21 = e11
  EXPECT_FALSE(g.compose[1][1].has_value());
  EXPECT_EQ(g.inverse[1], 2u);
  EXPECT_NO_THROW(validateGroupoid(g));
}

TEST(Groupoids, InvalidTablesRejected) {
  GroupoidSpec g = pairGroupoid(2);
  g.inverse[1] = 1;
  EXPECT_THROW(
      {
        try {
          validateGroupoid(g);
        } catch (const Error& e) {
          EXPECT_EQ(e.code(), "invalid-groupoid");
          throw;
        }
      },
      Error);
  GroupoidSpec h = pairGroupoid(2);
  h.compose[1][2] = 3;  // e12∘e21 must land on e11
  EXPECT_THROW(validateGroupoid(h), Error);
  GroupoidSpec k = pairGroupoid(2);
  k.compose[1][1] = 0;  // undefined composite given a value
  EXPECT_THROW(validateGroupoid(k), Error);
}

TEST(Groupoids, AlgebrasSatisfyTheAxioms) {
  for (std::size_t n : {1u, 2u, 3u}) {
    const QuantumGroupoid h = groupoidAlgebra("pair", pairGroupoid(n));
    EXPECT_EQ(h.dim(), n * n);
    EXPECT_EQ(firstFailure(checkQuantumGroupoid(h)), "") << n;
  }
  const QuantumGroupoid d = groupoidAlgebra("disc", discreteGroupoid({"a", "b", "c"}));
  EXPECT_EQ(d.base().unit(), ints({1, 1, 1}));
  EXPECT_EQ(firstFailure(checkQuantumGroupoid(d)), "");
}

TEST(Groupoids, DirectSumPrefixesOnlyClashingNames) {
  const QuantumGroupoid s = qgtest::groupoid("N+kZ2");
  EXPECT_EQ(s.base().basisNames(), (std::vector<std::string>{"e1", "e2", "1", "g"}));
  const QuantumGroupoid twice = directSum("NN", qgtest::groupoid("N"), qgtest::groupoid("N"));
  EXPECT_EQ(twice.base().basisNames(), (std::vector<std::string>{"A.e1", "A.e2", "B.e1", "B.e2"}));
  EXPECT_EQ(twice.base().unit(), ints({1, 1, 1, 1}));
}

TEST(Bicharacter, RejectsNonBicharacters) {
  const QuantumGroupoid& z2 = qgtest::groupoid("kZ2");
  EXPECT_THROW(bicharacterCocycle(z2, {1}, {{1, 1}, {1, 2}}), Error);
  EXPECT_THROW(bicharacterCocycle(z2, {1}, {{-1, 1}, {1, 1}}), Error);  // β(1,1) ≠ 1
  const QuantumGroupoid& d4 = qgtest::groupoid("kD4");
  try {
    bicharacterCocycle(d4, {1}, {{1, 1}, {1, -1}});  // r is not an involution
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), "not-a-bicharacter");
  }
  EXPECT_THROW(bicharacterCocycle(d4, {4, 5}, {{1, 1, 1, 1}, {1, 1, 1, 1}, {1, 1, 1, 1},
                                               {1, 1, 1, 1}}),
               Error);  // s and rs do not commute
}

TEST(Zoo, ContainsTheDocumentedObjects) {
  const Library& lib = qgtest::zoo();
  for (const char* name : {"N", "kZ2", "kZ2xZ2", "kD4", "pair2", "N+kZ2", "kD4+N", "N.R",
                           "kZ2.super", "kD4.central", "N.F", "kD4.bichar", "kD4.reflection",
                           "kD4+N.F", "N.swap", "kZ2.sign", "N.regular"}) {
    EXPECT_TRUE(lib.contains(name)) << name;
  }
  EXPECT_EQ(lib.kindOf("N"), "quantum-groupoid");
  EXPECT_EQ(lib.kindOf("N.R"), "qt-structure");
  EXPECT_EQ(lib.kindOf("N.F"), "cocycle");
  EXPECT_EQ(lib.kindOf("N.swap"), "morphism");
  EXPECT_EQ(lib.kindOf("kZ2.sign"), "module");
}

TEST(Zoo, ClosurePullsInDependencies) {
  const Library sub = qgtest::zoo().closure({"kD4.reflection"});
  EXPECT_EQ(sub.names(), (std::vector<std::string>{"kD4", "kD4.reflection"}));
}

TEST(Serialize, RoundTripIsByteExact) {
  const std::string text = serializeLibrary(qgtest::zoo());
  const Library back = parseLibrary(text, "zoo.qg");
  EXPECT_EQ(back.names(), qgtest::zoo().names());
  EXPECT_EQ(serializeLibrary(back), text);
}

TEST(Serialize, FixtureFileMatchesBuiltin) {
  const Library lib = loadLibrary({data("N.qg")});
  const QuantumGroupoid& n = lib.groupoid("N");
  EXPECT_EQ(n.base().basisNames(), (std::vector<std::string>{"e1", "e2"}));
  EXPECT_EQ(n.base().unit(), ints({1, 1}));
  EXPECT_EQ(n.base().comultiply(ints({0, 1})), ints({0, 0, 0, 1}));
  EXPECT_TRUE(structurallyEqual(n, qgtest::groupoid("N")));
  EXPECT_EQ(lib.qtStructures.at("N.R").qt.R, ints({1, 0, 0, 1}));
  EXPECT_EQ(lib.morphisms.at("N.swap").matrix, Matrix(2, 2, ints({0, 1, 1, 0})));
  EXPECT_EQ(serializeLibrary(lib), readFile(data("N.qg")));
}

TEST(Serialize, MissingAntipodeAndInverseAreSolved) {
  const Library lib = loadLibrary({data("N_minimal.qg")});
  EXPECT_EQ(lib.groupoid("N").antipode(), Matrix::identity(2));
  EXPECT_EQ(lib.qtStructures.at("N.R").qt.Rinv, ints({1, 0, 0, 1}));
}

TEST(Serialize, MultipleFilesResolveAcrossSources) {
  const std::string alg = kMinimalAlgebra;
  const Library lib = parseLibrary(std::vector<SourceText>{
      {"b.qg", "kind: module\nname: M\nalgebra: A\ndim: 1\nbasis: v\naction:\n  x v: 1\n"},
      {"a.qg", alg}});
  EXPECT_TRUE(lib.contains("M"));
  EXPECT_TRUE(lib.contains("A"));
}

TEST(Serialize, EmptySection) {
  const Error e = parseError("kind: weak-bialgebra\nname: A\ndim: 1\nbasis: x\nmul:\nunit: 1\n");
  EXPECT_EQ(e.code(), "parse-error");
  EXPECT_NE(std::string(e.what()).find("empty section"), std::string::npos) << e.what();
}

TEST(Serialize, UnknownFieldNamesFileAndLine) {
  const Error e = parseError(std::string(kMinimalAlgebra) + "colour: blue\n");
  EXPECT_EQ(e.code(), "parse-error");
  EXPECT_NE(std::string(e.what()).find("doc.qg:11"), std::string::npos) << e.what();
  EXPECT_NE(std::string(e.what()).find("colour"), std::string::npos) << e.what();
}

TEST(Serialize, DuplicateFieldRejected) {
  EXPECT_EQ(parseError(std::string(kMinimalAlgebra) + "counit: 1\n").code(), "parse-error");
}

TEST(Serialize, WrongValueCountIsDimensionMismatch) {
  std::string text = kMinimalAlgebra;
  text.replace(text.find("counit: 1"), 9, "counit: 1 0");
  EXPECT_EQ(parseError(text).code(), "dimension-mismatch");
}

TEST(Serialize, MalformedRational) {
  std::string text = kMinimalAlgebra;
  text.replace(text.find("unit: 1\n"), 8, "unit: 1/0\n");
  EXPECT_EQ(parseError(text).code(), "parse-error");
}

TEST(Serialize, UnresolvedReference) {
  EXPECT_EQ(parseError("kind: qt-structure\nname: R\nalgebra: Nope\nR:\n  x: 1\n").code(),
            "unknown-object");
}

TEST(Serialize, DuplicateName) {
  EXPECT_EQ(parseError(std::string(kMinimalAlgebra) + "---\n" + kMinimalAlgebra).code(),
            "duplicate-object");
}

TEST(Serialize, UnknownKind) {
  EXPECT_EQ(parseError("kind: monoid\nname: M\n").code(), "parse-error");
}

TEST(Serialize, MissingFileIsIoError) {
  try {
    loadLibrary({data("does-not-exist.qg")});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), "io-error");
  }
}
