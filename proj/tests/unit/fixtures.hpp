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

#include <initializer_list>
#include <vector>
#include <string>

#include "qgroupoid/serialize.hpp"
#include "qgroupoid/zoo.hpp"

namespace qgtest {

/// Builtin fixtures, built once per test binary.
inline const qg::Library& zoo() {
  static const qg::Library lib = qg::builtinZoo();
  return lib;
}

inline const qg::QuantumGroupoid& groupoid(const std::string& name) { return zoo().groupoid(name); }
inline const qg::QTStructure& qt(const std::string& name) { return zoo().qtStructures.at(name).qt; }
inline const qg::WeakCocycle& cocycle(const std::string& name) {
  return zoo().cocycles.at(name).cocycle;
}

/// Rationals from "p" or "p/q" literals.
inline qg::Vec vec(std::initializer_list<const char*> entries) {
  qg::Vec out;
  for (const char* e : entries) out.push_back(qg::parseRational(e));
  return out;
}

inline qg::Vec ints(std::initializer_list<long> entries) {
  qg::Vec out;
  for (long e : entries) out.emplace_back(e);
  return out;
}

/// Function algebra k^G of a group algebra kG: δ_gδ_h = [g=h]δ_g,
/// Δ(δ_g) = Σ_{ab=g} δ_a⊗δ_b, ε(δ_g) = [g=1], S(δ_g) = δ_{g⁻¹}.
/// Commutative and, for non-abelian G, not cocommutative.
inline qg::QuantumGroupoid functionAlgebra(const qg::QuantumGroupoid& group) {
  const qg::WeakBialgebra& g = group.base();
  const std::size_t n = g.dim();
  std::size_t identity = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (g.basis(i) == g.unit()) identity = i;
  }
  auto product = [&](std::size_t a, std::size_t b) {
    const qg::Vec v = g.multiply(g.basis(a), g.basis(b));
    for (std::size_t k = 0; k < n; ++k) {
      if (v[k] != 0) return k;
    }
    return n;
  };
  qg::Vec mul = qg::zeroVec(n * n * n), comul = qg::zeroVec(n * n * n), counit = qg::zeroVec(n);
  qg::Vec unit(n, qg::Rational(1));
  qg::Matrix s(n, n);
  std::vector<std::string> names;
  for (std::size_t a = 0; a < n; ++a) {
    names.push_back("d_" + g.basisNames()[a]);
    mul[(a * n + a) * n + a] = 1;
    for (std::size_t b = 0; b < n; ++b) {
      comul[product(a, b) * n * n + a * n + b] = 1;
      if (product(a, b) == identity) s(b, a) = 1;
    }
  }
  counit[identity] = 1;
  return qg::QuantumGroupoid(
      qg::WeakBialgebra("k^" + g.name(), names, mul, unit, comul, counit), s);
}

/// Name of the first failing check, or "" when everything passed.
inline std::string firstFailure(const qg::VerificationReport& r) {
  const qg::Check* c = r.firstFailure();
  return c ? c->suite + "/" + c->name : "";
}

}  // namespace qgtest
