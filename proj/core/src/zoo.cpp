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

#include "qgroupoid/zoo.hpp"

#include <bit>
#include <set>

namespace qg {

namespace {

[[noreturn]] void invalid(const std::string& msg) { throw Error("invalid-groupoid", msg); }

std::size_t identityOf(const GroupoidSpec& g, std::size_t object) {
  for (std::size_t a = 0; a < g.arrows.size(); ++a) {
    const auto& arrow = g.arrows[a];
    if (arrow.source == object && arrow.target == object && g.compose[a][a] == a) return a;
  }
  invalid("object '" + g.objects[object] + "' has no identity arrow");
}

QuantumGroupoid groupAlgebra(const std::string& name, const std::vector<std::string>& elements,
                             const std::vector<std::vector<std::size_t>>& table) {
  return groupoidAlgebra(name, groupAsGroupoid(elements, table));
}

}  // namespace

void validateGroupoid(const GroupoidSpec& g) {
  const std::size_t n = g.arrows.size();
  if (g.objects.empty() || n == 0) invalid("groupoid needs objects and arrows");
  if (g.compose.size() != n || g.inverse.size() != n) invalid("table sizes do not match arrows");
  for (std::size_t a = 0; a < n; ++a) {
    if (g.arrows[a].source >= g.objects.size() || g.arrows[a].target >= g.objects.size()) {
      invalid("arrow '" + g.arrows[a].name + "' has an unknown endpoint");
    }
    if (g.compose[a].size() != n) invalid("compose row " + g.arrows[a].name + " has wrong length");
  }
  auto entry = [&](std::size_t a, std::size_t b) {
    return "compose[" + g.arrows[a].name + "][" + g.arrows[b].name + "]";
  };
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const bool composable = g.arrows[a].source == g.arrows[b].target;
      const auto& c = g.compose[a][b];
      if (composable != c.has_value()) invalid(entry(a, b) + " definedness is wrong");
      if (!c) continue;
      if (*c >= n || g.arrows[*c].source != g.arrows[b].source ||
          g.arrows[*c].target != g.arrows[a].target) {
        invalid(entry(a, b) + " has the wrong endpoints");
      }
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (!g.compose[a][b]) continue;
      for (std::size_t c = 0; c < n; ++c) {
        if (!g.compose[b][c]) continue;
        if (g.compose[*g.compose[a][b]][c] != g.compose[a][*g.compose[b][c]]) {
          invalid("composition of " + g.arrows[a].name + ", " + g.arrows[b].name + ", " +
                  g.arrows[c].name + " is not associative");
        }
      }
    }
  }
  for (std::size_t x = 0; x < g.objects.size(); ++x) {
    const std::size_t id = identityOf(g, x);
    for (std::size_t a = 0; a < n; ++a) {
      if (g.arrows[a].target == x && g.compose[id][a] != a) invalid(entry(id, a) + " is not a");
      if (g.arrows[a].source == x && g.compose[a][id] != a) invalid(entry(a, id) + " is not a");
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    const std::size_t b = g.inverse[a];
    if (b >= n || g.compose[a][b] != identityOf(g, g.arrows[a].target) ||
        g.compose[b][a] != identityOf(g, g.arrows[a].source)) {
      invalid("inverse[" + g.arrows[a].name + "] is not a two-sided inverse");
    }
  }
}

QuantumGroupoid groupoidAlgebra(const std::string& name, const GroupoidSpec& g) {
  validateGroupoid(g);
  const std::size_t n = g.arrows.size();
  std::vector<std::string> names;
  for (const auto& a : g.arrows) names.push_back(a.name);
  Vec mul = zeroVec(n * n * n), comul = zeroVec(n * n * n), unit = zeroVec(n);
  Vec counit(n, Rational(1));
  Matrix antipode(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (g.compose[a][b]) mul[(a * n + b) * n + *g.compose[a][b]] = 1;
    }
    comul[(a * n + a) * n + a] = 1;
    antipode(g.inverse[a], a) = 1;
  }
  for (std::size_t x = 0; x < g.objects.size(); ++x) unit[identityOf(g, x)] = 1;
  return QuantumGroupoid(WeakBialgebra(name, names, mul, unit, comul, counit), antipode);
}

GroupoidSpec discreteGroupoid(const std::vector<std::string>& objects) {
  GroupoidSpec g;
  g.objects = objects;
  const std::size_t n = objects.size();
  g.compose.assign(n, std::vector<std::optional<std::size_t>>(n));
  for (std::size_t i = 0; i < n; ++i) {
    g.arrows.push_back({objects[i], i, i});
    g.compose[i][i] = i;
    g.inverse.push_back(i);
  }
  return g;
}

GroupoidSpec pairGroupoid(std::size_t objects) {
  GroupoidSpec g;
  for (std::size_t i = 0; i < objects; ++i) g.objects.push_back("o" + std::to_string(i + 1));
  const std::size_t n = objects * objects;
  g.compose.assign(n, std::vector<std::optional<std::size_t>>(n));
  for (std::size_t i = 0; i < objects; ++i) {
    for (std::size_t j = 0; j < objects; ++j) {
      g.arrows.push_back({"e" + std::to_string(i + 1) + std::to_string(j + 1), j, i});
      g.inverse.push_back(j * objects + i);
      for (std::size_t l = 0; l < objects; ++l) {
        g.compose[i * objects + j][j * objects + l] = i * objects + l;
      }
    }
  }
  return g;
}

GroupoidSpec groupAsGroupoid(const std::vector<std::string>& elements,
                             const std::vector<std::vector<std::size_t>>& table) {
  GroupoidSpec g;
  g.objects = {"*"};
  const std::size_t n = elements.size();
  if (table.size() != n) invalid("group table has wrong size");
  std::optional<std::size_t> identity;
  for (std::size_t e = 0; e < n && !identity; ++e) {
    bool ok = table[e].size() == n;
    for (std::size_t x = 0; ok && x < n; ++x) ok = table[e][x] == x && table[x][e] == x;
    if (ok) identity = e;
  }
  if (!identity) invalid("group table has no identity");
  g.compose.assign(n, std::vector<std::optional<std::size_t>>(n));
  for (std::size_t a = 0; a < n; ++a) {
    g.arrows.push_back({elements[a], 0, 0});
    std::size_t inv = n;
    for (std::size_t b = 0; b < n; ++b) {
      g.compose[a][b] = table[a][b];
      if (table[a][b] == *identity) inv = b;
    }
    if (inv == n) invalid("element '" + elements[a] + "' has no inverse");
    g.inverse.push_back(inv);
  }
  return g;
}

QuantumGroupoid cyclicGroupAlgebra2() { return groupAlgebra("kZ2", {"1", "g"}, {{0, 1}, {1, 0}}); }

QuantumGroupoid kleinGroupAlgebra() {
  std::vector<std::vector<std::size_t>> table(4, std::vector<std::size_t>(4));
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) table[i][j] = i ^ j;
  }
  return groupAlgebra("kZ2xZ2", {"1", "a", "b", "ab"}, table);
}

QuantumGroupoid dihedralGroupAlgebra4() {
  // r^i s^j has index 4j + i; (r^a s^b)(r^c s^d) = r^{a ± c} s^{b+d}.
  std::vector<std::vector<std::size_t>> table(8, std::vector<std::size_t>(8));
  for (std::size_t x = 0; x < 8; ++x) {
    for (std::size_t y = 0; y < 8; ++y) {
      const std::size_t a = x % 4, b = x / 4, c = y % 4, d = y / 4;
      const std::size_t rot = (b == 0 ? a + c : a + 4 - c) % 4;
      table[x][y] = 4 * ((b + d) % 2) + rot;
    }
  }
  return groupAlgebra("kD4", {"1", "r", "r2", "r3", "s", "rs", "r2s", "r3s"}, table);
}

QuantumGroupoid directSum(const std::string& name, const QuantumGroupoid& qa,
                          const QuantumGroupoid& qb) {
  const WeakBialgebra& a = qa.base();
  const WeakBialgebra& b = qb.base();
  const std::size_t na = a.dim(), nb = b.dim(), n = na + nb;
  std::vector<std::string> names;
  const std::set<std::string> left(a.basisNames().begin(), a.basisNames().end());
  bool clash = false;
  for (const auto& s : b.basisNames()) clash = clash || left.count(s) > 0;
  for (const auto& s : a.basisNames()) names.push_back(clash ? "A." + s : s);
  for (const auto& s : b.basisNames()) names.push_back(clash ? "B." + s : s);

  Vec mul = zeroVec(n * n * n), comul = zeroVec(n * n * n), unit, counit;
  auto copyBlock = [&](const WeakBialgebra& part, std::size_t off) {
    const std::size_t m = part.dim();
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        for (std::size_t k = 0; k < m; ++k) {
          mul[((i + off) * n + j + off) * n + k + off] = part.mulTensor()[(i * m + j) * m + k];
          comul[((i + off) * n + j + off) * n + k + off] = part.comulTensor()[(i * m + j) * m + k];
        }
      }
    }
    unit.insert(unit.end(), part.unit().begin(), part.unit().end());
    counit.insert(counit.end(), part.counit().begin(), part.counit().end());
  };
  copyBlock(a, 0);
  copyBlock(b, na);
  Matrix antipode(n, n);
  for (std::size_t i = 0; i < na; ++i) {
    for (std::size_t j = 0; j < na; ++j) antipode(i, j) = qa.antipode()(i, j);
  }
  for (std::size_t i = 0; i < nb; ++i) {
    for (std::size_t j = 0; j < nb; ++j) antipode(na + i, na + j) = qb.antipode()(i, j);
  }
  return QuantumGroupoid(WeakBialgebra(name, names, mul, unit, comul, counit), antipode);
}

Vec directSum2(std::size_t dimA, std::size_t dimB, const Vec& xa, const Vec& xb) {
  const std::size_t n = dimA + dimB;
  if (xa.size() != dimA * dimA || xb.size() != dimB * dimB) {
    throw Error("dimension-mismatch", "direct sum of two-fold tensors");
  }
  Vec out = zeroVec(n * n);
  for (std::size_t i = 0; i < dimA; ++i) {
    for (std::size_t j = 0; j < dimA; ++j) out[i * n + j] = xa[i * dimA + j];
  }
  for (std::size_t i = 0; i < dimB; ++i) {
    for (std::size_t j = 0; j < dimB; ++j) out[(dimA + i) * n + dimA + j] = xb[i * dimB + j];
  }
  return out;
}

WeakCocycle bicharacterCocycle(const QuantumGroupoid& q, const std::vector<std::size_t>& generators,
                               const std::vector<std::vector<int>>& beta) {
  const WeakBialgebra& h = q.base();
  const std::size_t n = h.dim();
  const std::size_t r = generators.size();
  const std::size_t order = std::size_t{1} << r;
  auto fail = [](const std::string& msg) { throw Error("not-a-bicharacter", msg); };
  if (beta.size() != order) fail("beta must be indexed by all 2^r characters");
  for (const auto& row : beta) {
    if (row.size() != order) fail("beta must be square");
    for (int v : row) {
      if (v != 1 && v != -1) fail("beta values must be ±1");
    }
  }
  for (std::size_t c1 = 0; c1 < order; ++c1) {
    for (std::size_t c2 = 0; c2 < order; ++c2) {
      for (std::size_t d = 0; d < order; ++d) {
        if (beta[c1 ^ c2][d] != beta[c1][d] * beta[c2][d] ||
            beta[d][c1 ^ c2] != beta[d][c1] * beta[d][c2]) {
          fail("beta is not multiplicative in characters " + std::to_string(c1) + ", " +
               std::to_string(c2));
        }
      }
    }
  }
  for (std::size_t g : generators) {
    if (g >= n) throw Error("dimension-mismatch", "generator index out of range");
    if (h.multiply(h.basis(g), h.basis(g)) != h.unit()) fail("generators must be involutions");
    for (std::size_t g2 : generators) {
      if (h.multiply(h.basis(g), h.basis(g2)) != h.multiply(h.basis(g2), h.basis(g))) {
        fail("generators must commute");
      }
    }
  }
  std::vector<Vec> elements(order);
  for (std::size_t m = 0; m < order; ++m) {
    Vec x = h.unit();
    for (std::size_t k = 0; k < r; ++k) {
      if (m >> k & 1) x = h.multiply(x, h.basis(generators[k]));
    }
    elements[m] = x;
  }
  std::vector<Vec> idempotents(order, zeroVec(n));
  const Rational weight(1, static_cast<unsigned long>(order));
  for (std::size_t c = 0; c < order; ++c) {
    for (std::size_t m = 0; m < order; ++m) {
      const int sign = std::popcount(c & m) % 2 == 0 ? 1 : -1;
      axpy(idempotents[c], weight * sign, elements[m]);
    }
  }
  WeakCocycle wc{zeroVec(n * n), zeroVec(n * n)};
  for (std::size_t c = 0; c < order; ++c) {
    for (std::size_t d = 0; d < order; ++d) {
      const Vec t = tensorVec(idempotents[c], idempotents[d]);
      axpy(wc.F, Rational(beta[c][d]), t);
      axpy(wc.Finv, Rational(beta[c][d]), t);
    }
  }
  return wc;
}

Library builtinZoo() {
  Library lib;
  const QuantumGroupoid n = groupoidAlgebra("N", discreteGroupoid({"e1", "e2"}));
  const QuantumGroupoid z2 = cyclicGroupAlgebra2();
  const QuantumGroupoid klein = kleinGroupAlgebra();
  const QuantumGroupoid d4 = dihedralGroupAlgebra4();
  const QuantumGroupoid pair = groupoidAlgebra("pair2", pairGroupoid(2));
  const QuantumGroupoid nz2 = directSum("N+kZ2", n, z2);
  const QuantumGroupoid d4n = directSum("kD4+N", d4, n);
  for (const auto* q : {&n, &z2, &klein, &d4, &pair, &nz2, &d4n}) lib.add(q->name(), *q);

  for (const auto* q : {&n, &z2, &klein, &d4, &pair, &nz2, &d4n}) {
    lib.add(q->name() + ".R", QTDocument{q->name(), canonicalR(q->base())});
    const Vec one = q->base().deltaOne();
    lib.add(q->name() + ".trivial",
            CocycleDocument{q->name(), WeakCocycle{one, q->base().deltaOneCop()}});
  }

  // R = ½(1⊗1 + 1⊗z + z⊗1 − z⊗z) for a central involution z.
  auto superR = [](const QuantumGroupoid& q, std::size_t z) {
    const WeakBialgebra& h = q.base();
    Vec R = zeroVec(h.dim() * h.dim());
    const Rational half(1, 2);
    axpy(R, half, tensorVec(h.unit(), h.unit()));
    axpy(R, half, tensorVec(h.unit(), h.basis(z)));
    axpy(R, half, tensorVec(h.basis(z), h.unit()));
    axpy(R, -half, tensorVec(h.basis(z), h.basis(z)));
    return makeQTStructure(h, R);
  };
  lib.add("kZ2.super", QTDocument{"kZ2", superR(z2, 1)});
  lib.add("kD4.central", QTDocument{"kD4", superR(d4, 2)});

  const WeakCocycle nF{n.base().deltaOne(), n.base().deltaOneCop()};
  lib.add("N.F", CocycleDocument{"N", nF});
  // β(χ_ab, χ_cd) = (−1)^{ad}: bit 0 of the first character against bit 1 of the second.
  std::vector<std::vector<int>> beta(4, std::vector<int>(4));
  for (std::size_t c = 0; c < 4; ++c) {
    for (std::size_t d = 0; d < 4; ++d) beta[c][d] = ((c & 1) && (d & 2)) ? -1 : 1;
  }
  const WeakCocycle d4F = bicharacterCocycle(d4, {2, 4}, beta);
  lib.add("kD4.bichar", CocycleDocument{"kD4", d4F});
  // On the non-central subgroup <s> the twist survives the adjoint action.
  const WeakCocycle reflection = bicharacterCocycle(d4, {4}, {{1, 1}, {1, -1}});
  lib.add("kD4.reflection", CocycleDocument{"kD4", reflection});
  lib.add("kZ2.bichar", CocycleDocument{"kZ2", bicharacterCocycle(z2, {1}, {{1, 1}, {1, -1}})});
  lib.add("kZ2xZ2.bichar", CocycleDocument{"kZ2xZ2", bicharacterCocycle(klein, {1, 2}, beta)});
  lib.add("kD4+N.F",
          CocycleDocument{"kD4+N", WeakCocycle{directSum2(8, 2, reflection.F, n.base().deltaOne()),
                                               directSum2(8, 2, reflection.Finv,
                                                          n.base().deltaOneCop())}});

  Matrix swap(2, 2);
  swap(0, 1) = 1;
  swap(1, 0) = 1;
  lib.add("N.swap", MorphismDocument{"N", "N", swap});
  lib.add("N.id", MorphismDocument{"N", "N", Matrix::identity(2)});
  lib.add("kD4.id", MorphismDocument{"kD4", "kD4", Matrix::identity(8)});
  lib.add("pair2.id", MorphismDocument{"pair2", "pair2", Matrix::identity(4)});

  HModule sign{"kZ2.sign", {"v"}, {Matrix::identity(1), Rational(-1) * Matrix::identity(1)}};
  lib.add("kZ2.sign", ModuleDocument{"kZ2", sign});
  HModule reg = regularModule(n.base());
  reg.name = "N.regular";
  lib.add("N.regular", ModuleDocument{"N", reg});
  return lib;
}

}  // namespace qg
