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

#include "qgroupoid/transmutation.hpp"

namespace qg {

namespace {

std::pair<Vec, Vec> sides(const Matrix& a, const Matrix& b) { return {a.data(), b.data()}; }

Vec scalarVec(const Rational& r) { return Vec{r}; }

/// Action matrices of the basis of H on all of L: h·l = f(h₁) l f(S(h₂)).
std::vector<Matrix> conjugationAction(const QuantumGroupoid& h, const QGMorphism& f) {
  const WeakBialgebra& H = h.base();
  const WeakBialgebra& L = f.target.base();
  const std::size_t n = H.dim();
  std::vector<std::optional<Matrix>> left(n), rightS(n);
  std::vector<Matrix> out;
  for (std::size_t i = 0; i < n; ++i) {
    Matrix a(L.dim(), L.dim());
    for (const Term& t : H.basisCoproduct(i)) {
      const std::size_t j = t.index / n, k = t.index % n;
      if (!left[j]) left[j] = L.leftMultiplication(f.matrix.column(j));
      if (!rightS[k]) rightS[k] = L.rightMultiplication(f.matrix.apply(h.S(H.basis(k))));
      a = a + t.coeff * (*left[j] * *rightS[k]);
    }
    out.push_back(std::move(a));
  }
  return out;
}

void checkDimensions(const QuantumGroupoid& h, const QGMorphism& f) {
  if (f.matrix.cols() != h.dim() || f.source.dim() != h.dim() ||
      f.matrix.rows() != f.target.dim()) {
    throw Error("dimension-mismatch", "morphism matrix does not map " + h.name() + " into " +
                                          f.target.name());
  }
}

}  // namespace

QGMorphism identityMorphism(const QuantumGroupoid& h) {
  return QGMorphism{h, h, Matrix::identity(h.dim())};
}

VerificationReport checkMorphism(const QGMorphism& f) {
  VerificationReport report("morphism");
  const WeakBialgebra& a = f.source.base();
  const WeakBialgebra& b = f.target.base();
  const std::size_t n = a.dim();
  const bool fits = f.matrix.cols() == n && f.matrix.rows() == b.dim();
  report.record("dimensions", fits,
                {{f.matrix.rows(), f.matrix.cols()}, {}, {}, "matrix does not fit source/target"});
  if (!fits) return report;
  const Matrix& m = f.matrix;
  report.forEach(
      "f-multiplicative", n * n,
      [&](std::size_t p) {
        const std::size_t i = p / n, j = p % n;
        return std::pair{m.apply(a.multiply(a.basis(i), a.basis(j))),
                         b.multiply(m.column(i), m.column(j))};
      },
      [n](std::size_t p) { return decodeIndex(p, n, 2); });
  report.forEach("f-unit", 1, [&](std::size_t) { return std::pair{m.apply(a.unit()), b.unit()}; });
  report.forEach("f-comultiplicative", n, [&](std::size_t i) {
    return std::pair{applyPair(m, m, a.comultiply(a.basis(i))), b.comultiply(m.column(i))};
  });
  report.forEach("f-counit", n, [&](std::size_t i) {
    return std::pair{scalarVec(b.counitOf(m.column(i))), scalarVec(a.counitOf(a.basis(i)))};
  });
  report.forEach("f∘S=S∘f", n, [&](std::size_t i) {
    return std::pair{m.apply(f.source.S(a.basis(i))), f.target.S(m.column(i))};
  });
  return report;
}

Subspace centralizer(const QuantumGroupoid& l) {
  const WeakBialgebra& h = l.base();
  const Subspace hs = sourceSubalgebra(h);
  std::vector<Matrix> blocks;
  for (std::size_t i = 0; i < hs.dim(); ++i) {
    blocks.push_back(h.leftMultiplication(hs.vector(i)) - h.rightMultiplication(hs.vector(i)));
  }
  return kernelBasis(vstack(blocks));
}

Vec coordinatesOrThrow(const Subspace& sub, const Vec& v, const std::string& what) {
  auto c = sub.coordinates(v);
  if (!c) throw Error("closure-violation", what + " = " + formatVec(v) + " leaves its codomain");
  return *c;
}

BraidedHopfPresentation transmute(const QuantumGroupoid& h, const QTStructure& qt,
                                  const QGMorphism& f) {
  checkDimensions(h, f);
  const WeakBialgebra& H = h.base();
  const QuantumGroupoid& l = f.target;
  const WeakBialgebra& L = l.base();
  const std::size_t n = H.dim(), nl = L.dim();

  BraidedHopfPresentation p;
  p.kind = PresentationKind::Transmuted;
  p.acting = h;
  p.ambient = l;
  p.carrier = centralizer(l);
  const std::vector<Matrix> act = conjugationAction(h, f);
  p.module = restrictModule(HModule{L.name(), L.basisNames(), act}, p.carrier,
                            "C(" + L.name() + ")");
  p.unitObject = unitObject(h);
  p.context = CategoryContext{psiElement(h, qt), qt.Rinv, std::nullopt};

  const Subspace& c = p.carrier;
  const std::size_t k = c.dim();
  const Subspace ht = targetSubalgebra(H);
  const Subspace cc = tensorSubspace(c, c);
  auto name = [&](const std::string& map, std::size_t i) {
    return map + "(" + p.module.basisNames[i] + ")";
  };

  p.mul = Matrix(k, k * k);
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) {
      p.mul.setColumn(a * k + b,
                      coordinatesOrThrow(c, L.multiply(c.vector(a), c.vector(b)),
                                         "mul(" + p.module.basisNames[a] + "," +
                                             p.module.basisNames[b] + ")"));
    }
  }
  p.unit = Matrix(k, ht.dim());
  for (std::size_t z = 0; z < ht.dim(); ++z) {
    p.unit.setColumn(z, coordinatesOrThrow(c, f.matrix.apply(ht.vector(z)), "unit"));
  }

  // Δ_R(l) = l₁ f(S(R²)) ⊗ R¹·l₂, ε_R(l) = ε(f(1₁)l)1₂, S_R(l) = f(R²) S(R¹·l).
  const Vec& R = qt.R;
  std::vector<Matrix> rightFS(n);
  for (std::size_t b = 0; b < n; ++b) {
    rightFS[b] = L.rightMultiplication(f.matrix.apply(h.S(H.basis(b))));
  }
  const Vec one = H.deltaOne();
  p.rawComul = Matrix(k * k, k);
  p.counit = Matrix(ht.dim(), k);
  p.antipode = Matrix(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    const Vec& v = c.vector(i);
    const Vec d = L.comultiply(v);
    Vec delta = zeroVec(nl * nl);
    Vec anti = zeroVec(nl);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        const Rational& r = R[a * n + b];
        if (isZero(r)) continue;
        axpy(delta, r, applyPair(rightFS[b], act[a], d));
        axpy(anti, r, L.multiply(f.matrix.column(b), l.S(act[a].apply(v))));
      }
    }
    p.rawComul.setColumn(i, coordinatesOrThrow(cc, delta, name("comul", i)));
    p.antipode.setColumn(i, coordinatesOrThrow(c, anti, name("antipode", i)));
    Vec eps = zeroVec(n);
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        if (isZero(one[x * n + y])) continue;
        axpy(eps, one[x * n + y] * L.counitOf(L.multiply(f.matrix.column(x), v)), H.basis(y));
      }
    }
    p.counit.setColumn(i, coordinatesOrThrow(ht, eps, name("counit", i)));
  }
  p.comul = truncatedTensor(h, p.module, p.module).projector * p.rawComul;
  return p;
}

BraidedHopfPresentation selfTransmute(const QuantumGroupoid& h, const QTStructure& qt) {
  return transmute(h, qt, identityMorphism(h));
}

namespace {

/// (cp⊗id)(cp(1)) in H⊗H⊗H, with cp the possibly twisted coproduct.
Vec tripleUnit(const WeakBialgebra& h, const WeakCocycle* wc) {
  const Vec y = tensorCoproduct(h, h.unit(), wc);
  Vec t = comulOnLeg(h, 2, y, 0);
  if (!wc) return t;
  t = tensorMultiply(h, 3, embedLegs(h, 3, wc->Finv, {0, 1}), t);
  return tensorMultiply(h, 3, t, embedLegs(h, 3, wc->F, {0, 1}));
}

/// Columns of the action of x ∈ H^{⊗3} on M^{⊗3}, skipping zero columns.
std::vector<std::pair<std::size_t, Vec>> tripleColumns(const WeakBialgebra& h, const HModule& m,
                                                       const Vec& x) {
  const std::size_t n = h.dim(), d = m.dim();
  std::vector<std::pair<std::size_t, Matrix>> slices;
  for (std::size_t i = 0; i < n; ++i) {
    const Vec slice(x.begin() + static_cast<std::ptrdiff_t>(i * n * n),
                    x.begin() + static_cast<std::ptrdiff_t>((i + 1) * n * n));
    if (!isZero(slice)) slices.emplace_back(i, pairAction(m, m, slice));
  }
  std::vector<std::pair<std::size_t, Vec>> out;
  for (std::size_t col = 0; col < d * d * d; ++col) {
    Vec v = zeroVec(d * d * d);
    for (const auto& [i, q] : slices) {
      v = add(v, tensorVec(m.action[i].column(col / (d * d)), q.column(col % (d * d))));
    }
    if (!isZero(v)) out.emplace_back(col, std::move(v));
  }
  return out;
}

}  // namespace

VerificationReport verifyBraidedHopf(const BraidedHopfPresentation& p) {
  VerificationReport report("braided-hopf");
  const QuantumGroupoid& q = p.acting;
  const WeakBialgebra& h = q.base();
  const WeakCocycle* wc = p.context.twist();
  const HModule& c = p.module;
  const HModule& u = p.unitObject;
  const std::size_t n = h.dim(), k = c.dim(), t = u.dim();
  const Subspace ht = targetSubalgebra(h);
  const TruncatedTensor cc = truncatedTensor(q, c, c, wc);
  const TruncatedTensor uc = truncatedTensor(q, u, c, wc);
  const TruncatedTensor cu = truncatedTensor(q, c, u, wc);
  std::vector<Matrix> pair;
  for (std::size_t i = 0; i < n; ++i) pair.push_back(pairAction(c, c, tensorCoproduct(h, h.basis(i), wc)));
  auto ccBasis = [&](std::size_t j) { return cc.image.vector(j); };
  auto hIndex = [&](std::size_t m) { return std::vector<std::size_t>{m / cc.image.dim(), m % cc.image.dim()}; };

  // (a) module structure and H-linearity.
  const VerificationReport module = checkModule(h, c);
  report.record("module-action", module.passed(),
                module.firstFailure() && module.firstFailure()->witness
                    ? *module.firstFailure()->witness
                    : Witness{});
  report.forEach(
      "mul-H-linear", n * cc.image.dim(),
      [&](std::size_t m) {
        const std::size_t i = m / cc.image.dim();
        const Vec x = ccBasis(m % cc.image.dim());
        return std::pair{p.mul.apply(pair[i].apply(x)), c.action[i].apply(p.mul.apply(x))};
      },
      hIndex);
  report.forEach("unit-H-linear", n, [&](std::size_t i) {
    return sides(p.unit * u.action[i], c.action[i] * p.unit);
  });
  report.forEach("comul-H-linear", n, [&](std::size_t i) {
    return sides(p.comul * c.action[i], pair[i] * p.comul);
  });
  report.forEach("counit-H-linear", n, [&](std::size_t i) {
    return sides(p.counit * c.action[i], u.action[i] * p.counit);
  });
  report.forEach("antipode-H-linear", n, [&](std::size_t i) {
    return sides(p.antipode * c.action[i], c.action[i] * p.antipode);
  });

  // (b) algebra axioms on truncated tensors.
  report.forEach("mul-well-defined", k * k, [&](std::size_t m) {
    return std::pair{p.mul.apply(cc.projector.column(m)), p.mul.column(m)};
  });
  const std::vector<std::pair<std::size_t, Vec>> triples = tripleColumns(h, c, tripleUnit(h, wc));
  report.forEach(
      "associativity", triples.size(),
      [&](std::size_t m) {
        const Vec& x = triples[m].second;
        return std::pair{p.mul.apply(applyToBlock(x, 1, k, p.mul)),
                         p.mul.apply(applyToBlock(x, k, 1, p.mul))};
      },
      [&](std::size_t m) { return decodeIndex(triples[m].first, k, 3); });
  // l(z⊗v) = z·v and r(v⊗z) = S⁻¹(z)·v on the plain tensors.
  Matrix lPlain(k, t * k), rPlain(k, k * t);
  for (std::size_t z = 0; z < t; ++z) {
    const Matrix left = c.act(ht.vector(z));
    const Matrix right = c.act(q.Sinv(ht.vector(z)));
    for (std::size_t v = 0; v < k; ++v) {
      lPlain.setColumn(z * k + v, left.column(v));
      rPlain.setColumn(v * t + z, right.column(v));
    }
  }
  report.forEach("left-unit", uc.image.dim(), [&](std::size_t j) {
    const Vec y = uc.image.vector(j);
    return std::pair{p.mul.apply(applyToBlock(y, 1, k, p.unit)), lPlain.apply(y)};
  });
  report.forEach("right-unit", cu.image.dim(), [&](std::size_t j) {
    const Vec y = cu.image.vector(j);
    return std::pair{p.mul.apply(applyToBlock(y, k, 1, p.unit)), rPlain.apply(y)};
  });

  // (c) coalgebra axioms.
  report.forEach("comul-in-truncated", k, [&](std::size_t i) {
    return std::pair{cc.projector.apply(p.rawComul.column(i)), p.rawComul.column(i)};
  });
  report.forEach("coassociativity", k, [&](std::size_t i) {
    const Vec d = p.comul.column(i);
    return std::pair{applyToBlock(d, 1, k, p.comul), applyToBlock(d, k, 1, p.comul)};
  });
  report.forEach("left-counit", k, [&](std::size_t i) {
    return std::pair{lPlain.apply(applyToBlock(p.comul.column(i), 1, k, p.counit)),
                     unitVec(k, i)};
  });
  report.forEach("right-counit", k, [&](std::size_t i) {
    return std::pair{rPlain.apply(applyToBlock(p.comul.column(i), k, 1, p.counit)),
                     unitVec(k, i)};
  });

  // (d) Δ∘μ = (μ⊗μ)∘(id⊗Ψ⊗id)∘(Δ⊗Δ).
  const Matrix braid = pairAction(c, c, p.context.braid) * swapMatrix(k, k);
  report.forEach("bialgebra-compatibility", cc.image.dim(), [&](std::size_t j) {
    const Vec x = ccBasis(j);
    Vec y = applyToBlock(applyToBlock(x, 1, k, p.comul), k * k, 1, p.comul);
    y = applyToBlock(y, k, k, braid);
    y = applyToBlock(applyToBlock(y, 1, k * k, p.mul), k, 1, p.mul);
    return std::pair{p.comul.apply(p.mul.apply(x)), y};
  });

  // (e) ε(ab) = ε(a)ε(b) in H_t.
  std::vector<Vec> epsH;
  for (std::size_t i = 0; i < k; ++i) epsH.push_back(ht.combine(p.counit.column(i)));
  report.forEach("counit-multiplicative", cc.image.dim(), [&](std::size_t j) {
    const Vec x = ccBasis(j);
    Vec rhs = zeroVec(n);
    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t b = 0; b < k; ++b) {
        if (!isZero(x[a * k + b])) axpy(rhs, x[a * k + b], h.multiply(epsH[a], epsH[b]));
      }
    }
    return std::pair{ht.combine(p.counit.apply(p.mul.apply(x))), rhs};
  });
  report.forEach("counit∘unit=id", 1, [&](std::size_t) {
    return sides(p.counit * p.unit, Matrix::identity(t));
  });

  // (f) Δ(1) = 1 ⊗_t 1.
  const Vec oneC = p.unit.apply(*ht.coordinates(h.unit()));
  report.forEach("unit-grouplike", 1, [&](std::size_t) {
    return std::pair{p.comul.apply(oneC), cc.projector.apply(tensorVec(oneC, oneC))};
  });

  // (g) μ∘(S⊗id)∘Δ = η∘ε = μ∘(id⊗S)∘Δ.
  report.forEach("antipode-left", k, [&](std::size_t i) {
    return std::pair{p.mul.apply(applyToBlock(p.comul.column(i), 1, k, p.antipode)),
                     p.unit.apply(p.counit.column(i))};
  });
  report.forEach("antipode-right", k, [&](std::size_t i) {
    return std::pair{p.mul.apply(applyToBlock(p.comul.column(i), k, 1, p.antipode)),
                     p.unit.apply(p.counit.column(i))};
  });
  return report;
}

}  // namespace qg
