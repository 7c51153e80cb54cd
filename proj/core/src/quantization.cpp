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

#include "qgroupoid/quantization.hpp"

namespace qg {

namespace {

void requireCocommutative(const WeakBialgebra& h) {
  if (!isCocommutative(h)) {
    throw Error("not-cocommutative", "'" + h.name() + "' is not cocommutative");
  }
}

Vec phiInverseElement(const QuantumGroupoid& q, const WeakCocycle& wc) {
  const WeakBialgebra& h = q.base();
  return tensorMultiply(h, 2, tensorMultiply(h, 2, wc.Finv, canonicalR(h).Rinv),
                        flip(q.dim(), wc.F));
}

}  // namespace

Matrix twistedProductOnH(const QuantumGroupoid& q, const WeakCocycle& wc) {
  const WeakBialgebra& h = q.base();
  const std::size_t n = h.dim();
  const HModule ad = adjointModule(q);
  Matrix out(n, n * n);
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t d = 0; d < n; ++d) {
      const Rational& f = wc.F[c * n + d];
      if (isZero(f)) continue;
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          Vec col = out.column(a * n + b);
          axpy(col, f, h.multiply(ad.action[c].column(a), ad.action[d].column(b)));
          out.setColumn(a * n + b, col);
        }
      }
    }
  }
  return out;
}

Matrix twistedCoproductOnH(const QuantumGroupoid& q, const WeakCocycle& wc) {
  const WeakBialgebra& h = q.base();
  const std::size_t n = h.dim();
  const HModule ad = adjointModule(q);
  Matrix out(n * n, n);
  for (std::size_t a = 0; a < n; ++a) {
    const Vec d = h.comultiply(h.basis(a));
    Vec col = zeroVec(n * n);
    for (std::size_t c = 0; c < n; ++c) {
      for (std::size_t e = 0; e < n; ++e) {
        const Rational& f = wc.Finv[c * n + e];
        if (!isZero(f)) axpy(col, f, applyPair(ad.action[c], ad.action[e], d));
      }
    }
    out.setColumn(a, col);
  }
  return out;
}

BraidedHopfPresentation quantize(const QuantumGroupoid& q, const WeakCocycle& wc) {
  const WeakBialgebra& h = q.base();
  requireCocommutative(h);

  BraidedHopfPresentation p;
  p.kind = PresentationKind::Quantized;
  p.acting = q;
  p.ambient = q;
  p.carrier = centralizer(q);
  p.module = restrictModule(adjointModule(q), p.carrier, "C(" + h.name() + ")_F");
  p.unitObject = unitObject(q);
  p.context = CategoryContext{phiElement(q, wc), phiInverseElement(q, wc), wc};

  const Subspace& c = p.carrier;
  const std::size_t k = c.dim();
  const Subspace ht = targetSubalgebra(h);
  const Subspace cc = tensorSubspace(c, c);
  const Matrix mulH = twistedProductOnH(q, wc);
  const Matrix comulH = twistedCoproductOnH(q, wc);
  const Matrix epsT = epsilonTMatrix(h);
  auto label = [&](const std::string& map, std::size_t i) {
    return map + "(" + p.module.basisNames[i] + ")";
  };

  p.mul = Matrix(k, k * k);
  p.rawComul = Matrix(k * k, k);
  p.counit = Matrix(ht.dim(), k);
  p.antipode = Matrix(k, k);
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) {
      const Vec prod = mulH.apply(tensorVec(c.vector(a), c.vector(b)));
      p.mul.setColumn(a * k + b, coordinatesOrThrow(c, prod, "mul(" + p.module.basisNames[a] +
                                                                 "," + p.module.basisNames[b] + ")"));
    }
    p.rawComul.setColumn(a, coordinatesOrThrow(cc, comulH.apply(c.vector(a)), label("comul", a)));
    p.counit.setColumn(a, coordinatesOrThrow(ht, epsT.apply(c.vector(a)), label("counit", a)));
    p.antipode.setColumn(a, coordinatesOrThrow(c, q.S(c.vector(a)), label("antipode", a)));
  }
  p.unit = Matrix(k, ht.dim());
  for (std::size_t z = 0; z < ht.dim(); ++z) {
    p.unit.setColumn(z, coordinatesOrThrow(c, ht.vector(z), "unit"));
  }
  p.comul = truncatedTensor(q, p.module, p.module, &wc).projector * p.rawComul;
  return p;
}

VerificationReport checkFourFactorExchange(const QuantumGroupoid& q, const WeakCocycle& wc) {
  VerificationReport report("four-factor-exchange");
  const WeakBialgebra& h = q.base();
  const std::size_t n = h.dim();
  auto at = [&](const Vec& x, std::vector<std::size_t> legs) { return embedLegs(h, 4, x, legs); };
  auto mul = [&](const Vec& x, const Vec& y) { return tensorMultiply(h, 4, x, y); };
  Vec lhs = mul(at(wc.F, {0, 1}), at(wc.F, {2, 3}));
  lhs = mul(lhs, at(wc.Finv, {1, 2}));
  lhs = mul(lhs, at(wc.F, {2, 1}));
  lhs = mul(lhs, at(wc.Finv, {0, 2}));
  lhs = mul(lhs, at(wc.Finv, {1, 3}));
  auto deltaDelta = [&](const Vec& x) { return comulOnLeg(h, 3, comulOnLeg(h, 2, x, 1), 0); };
  const Vec rhs = mul(deltaDelta(wc.Finv), permuteLegs(n, 4, deltaDelta(wc.F), {0, 2, 1, 3}));
  report.forEach("four-factor-exchange", 1, [&](std::size_t) { return std::pair{lhs, rhs}; });
  return report;
}

VerificationReport verifyQuantization(const BraidedHopfPresentation& p) {
  VerificationReport report = verifyBraidedHopf(p);
  if (!p.context.cocycle) {
    report.fail("cocycle-present", {{}, {}, {}, "presentation has no cocycle"});
    return report;
  }
  const WeakCocycle& wc = *p.context.cocycle;
  const QuantumGroupoid& q = p.acting;
  const WeakBialgebra& h = q.base();
  const std::size_t n = h.dim();
  report.merge(checkFourFactorExchange(q, wc));

  const Matrix mulH = twistedProductOnH(q, wc);
  const Matrix comulH = twistedCoproductOnH(q, wc);
  const TruncatedTensor cc = truncatedTensor(q, p.module, p.module, &wc);
  const Matrix incl = p.carrier.inclusion();
  const Matrix incl2 = kron(incl, incl);
  const HModule ad = adjointModule(q);

  report.forEach("Δ_F(1)=1⊗_t1", 1, [&](std::size_t) {
    return std::pair{comulH.apply(h.unit()),
                     pairAction(ad, ad, tensorCoproduct(h, h.unit(), &wc))
                         .apply(tensorVec(h.unit(), h.unit()))};
  });

  const Matrix braid = pairAction(ad, ad, p.context.braid) * swapMatrix(n, n);
  report.forEach("comul-algebra-map", cc.image.dim(), [&](std::size_t j) {
    const Vec x = incl2.apply(cc.image.vector(j));
    Vec y = applyToBlock(applyToBlock(x, 1, n, comulH), n * n, 1, comulH);
    y = applyToBlock(y, n, n, braid);
    y = applyToBlock(applyToBlock(y, 1, n * n, mulH), n, 1, mulH);
    return std::pair{comulH.apply(mulH.apply(x)), y};
  });
  return report;
}

}  // namespace qg
