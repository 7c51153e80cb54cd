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

#include "qgroupoid/twisting.hpp"

#include <sstream>

namespace qg {

namespace {

std::pair<Vec, Vec> sides(const Matrix& a, const Matrix& b) { return {a.data(), b.data()}; }

void requirePreconditions(const QuantumGroupoid& q, const QTStructure& qt) {
  const WeakBialgebra& h = q.base();
  if (!isCocommutative(h)) {
    throw Error("not-cocommutative", "'" + h.name() + "' is not cocommutative");
  }
  if (!isCanonicalR(h, qt)) {
    throw Error("precondition-unmet", "R must equal Δcop(1)Δ(1) for the isomorphism");
  }
}

}  // namespace

TwistedPair twist(const QuantumGroupoid& q, const QTStructure& qt, const WeakCocycle& wc) {
  const WeakBialgebra& h = q.base();
  const std::size_t n = h.dim();
  TwistedPair tp{q, qt, wc, {}, {}, twistElements(q, wc)};

  Vec comul = zeroVec(n * n * n);
  for (std::size_t i = 0; i < n; ++i) {
    const Vec d = tensorMultiply(h, 2, tensorMultiply(h, 2, wc.Finv, h.comultiply(h.basis(i))), wc.F);
    for (std::size_t jk = 0; jk < n * n; ++jk) comul[i * n * n + jk] = d[jk];
  }
  const WeakBialgebra base(h.name() + "_F", h.basisNames(), h.mulTensor(), h.unit(), comul,
                           h.counit());
  const Matrix antipode =
      h.leftMultiplication(tp.v.v) * h.rightMultiplication(tp.v.vInv) * q.antipode();
  try {
    tp.twisted = QuantumGroupoid(base, antipode);
  } catch (const Error& e) {
    throw Error("twist-axiom-failure", std::string("S-bijective: ") + e.what());
  }
  tp.twistedQt.R = tensorMultiply(h, 2, tensorMultiply(h, 2, flip(n, wc.Finv), qt.R), wc.F);
  tp.twistedQt.Rinv = tensorMultiply(h, 2, tensorMultiply(h, 2, wc.Finv, qt.Rinv), flip(n, wc.F));

  for (const VerificationReport& r :
       {checkQuantumGroupoid(tp.twisted), checkQuasitriangular(tp.twisted, tp.twistedQt)}) {
    if (const Check* c = r.firstFailure()) {
      throw Error("twist-axiom-failure", "twisted pair fails " + c->suite + "/" + c->name);
    }
  }
  return tp;
}

AlphaMaps alphaMap(const QuantumGroupoid& q, const QTStructure& qt, const WeakCocycle& wc) {
  requirePreconditions(q, qt);
  const WeakBialgebra& h = q.base();
  const std::size_t n = h.dim();
  const TwistedPair tp = twist(q, qt, wc);
  const HModule ad = adjointModule(q);
  const Vec& v = tp.v.v;
  const Vec& vInv = tp.v.vInv;

  auto alphaH = [&](const Vec& a) {
    Vec out = zeroVec(n);
    for (std::size_t c = 0; c < n; ++c) {
      for (std::size_t d = 0; d < n; ++d) {
        const Rational& f = wc.F[c * n + d];
        if (!isZero(f)) axpy(out, f, h.multiply(ad.action[c].apply(a), h.basis(d)));
      }
    }
    return out;
  };
  auto alphaIndependent = [&](const Vec& a) {
    Vec out = zeroVec(n);
    for (std::size_t c = 0; c < n; ++c) {
      for (std::size_t d = 0; d < n; ++d) {
        const Rational& f = wc.Finv[c * n + d];
        if (isZero(f)) continue;
        axpy(out, f, h.multiply(h.multiply(h.multiply(h.basis(c), a), q.S(h.basis(d))), vInv));
      }
    }
    return out;
  };
  auto alphaInvH = [&](const Vec& a) {
    Vec out = zeroVec(n);
    for (std::size_t c = 0; c < n; ++c) {
      for (std::size_t d = 0; d < n; ++d) {
        const Rational& f = wc.F[c * n + d];
        if (isZero(f)) continue;
        axpy(out, f, h.multiply(h.multiply(h.multiply(h.basis(c), a), v), q.S(h.basis(d))));
      }
    }
    return out;
  };

  AlphaMaps m;
  m.source = centralizer(q);
  m.target = centralizer(tp.twisted);
  m.report = VerificationReport("alpha");
  if (m.source.dim() != m.target.dim()) {
    throw Error("carrier-mismatch", "carriers have dimensions " + std::to_string(m.source.dim()) +
                                        " and " + std::to_string(m.target.dim()));
  }
  const std::size_t k = m.source.dim();
  m.alpha = Matrix(k, k);
  m.alphaInverse = Matrix(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    const auto to = m.target.coordinates(alphaH(m.source.vector(i)));
    const auto back = m.source.coordinates(alphaInvH(m.target.vector(i)));
    if (!to || !back) {
      throw Error("carrier-mismatch", "α or α⁻¹ moves carrier basis vector " + std::to_string(i) +
                                          " outside the other carrier");
    }
    m.alpha.setColumn(i, *to);
    m.alphaInverse.setColumn(i, *back);
  }
  if (rank(m.alpha) != k) throw Error("carrier-mismatch", "α is not onto the twisted carrier");
  m.report.forEach("α-equivalent-form", k, [&](std::size_t i) {
    return std::pair{alphaH(m.source.vector(i)), alphaIndependent(m.source.vector(i))};
  });
  m.report.forEach("α∘α⁻¹=id", 1, [&](std::size_t) {
    return sides(m.alpha * m.alphaInverse, Matrix::identity(k));
  });
  m.report.forEach("α⁻¹∘α=id", 1, [&](std::size_t) {
    return sides(m.alphaInverse * m.alpha, Matrix::identity(k));
  });
  return m;
}

VerificationReport checkVInverseCoproduct(const QuantumGroupoid& q, const WeakCocycle& wc) {
  return twistElements(q, wc).report;
}

VerificationReport checkCategoryIdentification(const TwistedPair& tp) {
  VerificationReport report("category-identification");
  const QuantumGroupoid& q = tp.original;
  const WeakBialgebra& h = q.base();
  const WeakBialgebra& ht = tp.twisted.base();
  const std::size_t n = h.dim();
  for (const HModule& m : {regularModule(h), adjointModule(q)}) {
    report.forEach("tensor-action:" + m.name, n, [&](std::size_t i) {
      return sides(pairAction(m, m, tensorCoproduct(h, h.basis(i), &tp.cocycle)),
                   pairAction(m, m, ht.comultiply(ht.basis(i))));
    });
  }
  const HModule u = unitObject(q);
  const HModule ut = unitObject(tp.twisted);
  report.record("unit-object", targetSubalgebra(h).basis() == targetSubalgebra(ht).basis() &&
                                   u.action == ut.action);
  report.forEach("braid-element", 1, [&](std::size_t) {
    return std::pair{phiElement(q, tp.cocycle), psiElement(tp.twisted, tp.twistedQt)};
  });
  return report;
}

VerificationReport verifyIsomorphism(const QuantumGroupoid& q, const QTStructure& qt,
                                     const WeakCocycle& wc) {
  requirePreconditions(q, qt);
  const TwistedPair tp = twist(q, qt, wc);
  const BraidedHopfPresentation pf = quantize(q, wc);
  const BraidedHopfPresentation pt = selfTransmute(tp.twisted, tp.twistedQt);
  const AlphaMaps am = alphaMap(q, qt, wc);
  const Matrix& a = am.alpha;
  const std::size_t n = q.dim();

  VerificationReport report("isomorphism");
  report.forEach("module-map", n, [&](std::size_t i) {
    return sides(a * pf.module.action[i], pt.module.action[i] * a);
  });
  report.forEach("algebra-map", 1, [&](std::size_t) { return sides(a * pf.mul, pt.mul * kron(a, a)); });
  report.forEach("unit", 1, [&](std::size_t) { return sides(a * pf.unit, pt.unit); });
  report.forEach("coalgebra-map", 1,
                 [&](std::size_t) { return sides(kron(a, a) * pf.comul, pt.comul * a); });
  report.forEach("counit", 1, [&](std::size_t) { return sides(pt.counit * a, pf.counit); });
  report.forEach("antipode", 1,
                 [&](std::size_t) { return sides(pt.antipode * a, a * pf.antipode); });
  const bool bijective = am.report.passed();
  const Check* bad = am.report.firstFailure();
  report.record("bijectivity", bijective, bad && bad->witness ? *bad->witness : Witness{});
  report.note("presentations",
              serializePresentation(pf) == serializePresentation(pt) ? "equal" : "differ");
  return report;
}

std::string serializePresentation(const BraidedHopfPresentation& p) {
  std::ostringstream out;
  const auto& names = p.module.basisNames;
  const auto& znames = p.unitObject.basisNames;
  auto row = [&](const std::string& label, const Vec& v) {
    out << "  " << label << ":";
    for (const auto& x : v) out << ' ' << formatRational(x);
    out << '\n';
  };
  out << "carrier:\n";
  for (std::size_t i = 0; i < p.carrier.dim(); ++i) row(names[i], p.carrier.vector(i));
  out << "action:\n";
  const auto& hnames = p.acting.base().basisNames();
  for (std::size_t h = 0; h < p.module.action.size(); ++h) {
    for (std::size_t i = 0; i < names.size(); ++i) {
      row(hnames[h] + " " + names[i], p.module.action[h].column(i));
    }
  }
  out << "mul:\n";
  for (std::size_t i = 0; i < names.size(); ++i) {
    for (std::size_t j = 0; j < names.size(); ++j) {
      row(names[i] + " " + names[j], p.mul.column(i * names.size() + j));
    }
  }
  out << "unit:\n";
  for (std::size_t z = 0; z < znames.size(); ++z) row(znames[z], p.unit.column(z));
  for (const auto& [key, m] : {std::pair{"comul", &p.comul}, std::pair{"counit", &p.counit},
                               std::pair{"antipode", &p.antipode}}) {
    out << key << ":\n";
    for (std::size_t i = 0; i < names.size(); ++i) row(names[i], m->column(i));
  }
  return out.str();
}

}  // namespace qg
