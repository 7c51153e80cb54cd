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

#include "qgroupoid/rep_category.hpp"

#include <utility>

namespace qg {

namespace {

struct Entry {
  std::size_t row;
  std::size_t col;
  Rational value;
};

std::vector<Entry> nonzeros(const Matrix& m) {
  std::vector<Entry> out;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (!isZero(m(r, c))) out.push_back({r, c, m(r, c)});
    }
  }
  return out;
}

std::string nameOf(const std::vector<std::string>& names, const Vec& v, const std::string& fallback) {
  std::size_t hit = v.size();
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (isZero(v[i])) continue;
    if (hit != v.size() || v[i] != 1) return fallback;
    hit = i;
  }
  return hit == v.size() ? fallback : names[hit];
}

std::vector<std::string> subspaceNames(const std::vector<std::string>& names, const Subspace& sub,
                                       const std::string& prefix) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < sub.dim(); ++i) {
    out.push_back(nameOf(names, sub.vector(i), prefix + std::to_string(i)));
  }
  return out;
}

std::pair<Vec, Vec> matrices(const Matrix& a, const Matrix& b) { return {a.data(), b.data()}; }

std::vector<Vec> basisCoproducts(const WeakBialgebra& h, const WeakCocycle* wc) {
  std::vector<Vec> out;
  for (std::size_t i = 0; i < h.dim(); ++i) out.push_back(tensorCoproduct(h, h.basis(i), wc));
  return out;
}

// Replaces one leg of a rank-r tensor by its coproduct from a table.
Vec coproductOnLeg(std::size_t n, std::size_t rank, const Vec& x, std::size_t leg,
                   const std::vector<Vec>& table) {
  std::size_t inner = 1;
  for (std::size_t k = leg + 1; k < rank; ++k) inner *= n;
  const std::size_t outer = x.size() / (n * inner);
  Vec out = zeroVec(outer * n * n * inner);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (isZero(x[i])) continue;
    const std::size_t o = i / (n * inner);
    const std::size_t b = (i / inner) % n;
    const std::size_t in = i % inner;
    const Vec& d = table[b];
    for (std::size_t p = 0; p < d.size(); ++p) {
      if (!isZero(d[p])) out[(o * n * n + p) * inner + in] += x[i] * d[p];
    }
  }
  return out;
}

}  // namespace

Matrix HModule::act(const Vec& h) const {
  Matrix out(dim(), dim());
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (!isZero(h[i])) out = out + h[i] * action.at(i);
  }
  return out;
}

bool operator==(const HModule& a, const HModule& b) {
  return a.basisNames == b.basisNames && a.action == b.action;
}

HModule regularModule(const WeakBialgebra& h) {
  HModule m{h.name(), h.basisNames(), {}};
  for (std::size_t i = 0; i < h.dim(); ++i) m.action.push_back(h.leftMultiplication(h.basis(i)));
  return m;
}

HModule adjointModule(const QuantumGroupoid& q) {
  const WeakBialgebra& h = q.base();
  const std::size_t n = h.dim();
  std::vector<Matrix> left, rightS;
  for (std::size_t i = 0; i < n; ++i) {
    left.push_back(h.leftMultiplication(h.basis(i)));
    rightS.push_back(h.rightMultiplication(q.S(h.basis(i))));
  }
  HModule m{"ad(" + h.name() + ")", h.basisNames(), {}};
  for (std::size_t i = 0; i < n; ++i) {
    Matrix a(n, n);
    for (const Term& t : h.basisCoproduct(i)) {
      a = a + t.coeff * (left[t.index / n] * rightS[t.index % n]);
    }
    m.action.push_back(std::move(a));
  }
  return m;
}

HModule restrictModule(const HModule& m, const Subspace& sub, std::string name) {
  HModule out{std::move(name), subspaceNames(m.basisNames, sub, "c"), {}};
  for (const Matrix& a : m.action) out.action.push_back(restrictMap(a, sub, sub));
  return out;
}

HModule unitObject(const QuantumGroupoid& q) {
  const WeakBialgebra& h = q.base();
  const Subspace ht = targetSubalgebra(h);
  const Matrix epsT = epsilonTMatrix(h);
  HModule m{h.name() + "_t", subspaceNames(h.basisNames(), ht, "z"), {}};
  for (std::size_t i = 0; i < h.dim(); ++i) {
    m.action.push_back(restrictMap(epsT * h.leftMultiplication(h.basis(i)), ht, ht));
  }
  return m;
}

VerificationReport checkModule(const WeakBialgebra& h, const HModule& m) {
  const std::size_t n = h.dim();
  VerificationReport report("module:" + m.name);
  if (m.action.size() != n) {
    report.record("action-size", false, {{m.action.size()}, {}, {}, "one matrix per basis element expected"});
    return report;
  }
  report.forEach(
      "module-associativity", n * n,
      [&](std::size_t f) {
        const std::size_t i = f / n;
        const std::size_t j = f % n;
        return matrices(m.act(h.multiply(h.basis(i), h.basis(j))), m.action[i] * m.action[j]);
      },
      [n](std::size_t f) { return decodeIndex(f, n, 2); });
  report.forEach("module-unit", 1, [&](std::size_t) {
    return matrices(m.act(h.unit()), Matrix::identity(m.dim()));
  });
  return report;
}

Vec tensorCoproduct(const WeakBialgebra& h, const Vec& x, const WeakCocycle* wc) {
  Vec d = h.comultiply(x);
  if (!wc) return d;
  return tensorMultiply(h, 2, tensorMultiply(h, 2, wc->Finv, d), wc->F);
}

Matrix pairAction(const HModule& m, const HModule& n, const Vec& x) {
  const std::size_t k = m.action.size();
  const std::size_t dm = m.dim();
  const std::size_t dn = n.dim();
  Matrix out(dm * dn, dm * dn);
  std::vector<std::vector<Entry>> ms(k), ns(k);
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) {
      const Rational& c = x[a * k + b];
      if (isZero(c)) continue;
      if (ms[a].empty()) ms[a] = nonzeros(m.action[a]);
      if (ns[b].empty()) ns[b] = nonzeros(n.action[b]);
      for (const Entry& p : ms[a]) {
        const Rational cp = c * p.value;
        for (const Entry& q : ns[b]) {
          out(p.row * dn + q.row, p.col * dn + q.col) += cp * q.value;
        }
      }
    }
  }
  return out;
}

Vec tripleAction(const HModule& m, const Vec& x, const Vec& v) {
  const std::size_t k = m.action.size();
  const std::size_t d = m.dim();
  Vec out = zeroVec(v.size());
  for (std::size_t f = 0; f < x.size(); ++f) {
    if (isZero(x[f])) continue;
    const auto idx = decodeIndex(f, k, 3);
    Vec y = mapOnLeg(d, 3, v, 0, m.action[idx[0]]);
    y = mapOnLeg(d, 3, y, 1, m.action[idx[1]]);
    y = mapOnLeg(d, 3, y, 2, m.action[idx[2]]);
    axpy(out, x[f], y);
  }
  return out;
}

Matrix swapMatrix(std::size_t dm, std::size_t dn) {
  Matrix s(dn * dm, dm * dn);
  for (std::size_t i = 0; i < dm; ++i) {
    for (std::size_t j = 0; j < dn; ++j) s(j * dm + i, i * dn + j) = 1;
  }
  return s;
}

TruncatedTensor truncatedTensor(const QuantumGroupoid& q, const HModule& m, const HModule& n,
                                const WeakCocycle* wc) {
  const WeakBialgebra& h = q.base();
  if (m.action.size() != h.dim() || n.action.size() != h.dim()) {
    throw Error("mismatched-algebra", "modules '" + m.name + "' and '" + n.name +
                                          "' do not both act through '" + h.name() + "'");
  }
  TruncatedTensor t;
  t.projector = pairAction(m, n, tensorCoproduct(h, h.unit(), wc));
  t.image = imageBasis(t.projector);
  t.inclusion = t.image.inclusion();
  t.projection = Matrix(t.image.dim(), t.projector.cols());
  for (std::size_t r = 0; r < t.image.dim(); ++r) {
    for (std::size_t c = 0; c < t.projector.cols(); ++c) {
      t.projection(r, c) = t.projector(t.image.pivots()[r], c);
    }
  }
  std::vector<std::string> names;
  for (std::size_t p : t.image.pivots()) {
    names.push_back(m.basisNames[p / n.dim()] + "⊗" + n.basisNames[p % n.dim()]);
  }
  t.module = HModule{m.name + "⊗" + n.name, std::move(names), {}};
  for (std::size_t i = 0; i < h.dim(); ++i) {
    t.module.action.push_back(t.projection *
                              pairAction(m, n, tensorCoproduct(h, h.basis(i), wc)) * t.inclusion);
  }
  return t;
}

Unitors unitors(const QuantumGroupoid& q, const HModule& m, const WeakCocycle* wc) {
  const HModule unit = unitObject(q);
  const Subspace ht = targetSubalgebra(q.base());
  const std::size_t d = m.dim();
  const std::size_t t = ht.dim();
  Unitors u{Matrix(), Matrix(), truncatedTensor(q, unit, m, wc), truncatedTensor(q, m, unit, wc)};
  Matrix lPlain(d, t * d), rPlain(d, d * t);
  for (std::size_t z = 0; z < t; ++z) {
    const Matrix left = m.act(ht.vector(z));
    const Matrix right = m.act(q.Sinv(ht.vector(z)));
    for (std::size_t v = 0; v < d; ++v) {
      lPlain.setColumn(z * d + v, left.column(v));
      rPlain.setColumn(v * t + z, right.column(v));
    }
  }
  u.l = lPlain * u.left.inclusion;
  u.r = rPlain * u.right.inclusion;
  return u;
}

VerificationReport checkUnitors(const QuantumGroupoid& q, const HModule& m, const WeakCocycle* wc) {
  VerificationReport report("unitors:" + m.name);
  const Unitors u = unitors(q, m, wc);
  const std::size_t n = q.dim();
  for (const auto& [name, map, side] :
       {std::tuple{"l", &u.l, &u.left}, std::tuple{"r", &u.r, &u.right}}) {
    const bool square = map->rows() == map->cols();
    report.record(std::string(name) + "-bijective", square && inverse(*map).has_value(),
                  {{map->rows(), map->cols()}, {}, {}, "unitor is not invertible"});
    report.forEach(std::string(name) + "-H-linear", n, [&, map = map, side = side](std::size_t i) {
      return matrices(*map * side->module.action[i], m.action[i] * *map);
    });
  }
  return report;
}

Braiding makeBraiding(const QuantumGroupoid& q, const HModule& m, const HModule& n,
                      const Vec& element, const Vec& inverseElement, const WeakCocycle* wc) {
  Braiding b;
  b.element = element;
  b.inverseElement = inverseElement;
  b.source = truncatedTensor(q, m, n, wc);
  b.target = truncatedTensor(q, n, m, wc);
  b.plain = pairAction(n, m, element) * swapMatrix(m.dim(), n.dim());
  const Matrix plainBack = pairAction(m, n, inverseElement) * swapMatrix(n.dim(), m.dim());
  b.forward = b.target.projection * b.plain * b.source.inclusion;
  b.backward = b.source.projection * plainBack * b.target.inclusion;
  return b;
}

Vec psiElement(const QuantumGroupoid& q, const QTStructure& qt) { return flip(q.dim(), qt.R); }

Vec phiElement(const QuantumGroupoid& q, const WeakCocycle& wc) {
  return tensorMultiply(q.base(), 2, wc.Finv, flip(q.dim(), wc.F));
}

Braiding braidingPsi(const QuantumGroupoid& q, const QTStructure& qt, const HModule& m,
                     const HModule& n) {
  return makeBraiding(q, m, n, psiElement(q, qt), qt.Rinv, nullptr);
}

Braiding braidingPhi(const QuantumGroupoid& q, const WeakCocycle& wc, const HModule& m,
                     const HModule& n) {
  const WeakBialgebra& h = q.base();
  if (!isCocommutative(h)) {
    throw Error("not-cocommutative", "the twisted category needs a cocommutative algebra");
  }
  // Inverse element F⁻¹·R⁻¹·F₂₁ of the twisted R̃ for R = Δcop(1)Δ(1).
  const Vec inv = tensorMultiply(
      h, 2, tensorMultiply(h, 2, wc.Finv, canonicalR(h).Rinv), flip(q.dim(), wc.F));
  return makeBraiding(q, m, n, phiElement(q, wc), inv, &wc);
}

VerificationReport checkBraiding(const QuantumGroupoid& q, const Braiding& b, const HModule& m,
                                 const HModule& n, const WeakCocycle* wc) {
  VerificationReport report("braiding:" + m.name + "," + n.name);
  (void)wc;
  const Matrix plainBack = pairAction(m, n, b.inverseElement) * swapMatrix(n.dim(), m.dim());
  report.forEach("forward-in-image", 1, [&](std::size_t) {
    const Matrix img = b.plain * b.source.inclusion;
    return matrices(b.target.projector * img, img);
  });
  report.forEach("backward-in-image", 1, [&](std::size_t) {
    const Matrix img = plainBack * b.target.inclusion;
    return matrices(b.source.projector * img, img);
  });
  report.forEach("backward∘forward=id", 1, [&](std::size_t) {
    return matrices(b.backward * b.forward, Matrix::identity(b.source.image.dim()));
  });
  report.forEach("forward∘backward=id", 1, [&](std::size_t) {
    return matrices(b.forward * b.backward, Matrix::identity(b.target.image.dim()));
  });
  report.forEach("forward-H-linear", q.dim(), [&](std::size_t i) {
    return matrices(b.forward * b.source.module.action[i], b.target.module.action[i] * b.forward);
  });
  report.forEach("backward-H-linear", q.dim(), [&](std::size_t i) {
    return matrices(b.backward * b.target.module.action[i], b.source.module.action[i] * b.backward);
  });
  return report;
}

VerificationReport checkNaturality(const QuantumGroupoid& q, const Braiding& before,
                                   const Braiding& after, const Matrix& f, const Matrix& g) {
  (void)q;
  VerificationReport report("braiding-naturality");
  const Matrix fg = kron(f, g);
  const Matrix gf = kron(g, f);
  report.forEach("natural", before.source.image.dim(), [&](std::size_t i) {
    const Vec v = before.source.image.vector(i);
    return std::pair{after.plain.apply(fg.apply(v)), gf.apply(before.plain.apply(v))};
  });
  return report;
}

VerificationReport checkHexagons(const QuantumGroupoid& q, const HModule& m, const Vec& element,
                                 const WeakCocycle* wc) {
  const WeakBialgebra& h = q.base();
  const std::size_t n = h.dim();
  const std::size_t d = m.dim();
  VerificationReport report("hexagons:" + m.name);
  const std::vector<Vec> cp = basisCoproducts(h, wc);
  const Vec triple = coproductOnLeg(n, 2, tensorCoproduct(h, h.unit(), wc), 0, cp);
  const Vec y1 = coproductOnLeg(n, 2, element, 1, cp);
  const Vec y2 = coproductOnLeg(n, 2, element, 0, cp);
  const Vec b01 = embedLegs(h, 3, element, {0, 1});
  const Vec b12 = embedLegs(h, 3, element, {1, 2});
  auto perm = [d](const Vec& x, std::vector<std::size_t> p) { return permuteLegs(d, 3, x, p); };
  std::vector<Vec> inputs;
  for (std::size_t i = 0; i < d * d * d; ++i) {
    Vec x = tripleAction(m, triple, unitVec(d * d * d, i));
    if (!isZero(x)) inputs.push_back(std::move(x));
  }
  report.forEach("hexagon-1", inputs.size(), [&](std::size_t i) {
    const Vec& x = inputs[i];
    const Vec lhs = tripleAction(m, y1, perm(x, {2, 0, 1}));
    const Vec mid = tripleAction(m, b12, perm(x, {0, 2, 1}));
    return std::pair{lhs, tripleAction(m, b01, perm(mid, {1, 0, 2}))};
  });
  report.forEach("hexagon-2", inputs.size(), [&](std::size_t i) {
    const Vec& x = inputs[i];
    const Vec lhs = tripleAction(m, y2, perm(x, {1, 2, 0}));
    const Vec mid = tripleAction(m, b01, perm(x, {1, 0, 2}));
    return std::pair{lhs, tripleAction(m, b12, perm(mid, {0, 2, 1}))};
  });
  return report;
}

}  // namespace qg
