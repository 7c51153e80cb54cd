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

#include "qgroupoid/weak_hopf.hpp"

#include <utility>

namespace qg {

SparseVec sparse(const Vec& v) {
  SparseVec out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!isZero(v[i])) out.push_back({i, v[i]});
  }
  return out;
}

WeakBialgebra::WeakBialgebra(std::string name, std::vector<std::string> basisNames, Vec mul,
                             Vec unit, Vec comul, Vec counit)
    : name_(std::move(name)),
      basisNames_(std::move(basisNames)),
      mul_(std::move(mul)),
      unit_(std::move(unit)),
      comul_(std::move(comul)),
      counit_(std::move(counit)) {
  const std::size_t n = basisNames_.size();
  if (n == 0) throw Error("dimension-mismatch", "an algebra needs at least one basis element");
  if (mul_.size() != n * n * n || comul_.size() != n * n * n || unit_.size() != n ||
      counit_.size() != n) {
    throw Error("dimension-mismatch", "structure tensors do not match dim " + std::to_string(n));
  }
  mulSparse_.resize(n * n);
  comulSparse_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        const Rational& m = mul_[(i * n + j) * n + k];
        if (!isZero(m)) mulSparse_[i * n + j].push_back({k, m});
        const Rational& d = comul_[(i * n + j) * n + k];
        if (!isZero(d)) comulSparse_[i].push_back({j * n + k, d});
      }
    }
  }
}

Vec WeakBialgebra::multiply(const Vec& a, const Vec& b) const {
  return tensorMultiply(*this, 1, a, b);
}

Vec WeakBialgebra::comultiply(const Vec& a) const { return comulOnLeg(*this, 1, a, 0); }

Rational WeakBialgebra::counitOf(const Vec& a) const {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!isZero(a[i])) s += a[i] * counit_[i];
  }
  return s;
}

Matrix WeakBialgebra::leftMultiplication(const Vec& a) const {
  const std::size_t n = dim();
  Matrix m(n, n);
  for (std::size_t j = 0; j < n; ++j) m.setColumn(j, multiply(a, basis(j)));
  return m;
}

Matrix WeakBialgebra::rightMultiplication(const Vec& a) const {
  const std::size_t n = dim();
  Matrix m(n, n);
  for (std::size_t j = 0; j < n; ++j) m.setColumn(j, multiply(basis(j), a));
  return m;
}

Matrix WeakBialgebra::mulMatrix() const {
  const std::size_t n = dim();
  Matrix m(n, n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (const Term& t : basisProduct(i, j)) m(t.index, i * n + j) = t.coeff;
    }
  }
  return m;
}

Matrix WeakBialgebra::comulMatrix() const {
  const std::size_t n = dim();
  Matrix m(n * n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (const Term& t : basisCoproduct(i)) m(t.index, i) = t.coeff;
  }
  return m;
}

Vec WeakBialgebra::deltaOne() const { return comultiply(unit_); }

Vec WeakBialgebra::deltaOneCop() const { return flip(dim(), deltaOne()); }

WeakBialgebra WeakBialgebra::renamed(std::string name) const {
  WeakBialgebra copy(*this);
  copy.name_ = std::move(name);
  return copy;
}

bool structurallyEqual(const WeakBialgebra& a, const WeakBialgebra& b) {
  return a.dim() == b.dim() && a.mulTensor() == b.mulTensor() && a.unit() == b.unit() &&
         a.comulTensor() == b.comulTensor() && a.counit() == b.counit();
}

QuantumGroupoid::QuantumGroupoid(WeakBialgebra base, Matrix antipode)
    : base_(std::move(base)), antipode_(std::move(antipode)) {
  if (antipode_.rows() != base_.dim() || antipode_.cols() != base_.dim()) {
    throw Error("dimension-mismatch", "antipode must be dim x dim");
  }
  auto inv = inverse(antipode_);
  if (!inv) throw Error("antipode-not-bijective", "antipode of '" + base_.name() + "' is singular");
  antipodeInverse_ = std::move(*inv);
}

QuantumGroupoid QuantumGroupoid::renamed(std::string name) const {
  QuantumGroupoid copy(*this);
  copy.base_ = base_.renamed(std::move(name));
  return copy;
}

bool structurallyEqual(const QuantumGroupoid& a, const QuantumGroupoid& b) {
  return structurallyEqual(a.base(), b.base()) && a.antipode() == b.antipode();
}

// ---------------------------------------------------------------------------

namespace {

// E[a][x] = ε(e_a·e_x).
Matrix counitPairing(const WeakBialgebra& h) {
  const std::size_t n = h.dim();
  Matrix e(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t x = 0; x < n; ++x) {
      Rational s = 0;
      for (const Term& t : h.basisProduct(a, x)) s += t.coeff * h.counit()[t.index];
      e(a, x) = s;
    }
  }
  return e;
}

// Σ_{a,b} c_ab · pairing · e_out for the four counital maps.
Matrix counitalMap(const WeakBialgebra& h, bool pairWithFirstLeg, bool elementOnLeft) {
  const std::size_t n = h.dim();
  const Matrix e = counitPairing(h);
  const Vec one2 = h.deltaOne();
  Matrix m(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const Rational& c = one2[a * n + b];
      if (isZero(c)) continue;
      const std::size_t paired = pairWithFirstLeg ? a : b;
      const std::size_t out = pairWithFirstLeg ? b : a;
      for (std::size_t x = 0; x < n; ++x) {
        const Rational& pairing = elementOnLeft ? e(x, paired) : e(paired, x);
        if (!isZero(pairing)) m(out, x) += c * pairing;
      }
    }
  }
  return m;
}

}  // namespace

Matrix epsilonTMatrix(const WeakBialgebra& h) { return counitalMap(h, true, false); }
Matrix epsilonSMatrix(const WeakBialgebra& h) { return counitalMap(h, false, true); }
Matrix epsilonSbarMatrix(const WeakBialgebra& h) { return counitalMap(h, true, true); }
Matrix epsilonTbarMatrix(const WeakBialgebra& h) { return counitalMap(h, false, false); }

Vec epsilonT(const WeakBialgebra& h, const Vec& x) { return epsilonTMatrix(h).apply(x); }
Vec epsilonS(const WeakBialgebra& h, const Vec& x) { return epsilonSMatrix(h).apply(x); }
Vec epsilonSbar(const WeakBialgebra& h, const Vec& x) { return epsilonSbarMatrix(h).apply(x); }
Vec epsilonTbar(const WeakBialgebra& h, const Vec& x) { return epsilonTbarMatrix(h).apply(x); }

Subspace targetSubalgebra(const WeakBialgebra& h) { return imageBasis(epsilonTMatrix(h)); }
Subspace sourceSubalgebra(const WeakBialgebra& h) { return imageBasis(epsilonSMatrix(h)); }

Matrix convolve(const WeakBialgebra& h, const Matrix& f, const Matrix& g) {
  const std::size_t n = h.dim();
  if (f.rows() != n || f.cols() != n || g.rows() != n || g.cols() != n) {
    throw Error("dimension-mismatch", "convolution operands must be dim x dim");
  }
  std::vector<Vec> fCols(n), gCols(n);
  for (std::size_t j = 0; j < n; ++j) {
    fCols[j] = f.column(j);
    gCols[j] = g.column(j);
  }
  Matrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    Vec acc = zeroVec(n);
    for (const Term& t : h.basisCoproduct(i)) {
      axpy(acc, t.coeff, h.multiply(fCols[t.index / n], gCols[t.index % n]));
    }
    out.setColumn(i, acc);
  }
  return out;
}

Matrix solveAntipode(const WeakBialgebra& h) {
  const std::size_t n = h.dim();
  const std::size_t unknowns = n * n;
  // Unknown S(e_c)[r] lives at column c*n + r.
  auto var = [n](std::size_t r, std::size_t c) { return c * n + r; };
  const Matrix epsS = epsilonSMatrix(h);
  const Matrix epsT = epsilonTMatrix(h);

  Matrix conv(2 * n * n, unknowns);
  Vec rhs = zeroVec(2 * n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (const Term& d : h.basisCoproduct(i)) {
      const std::size_t j = d.index / n;
      const std::size_t k = d.index % n;
      for (std::size_t r = 0; r < n; ++r) {
        // S(e_j)·e_k contributes s[r][j]·(e_r e_k).
        for (const Term& m : h.basisProduct(r, k)) conv(i * n + m.index, var(r, j)) += d.coeff * m.coeff;
        // e_j·S(e_k) contributes s[r][k]·(e_j e_r).
        for (const Term& m : h.basisProduct(j, r)) {
          conv(n * n + i * n + m.index, var(r, k)) += d.coeff * m.coeff;
        }
      }
    }
    for (std::size_t t = 0; t < n; ++t) {
      rhs[i * n + t] = epsS(t, i);
      rhs[n * n + i * n + t] = epsT(t, i);
    }
  }

  auto toMatrix = [&](const Vec& x) {
    Matrix s(n, n);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) s(r, c) = x[var(r, c)];
    }
    return s;
  };

  auto candidate = solveLinear(conv, rhs);
  if (!candidate) throw Error("no-antipode", "convolution equations are inconsistent");
  if (conv.cols() == rank(conv)) {
    Matrix s = toMatrix(*candidate);
    if (convolve(h, convolve(h, s, Matrix::identity(n)), s) != s) {
      throw Error("no-antipode", "unique solution of S*id = eps_s, id*S = eps_t violates S*id*S = S");
    }
    return s;
  }

  // Given S*id = ε_s, the axiom S*id*S = S reads ε_s*S = S, which is linear.
  Matrix third(n * n, unknowns);
  for (std::size_t i = 0; i < n; ++i) {
    for (const Term& d : h.basisCoproduct(i)) {
      const std::size_t j = d.index / n;
      const std::size_t k = d.index % n;
      for (std::size_t p = 0; p < n; ++p) {
        if (isZero(epsS(p, j))) continue;
        for (std::size_t r = 0; r < n; ++r) {
          for (const Term& m : h.basisProduct(p, r)) {
            third(i * n + m.index, var(r, k)) += d.coeff * epsS(p, j) * m.coeff;
          }
        }
      }
    }
    for (std::size_t t = 0; t < n; ++t) third(i * n + t, var(t, i)) -= 1;
  }
  const Matrix full = vstack({conv, third});
  Vec fullRhs = rhs;
  fullRhs.resize(full.rows(), Rational(0));
  auto solution = solveLinear(full, fullRhs, Uniqueness::Required);
  if (!solution) throw Error("no-antipode", "antipode axioms are inconsistent");
  return toMatrix(*solution);
}

bool isCocommutative(const WeakBialgebra& h) {
  const std::size_t n = h.dim();
  const Vec& d = h.comulTensor();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        if (d[(i * n + j) * n + k] != d[(i * n + k) * n + j]) return false;
      }
    }
  }
  return true;
}

bool isCommutative(const WeakBialgebra& h) {
  const std::size_t n = h.dim();
  const Vec& m = h.mulTensor();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        if (m[(i * n + j) * n + k] != m[(j * n + i) * n + k]) return false;
      }
    }
  }
  return true;
}

// ---------------------------------------------------------------------------

namespace {

void compareColumns(VerificationReport& report, const std::string& name, const Matrix& lhs,
                    const Matrix& rhs) {
  report.forEach(name, lhs.cols(),
                 [&](std::size_t j) { return std::pair{lhs.column(j), rhs.column(j)}; });
}

}  // namespace

VerificationReport checkWeakBialgebra(const WeakBialgebra& h) {
  VerificationReport report("weak-bialgebra");
  const std::size_t n = h.dim();
  auto e = [&](std::size_t i) { return h.basis(i); };
  auto triple = [n](std::size_t f) { return decodeIndex(f, n, 3); };
  auto pair = [n](std::size_t f) { return decodeIndex(f, n, 2); };

  report.forEach(
      "associativity", n * n * n,
      [&](std::size_t f) {
        const auto d = decodeIndex(f, n, 3);
        return std::pair{h.multiply(h.multiply(e(d[0]), e(d[1])), e(d[2])),
                         h.multiply(e(d[0]), h.multiply(e(d[1]), e(d[2])))};
      },
      triple);
  report.forEach(
      "unit", 2 * n,
      [&](std::size_t f) {
        const std::size_t i = f % n;
        return std::pair{f < n ? h.multiply(h.unit(), e(i)) : h.multiply(e(i), h.unit()), e(i)};
      },
      [n](std::size_t f) { return std::vector<std::size_t>{f % n, f / n}; });
  report.forEach("coassociativity", n, [&](std::size_t i) {
    const Vec d = h.comultiply(e(i));
    return std::pair{comulOnLeg(h, 2, d, 0), comulOnLeg(h, 2, d, 1)};
  });
  const Matrix counitRow(1, n, h.counit());
  report.forEach(
      "counit-axiom", 2 * n,
      [&](std::size_t f) {
        const std::size_t i = f % n;
        const Vec d = h.comultiply(e(i));
        const Vec side = f < n ? applyToBlock(d, 1, n, counitRow) : applyToBlock(d, n, 1, counitRow);
        return std::pair{side, e(i)};
      },
      [n](std::size_t f) { return std::vector<std::size_t>{f % n, f / n}; });
  report.forEach(
      "comul-multiplicative", n * n,
      [&](std::size_t f) {
        const auto d = decodeIndex(f, n, 2);
        return std::pair{h.comultiply(h.multiply(e(d[0]), e(d[1]))),
                         tensorMultiply(h, 2, h.comultiply(e(d[0])), h.comultiply(e(d[1])))};
      },
      pair);

  const Vec one2 = h.deltaOne();
  const Vec delta2 = comulOnLeg(h, 2, one2, 0);
  const Vec left = embedLegs(h, 3, one2, {0, 1});
  const Vec right = embedLegs(h, 3, one2, {1, 2});
  report.forEach(
      "weak-unit", 2,
      [&](std::size_t f) {
        return std::pair{delta2, f == 0 ? tensorMultiply(h, 3, left, right)
                                        : tensorMultiply(h, 3, right, left)};
      },
      [](std::size_t f) { return std::vector<std::size_t>{f}; });

  // ε(hgl) = ε(hg₁)ε(g₂l) = ε(hg₂)ε(g₁l).
  Matrix pairing(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) pairing(a, b) = h.counitOf(h.multiply(e(a), e(b)));
  }
  std::vector<Vec> products(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) products[a * n + b] = h.multiply(e(a), e(b));
  }
  report.forEach(
      "weak-counit", 2 * n * n * n,
      [&](std::size_t f) {
        const bool swapped = f >= n * n * n;
        const auto d = decodeIndex(f % (n * n * n), n, 3);
        const Rational lhs = h.counitOf(h.multiply(products[d[0] * n + d[1]], e(d[2])));
        Rational rhs = 0;
        for (const Term& t : h.basisCoproduct(d[1])) {
          const std::size_t g1 = swapped ? t.index % n : t.index / n;
          const std::size_t g2 = swapped ? t.index / n : t.index % n;
          rhs += t.coeff * pairing(d[0], g1) * pairing(g2, d[2]);
        }
        return std::pair{Vec{lhs}, Vec{rhs}};
      },
      [n](std::size_t f) {
        auto d = decodeIndex(f % (n * n * n), n, 3);
        d.push_back(f / (n * n * n));
        return d;
      });
  return report;
}

VerificationReport checkQuantumGroupoid(const QuantumGroupoid& q) {
  const WeakBialgebra& h = q.base();
  const std::size_t n = h.dim();
  VerificationReport report("quantum-groupoid");
  report.merge(checkWeakBialgebra(h));

  const Matrix id = Matrix::identity(n);
  const Matrix& s = q.antipode();
  compareColumns(report, "S*id=eps_s", convolve(h, s, id), epsilonSMatrix(h));
  compareColumns(report, "id*S=eps_t", convolve(h, id, s), epsilonTMatrix(h));
  compareColumns(report, "S*id*S=S", convolve(h, convolve(h, s, id), s), s);

  report.forEach(
      "S-anti-multiplicative", n * n,
      [&](std::size_t f) {
        const auto d = decodeIndex(f, n, 2);
        return std::pair{q.S(h.multiply(h.basis(d[0]), h.basis(d[1]))),
                         h.multiply(q.S(h.basis(d[1])), q.S(h.basis(d[0])))};
      },
      [n](std::size_t f) { return decodeIndex(f, n, 2); });
  report.forEach("S-anti-comultiplicative", n, [&](std::size_t i) {
    const Vec lhs = h.comultiply(q.S(h.basis(i)));
    const Vec cop = flip(n, h.comultiply(h.basis(i)));
    return std::pair{lhs, mapOnLeg(n, 2, mapOnLeg(n, 2, cop, 0, s), 1, s)};
  });
  compareColumns(report, "S-bijective", s * q.antipodeInverse(), id);
  return report;
}

}  // namespace qg
