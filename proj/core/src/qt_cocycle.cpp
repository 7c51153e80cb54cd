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

#include "qgroupoid/qt_cocycle.hpp"

#include <utility>

namespace qg {

namespace {

Vec mul2(const WeakBialgebra& h, const Vec& x, const Vec& y) { return tensorMultiply(h, 2, x, y); }

Vec mul3(const WeakBialgebra& h, const Vec& x, const Vec& y) { return tensorMultiply(h, 3, x, y); }

// Matrix of X ↦ x·X (left) or X ↦ X·x (right) on H⊗H.
Matrix multiplicationOperator2(const WeakBialgebra& h, const Vec& x, bool left) {
  const std::size_t n2 = h.dim() * h.dim();
  Matrix m(n2, n2);
  for (std::size_t j = 0; j < n2; ++j) {
    const Vec e = unitVec(n2, j);
    m.setColumn(j, left ? mul2(h, x, e) : mul2(h, e, x));
  }
  return m;
}

void compareOnce(VerificationReport& report, const std::string& name, const Vec& lhs,
                 const Vec& rhs) {
  report.forEach(name, 1, [&](std::size_t) { return std::pair{lhs, rhs}; });
}

// Runs `instance` over the RREF basis vectors of a subspace.
void forSubspace(VerificationReport& report, const std::string& name, const Subspace& sub,
                 const std::function<std::pair<Vec, Vec>(const Vec&)>& instance) {
  report.forEach(name, sub.dim(), [&](std::size_t i) { return instance(sub.vector(i)); });
}

}  // namespace

Vec applyPair(const Matrix& a, const Matrix& b, const Vec& x) {
  const Vec y = applyToBlock(x, a.cols(), 1, b);
  return applyToBlock(y, 1, b.rows(), a);
}

Vec contract(const WeakBialgebra& h, const Vec& x, const Matrix& f, const Matrix& g) {
  const std::size_t n = h.dim();
  Vec out = zeroVec(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const Rational& c = x[a * n + b];
      if (isZero(c)) continue;
      axpy(out, c, h.multiply(f.column(a), g.column(b)));
    }
  }
  return out;
}

Vec solveWeakInverse(const WeakBialgebra& h, const Vec& x, const Vec& leftTarget,
                     const Vec& rightTarget, const Vec& leftUnit, const Vec& rightUnit) {
  const std::size_t n2 = h.dim() * h.dim();
  const Matrix left = multiplicationOperator2(h, x, true);
  const Matrix right = multiplicationOperator2(h, x, false);
  const Matrix sandwich = Matrix::identity(n2) - multiplicationOperator2(h, leftUnit, true) *
                                                     multiplicationOperator2(h, rightUnit, false);
  const Matrix system = vstack({left, right, sandwich});
  Vec rhs = leftTarget;
  rhs.insert(rhs.end(), rightTarget.begin(), rightTarget.end());
  rhs.resize(system.rows(), Rational(0));
  auto solution = solveLinear(system, rhs, Uniqueness::Required);
  if (!solution) throw Error("no-inverse", "element has no weak inverse in the required sandwich");
  return *solution;
}

QTStructure makeQTStructure(const WeakBialgebra& h, Vec R, std::optional<Vec> Rinv) {
  const std::size_t n2 = h.dim() * h.dim();
  if (R.size() != n2 || (Rinv && Rinv->size() != n2)) {
    throw Error("dimension-mismatch", "R must have dim² coefficients");
  }
  if (!Rinv) {
    const Vec one = h.deltaOne();
    const Vec cop = h.deltaOneCop();
    Rinv = solveWeakInverse(h, R, cop, one, one, cop);
  }
  return {std::move(R), std::move(*Rinv)};
}

WeakCocycle makeWeakCocycle(const WeakBialgebra& h, Vec F, std::optional<Vec> Finv) {
  const std::size_t n2 = h.dim() * h.dim();
  if (F.size() != n2 || (Finv && Finv->size() != n2)) {
    throw Error("dimension-mismatch", "F must have dim² coefficients");
  }
  if (!Finv) {
    const Vec one = h.deltaOne();
    const Vec cop = h.deltaOneCop();
    Finv = solveWeakInverse(h, F, one, cop, cop, one);
  }
  return {std::move(F), std::move(*Finv)};
}

VerificationReport checkQuasitriangular(const QuantumGroupoid& q, const QTStructure& qt) {
  const WeakBialgebra& h = q.base();
  const std::size_t n = h.dim();
  VerificationReport report("quasitriangular");
  const Vec one = h.deltaOne();
  const Vec cop = h.deltaOneCop();
  const Vec& R = qt.R;

  compareOnce(report, "R-membership", mul2(h, mul2(h, cop, R), one), R);
  compareOnce(report, "Rinv-membership", mul2(h, mul2(h, one, qt.Rinv), cop), qt.Rinv);

  const Vec r12 = embedLegs(h, 3, R, {0, 1});
  const Vec r13 = embedLegs(h, 3, R, {0, 2});
  const Vec r23 = embedLegs(h, 3, R, {1, 2});
  compareOnce(report, "(id⊗Δ)R=R13R12", comulOnLeg(h, 2, R, 1), mul3(h, r13, r12));
  compareOnce(report, "(Δ⊗id)R=R13R23", comulOnLeg(h, 2, R, 0), mul3(h, r13, r23));

  report.forEach("Δcop(h)R=RΔ(h)", n, [&](std::size_t i) {
    const Vec d = h.comultiply(h.basis(i));
    return std::pair{mul2(h, flip(n, d), R), mul2(h, R, d)};
  });

  compareOnce(report, "R·Rinv=Δcop(1)", mul2(h, R, qt.Rinv), cop);
  compareOnce(report, "Rinv·R=Δ(1)", mul2(h, qt.Rinv, R), one);
  return report;
}

VerificationReport derivedRIdentities(const QuantumGroupoid& q, const QTStructure& qt) {
  const WeakBialgebra& h = q.base();
  const std::size_t n = h.dim();
  VerificationReport report("derived-R-identities");
  const Vec& R = qt.R;
  const Vec one = h.unit();
  const Subspace ht = targetSubalgebra(h);
  const Subspace hs = sourceSubalgebra(h);
  const Matrix id = Matrix::identity(n);
  const Matrix& S = q.antipode();
  const Matrix& Sinv = q.antipodeInverse();
  auto t = [](const Vec& a, const Vec& b) { return tensorVec(a, b); };
  auto m = [&](const Vec& x, const Vec& y) { return mul2(h, x, y); };

  forSubspace(report, "(1⊗z)R=R(z⊗1)", ht,
              [&](const Vec& z) { return std::pair{m(t(one, z), R), m(R, t(z, one))}; });
  forSubspace(report, "(y⊗1)R=R(1⊗y)", hs,
              [&](const Vec& y) { return std::pair{m(t(y, one), R), m(R, t(one, y))}; });
  forSubspace(report, "(z⊗1)R=(1⊗S(z))R", ht,
              [&](const Vec& z) { return std::pair{m(t(z, one), R), m(t(one, q.S(z)), R)}; });
  forSubspace(report, "(1⊗y)R=(S(y)⊗1)R", hs,
              [&](const Vec& y) { return std::pair{m(t(one, y), R), m(t(q.S(y), one), R)}; });
  forSubspace(report, "R(1⊗z)=R(S⁻¹(z)⊗1)", ht,
              [&](const Vec& z) { return std::pair{m(R, t(one, z)), m(R, t(q.Sinv(z), one))}; });
  forSubspace(report, "R(y⊗1)=R(1⊗S⁻¹(y))", hs,
              [&](const Vec& y) { return std::pair{m(R, t(y, one)), m(R, t(one, q.Sinv(y)))}; });

  const Matrix epsS = epsilonSMatrix(h);
  const Matrix epsT = epsilonTMatrix(h);
  compareOnce(report, "(ε_s⊗id)R=Δ(1)", applyPair(epsS, id, R), h.deltaOne());
  compareOnce(report, "(id⊗ε_s)R=(S⊗id)Δcop(1)", applyPair(id, epsS, R),
              applyPair(S, id, h.deltaOneCop()));
  compareOnce(report, "(ε_t⊗id)R=Δcop(1)", applyPair(epsT, id, R), h.deltaOneCop());
  compareOnce(report, "(id⊗ε_t)R=(S⊗id)Δ(1)", applyPair(id, epsT, R),
              applyPair(S, id, h.deltaOne()));
  compareOnce(report, "(S⊗id)R=Rinv", applyPair(S, id, R), qt.Rinv);
  compareOnce(report, "(id⊗S⁻¹)R=Rinv", applyPair(id, Sinv, R), qt.Rinv);
  compareOnce(report, "(S⊗S)R=R", applyPair(S, S, R), R);
  return report;
}

DrinfeldElement drinfeldElement(const QuantumGroupoid& q, const QTStructure& qt) {
  const WeakBialgebra& h = q.base();
  const std::size_t n = h.dim();
  const Matrix id = Matrix::identity(n);
  const Matrix& S = q.antipode();
  const Vec r21 = flip(n, qt.R);
  DrinfeldElement d{contract(h, r21, S, id), contract(h, r21, id, S * S)};
  if (h.multiply(d.u, d.uInv) != h.unit() || h.multiply(d.uInv, d.u) != h.unit()) {
    throw Error("u-not-invertible", "S(R2)R1 and R2 S²(R1) are not mutually inverse");
  }
  return d;
}

VerificationReport checkDrinfeldElement(const QuantumGroupoid& q, const QTStructure& qt,
                                        const DrinfeldElement& d) {
  const WeakBialgebra& h = q.base();
  const std::size_t n = h.dim();
  VerificationReport report("drinfeld-element");
  compareOnce(report, "u·uinv=1", h.multiply(d.u, d.uInv), h.unit());
  compareOnce(report, "uinv·u=1", h.multiply(d.uInv, d.u), h.unit());
  const Matrix conj = h.leftMultiplication(d.u) * h.rightMultiplication(d.uInv);
  const Matrix s2 = q.antipode() * q.antipode();
  report.forEach("S²=u(·)u⁻¹", n,
                 [&](std::size_t j) { return std::pair{s2.column(j), conj.column(j)}; });
  const Vec rhs = mul2(h, mul2(h, qt.Rinv, flip(n, qt.Rinv)), tensorVec(d.u, d.u));
  compareOnce(report, "Δ(u)=Rinv·Rinv21·(u⊗u)", h.comultiply(d.u), rhs);
  return report;
}

QTStructure canonicalR(const WeakBialgebra& h) {
  if (!isCocommutative(h)) {
    throw Error("not-cocommutative", "canonical R = Δcop(1)Δ(1) needs a cocommutative algebra");
  }
  const Vec one = h.deltaOne();
  const Vec cop = h.deltaOneCop();
  return {mul2(h, cop, one), mul2(h, one, cop)};
}

bool isCanonicalR(const WeakBialgebra& h, const QTStructure& qt) {
  return qt.R == mul2(h, h.deltaOneCop(), h.deltaOne());
}

VerificationReport checkWeakCocycle(const QuantumGroupoid& q, const WeakCocycle& wc) {
  const WeakBialgebra& h = q.base();
  VerificationReport report("weak-cocycle");
  const Vec one = h.deltaOne();
  const Vec cop = h.deltaOneCop();
  const Vec& F = wc.F;
  const Vec& Fi = wc.Finv;

  compareOnce(report, "F-membership", mul2(h, mul2(h, one, F), cop), F);
  compareOnce(report, "Finv-membership", mul2(h, mul2(h, cop, Fi), one), Fi);
  compareOnce(report, "F·Finv=Δ(1)", mul2(h, F, Fi), one);
  compareOnce(report, "Finv·F=Δcop(1)", mul2(h, Fi, F), cop);

  const Vec f12 = embedLegs(h, 3, F, {0, 1});
  const Vec f23 = embedLegs(h, 3, F, {1, 2});
  const Vec fi12 = embedLegs(h, 3, Fi, {0, 1});
  const Vec fi23 = embedLegs(h, 3, Fi, {1, 2});
  const Vec dF = comulOnLeg(h, 2, F, 0);    // (Δ⊗id)F
  const Vec Fd = comulOnLeg(h, 2, F, 1);    // (id⊗Δ)F
  const Vec dFi = comulOnLeg(h, 2, Fi, 0);  // (Δ⊗id)F⁻¹
  const Vec Fid = comulOnLeg(h, 2, Fi, 1);  // (id⊗Δ)F⁻¹
  compareOnce(report, "cocycle", mul3(h, dF, f12), mul3(h, Fd, f23));

  const Vec u = h.unit();
  auto t = [](const Vec& a, const Vec& b) { return tensorVec(a, b); };
  auto m = [&](const Vec& x, const Vec& y) { return mul2(h, x, y); };
  const Subspace ht = targetSubalgebra(h);
  const Subspace hs = sourceSubalgebra(h);
  forSubspace(report, "(1⊗y)F=F(y⊗1)", hs,
              [&](const Vec& y) { return std::pair{m(t(u, y), F), m(F, t(y, u))}; });
  forSubspace(report, "(z⊗1)F=F(1⊗z)", ht,
              [&](const Vec& z) { return std::pair{m(t(z, u), F), m(F, t(u, z))}; });
  forSubspace(report, "Finv(1⊗y)=(y⊗1)Finv", hs,
              [&](const Vec& y) { return std::pair{m(Fi, t(u, y)), m(t(y, u), Fi)}; });
  forSubspace(report, "Finv(z⊗1)=(1⊗z)Finv", ht,
              [&](const Vec& z) { return std::pair{m(Fi, t(z, u)), m(t(u, z), Fi)}; });
  forSubspace(report, "(1⊗y)Finv=(S⁻¹(y)⊗1)Finv", hs,
              [&](const Vec& y) { return std::pair{m(t(u, y), Fi), m(t(q.Sinv(y), u), Fi)}; });
  forSubspace(report, "F(z⊗1)=F(1⊗S⁻¹(z))", ht,
              [&](const Vec& z) { return std::pair{m(F, t(z, u)), m(F, t(u, q.Sinv(z)))}; });

  compareOnce(report, "equivalent-form-1", mul3(h, f23, fi12), mul3(h, Fid, dF));
  compareOnce(report, "equivalent-form-2", mul3(h, f12, fi23), mul3(h, dFi, Fd));
  compareOnce(report, "equivalent-form-3", mul3(h, fi23, Fid), mul3(h, fi12, dFi));
  return report;
}

TwistElements twistElements(const QuantumGroupoid& q, const WeakCocycle& wc) {
  const WeakBialgebra& h = q.base();
  const std::size_t n = h.dim();
  const Matrix id = Matrix::identity(n);
  const Matrix& S = q.antipode();
  TwistElements out{contract(h, wc.Finv, id, S), contract(h, wc.F, S, id),
                    VerificationReport("twist-elements")};
  const Vec rhs = mul2(h, mul2(h, applyPair(S, S, flip(n, wc.Finv)), tensorVec(out.vInv, out.vInv)),
                       wc.Finv);
  compareOnce(out.report, "Δ(vinv)=(S⊗S)(F21inv)(vinv⊗vinv)Finv", h.comultiply(out.vInv), rhs);
  out.report.note("v·vinv", formatVec(h.multiply(out.v, out.vInv)));
  return out;
}

}  // namespace qg
