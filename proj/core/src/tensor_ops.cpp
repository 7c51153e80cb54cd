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

#include <numeric>

#include "qgroupoid/weak_hopf.hpp"

namespace qg {

namespace {

std::size_t power(std::size_t n, std::size_t r) {
  std::size_t p = 1;
  for (std::size_t i = 0; i < r; ++i) p *= n;
  return p;
}

std::vector<std::size_t> digitsOf(std::size_t flat, std::size_t n, std::size_t rank) {
  return decodeIndex(flat, n, rank);
}

std::size_t flatOf(const std::vector<std::size_t>& digits, std::size_t n) {
  std::size_t flat = 0;
  for (auto d : digits) flat = flat * n + d;
  return flat;
}

void checkLength(const Vec& x, std::size_t expected, const char* what) {
  if (x.size() != expected) {
    throw Error("dimension-mismatch", std::string(what) + ": tensor has " +
                                          std::to_string(x.size()) + " entries, expected " +
                                          std::to_string(expected));
  }
}

// Accumulates coeff · ⊗_k factors[k] into out, each factor sparse.
void accumulateProduct(Vec& out, std::size_t n, const std::vector<const SparseVec*>& factors,
                       const Rational& coeff) {
  const std::size_t rank = factors.size();
  std::vector<std::size_t> pos(rank, 0);
  for (const auto* f : factors) {
    if (f->empty()) return;
  }
  while (true) {
    Rational c = coeff;
    std::size_t flat = 0;
    for (std::size_t k = 0; k < rank; ++k) {
      const Term& t = (*factors[k])[pos[k]];
      c *= t.coeff;
      flat = flat * n + t.index;
    }
    out[flat] += c;
    std::size_t k = rank;
    while (k > 0) {
      --k;
      if (++pos[k] < factors[k]->size()) break;
      pos[k] = 0;
      if (k == 0) return;
    }
    if (rank == 0) return;
  }
}

}  // namespace

Vec tensorMultiply(const WeakBialgebra& h, std::size_t rank, const Vec& x, const Vec& y) {
  const std::size_t n = h.dim();
  const std::size_t size = power(n, rank);
  checkLength(x, size, "tensorMultiply");
  checkLength(y, size, "tensorMultiply");
  Vec out = zeroVec(size);
  std::vector<std::pair<std::vector<std::size_t>, const Rational*>> xs, ys;
  for (std::size_t i = 0; i < size; ++i) {
    if (!isZero(x[i])) xs.emplace_back(digitsOf(i, n, rank), &x[i]);
    if (!isZero(y[i])) ys.emplace_back(digitsOf(i, n, rank), &y[i]);
  }
  std::vector<const SparseVec*> factors(rank);
  for (const auto& [dx, cx] : xs) {
    for (const auto& [dy, cy] : ys) {
      bool vanishes = false;
      for (std::size_t k = 0; k < rank; ++k) {
        factors[k] = &h.basisProduct(dx[k], dy[k]);
        if (factors[k]->empty()) {
          vanishes = true;
          break;
        }
      }
      if (!vanishes) accumulateProduct(out, n, factors, (*cx) * (*cy));
    }
  }
  return out;
}

Vec embedLegs(const WeakBialgebra& h, std::size_t rank, const Vec& x,
              const std::vector<std::size_t>& legs) {
  const std::size_t n = h.dim();
  const std::size_t m = legs.size();
  checkLength(x, power(n, m), "embedLegs");
  const SparseVec unit = sparse(h.unit());
  Vec out = zeroVec(power(n, rank));
  std::vector<const SparseVec*> factors(rank, &unit);
  std::vector<SparseVec> holders(m);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (isZero(x[i])) continue;
    const auto d = digitsOf(i, n, m);
    for (std::size_t k = 0; k < m; ++k) {
      holders[k] = {Term{d[k], Rational(1)}};
      factors[legs[k]] = &holders[k];
    }
    accumulateProduct(out, n, factors, x[i]);
  }
  return out;
}

Vec comulOnLeg(const WeakBialgebra& h, std::size_t rank, const Vec& x, std::size_t leg) {
  const std::size_t n = h.dim();
  checkLength(x, power(n, rank), "comulOnLeg");
  Vec out = zeroVec(power(n, rank + 1));
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (isZero(x[i])) continue;
    auto d = digitsOf(i, n, rank);
    for (const Term& t : h.basisCoproduct(d[leg])) {
      std::vector<std::size_t> e;
      e.reserve(rank + 1);
      for (std::size_t k = 0; k < rank; ++k) {
        if (k == leg) {
          e.push_back(t.index / n);
          e.push_back(t.index % n);
        } else {
          e.push_back(d[k]);
        }
      }
      out[flatOf(e, n)] += x[i] * t.coeff;
    }
  }
  return out;
}

Vec mapOnLeg(std::size_t n, std::size_t rank, const Vec& x, std::size_t leg, const Matrix& m) {
  const std::size_t outer = power(n, leg);
  const std::size_t inner = power(n, rank - leg - 1);
  checkLength(x, power(n, rank), "mapOnLeg");
  return applyToBlock(x, outer, inner, m);
}

Vec permuteLegs(std::size_t n, std::size_t rank, const Vec& x,
                const std::vector<std::size_t>& perm) {
  checkLength(x, power(n, rank), "permuteLegs");
  Vec out = zeroVec(x.size());
  std::vector<std::size_t> e(rank);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (isZero(x[i])) continue;
    const auto d = digitsOf(i, n, rank);
    for (std::size_t k = 0; k < rank; ++k) e[k] = d[perm[k]];
    out[flatOf(e, n)] = x[i];
  }
  return out;
}

Vec flip(std::size_t n, const Vec& x) { return permuteLegs(n, 2, x, {1, 0}); }

Vec tensorVec(const Vec& u, const Vec& v) {
  Vec out = zeroVec(u.size() * v.size());
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (isZero(u[i])) continue;
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (!isZero(v[j])) out[i * v.size() + j] = u[i] * v[j];
    }
  }
  return out;
}

Vec applyToBlock(const Vec& x, std::size_t outer, std::size_t inner, const Matrix& m) {
  const std::size_t blockIn = m.cols();
  const std::size_t blockOut = m.rows();
  checkLength(x, outer * blockIn * inner, "applyToBlock");
  // Column-sparse form of m.
  std::vector<SparseVec> cols(blockIn);
  for (std::size_t c = 0; c < blockIn; ++c) {
    for (std::size_t r = 0; r < blockOut; ++r) {
      if (!isZero(m(r, c))) cols[c].push_back({r, m(r, c)});
    }
  }
  Vec out = zeroVec(outer * blockOut * inner);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (isZero(x[i])) continue;
    const std::size_t o = i / (blockIn * inner);
    const std::size_t b = (i / inner) % blockIn;
    const std::size_t in = i % inner;
    for (const Term& t : cols[b]) {
      out[(o * blockOut + t.index) * inner + in] += x[i] * t.coeff;
    }
  }
  return out;
}

Matrix asMatrix(std::size_t n, const Vec& x) {
  checkLength(x, n * n, "asMatrix");
  return Matrix(n, n, x);
}

}  // namespace qg
