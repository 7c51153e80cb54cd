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

#include "qgroupoid/rational.hpp"

#include <cctype>

namespace qg {

namespace {

bool isInteger(std::string_view s) {
  std::size_t i = 0;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) i = 1;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

std::string stripPlus(std::string_view s) {
  if (!s.empty() && s[0] == '+') s.remove_prefix(1);
  return std::string(s);
}

}  // namespace

Rational parseRational(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  if (!isInteger(num)) {
    throw Error("parse-error", "malformed rational '" + std::string(text) + "'");
  }
  mpz_class p(stripPlus(num), 10);
  mpz_class q(1);
  if (slash != std::string_view::npos) {
    const std::string_view den = text.substr(slash + 1);
    if (!isInteger(den) || den[0] == '-' || den[0] == '+') {
      throw Error("parse-error", "malformed rational '" + std::string(text) + "'");
    }
    q = mpz_class(std::string(den), 10);
    if (q == 0) {
      throw Error("parse-error", "zero denominator in '" + std::string(text) + "'");
    }
  }
  Rational r(p, q);
  r.canonicalize();
  return r;
}

std::string formatRational(const Rational& value) {
  // mpq_class(p, q) does not reduce, so format a canonical copy.
  Rational r = value;
  r.canonicalize();
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Vec zeroVec(std::size_t n) { return Vec(n, Rational(0)); }

Vec unitVec(std::size_t n, std::size_t index) {
  Vec v = zeroVec(n);
  v.at(index) = 1;
  return v;
}

bool isZero(const Vec& v) {
  for (const auto& x : v) {
    if (!isZero(x)) return false;
  }
  return true;
}

Vec add(const Vec& a, const Vec& b) {
  Vec out(a);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += b[i];
  return out;
}

Vec sub(const Vec& a, const Vec& b) {
  Vec out(a);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] -= b[i];
  return out;
}

Vec scale(const Vec& a, const Rational& s) {
  Vec out(a);
  for (auto& x : out) x *= s;
  return out;
}

void axpy(Vec& y, const Rational& a, const Vec& x) {
  if (isZero(a)) return;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!isZero(x[i])) y[i] += a * x[i];
  }
}

std::string formatVec(const Vec& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ' ';
    out += formatRational(v[i]);
  }
  return out + "]";
}

}  // namespace qg
