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

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qg {

// Exact rationals. mpq_class arithmetic keeps values in lowest terms with a
// positive denominator; values built from text are canonicalized on entry.
using Rational = mpq_class;
using Vec = std::vector<Rational>;

// Library-wide error with a stable machine-readable code
// ("inconsistent", "no-antipode", "parse-error", ...).
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(code + ": " + message), code_(std::move(code)), message_(message) {}
  const std::string& code() const noexcept { return code_; }
  /// The message without the code prefix.
  const std::string& message() const noexcept { return message_; }

 private:
  std::string code_;
  std::string message_;
};

/// Parses "p", "-p" or "p/q". Throws Error("parse-error") on malformed input
/// or a zero denominator.
Rational parseRational(std::string_view text);

/// Canonical text form: "p/q", or "p" when q = 1; the sign sits on p.
std::string formatRational(const Rational& value);

inline bool isZero(const Rational& value) { return sgn(value) == 0; }

Vec zeroVec(std::size_t n);
Vec unitVec(std::size_t n, std::size_t index);
bool isZero(const Vec& v);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Vec& a, const Rational& s);
void axpy(Vec& y, const Rational& a, const Vec& x);  // y += a*x
std::string formatVec(const Vec& v);

}  // namespace qg
