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

#include "qgroupoid/report.hpp"

namespace qg {

bool VerificationReport::passed() const {
  for (const auto& c : checks_) {
    if (!c.passed) return false;
  }
  return true;
}

const Check* VerificationReport::find(const std::string& name) const {
  for (const auto& c : checks_) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

const Check* VerificationReport::firstFailure() const {
  for (const auto& c : checks_) {
    if (!c.passed) return &c;
  }
  return nullptr;
}

void VerificationReport::pass(const std::string& name) {
  checks_.push_back({suite_, name, true, std::nullopt});
}

void VerificationReport::fail(const std::string& name, Witness witness) {
  checks_.push_back({suite_, name, false, std::move(witness)});
}

void VerificationReport::record(const std::string& name, bool ok, Witness witness) {
  if (ok) {
    pass(name);
  } else {
    fail(name, std::move(witness));
  }
}

void VerificationReport::note(const std::string& name, std::string value) {
  notes_.emplace_back(name, std::move(value));
}

void VerificationReport::forEach(
    const std::string& name, std::size_t count,
    const std::function<std::pair<Vec, Vec>(std::size_t)>& instance,
    const std::function<std::vector<std::size_t>(std::size_t)>& decode) {
  for (std::size_t i = 0; i < count; ++i) {
    auto [lhs, rhs] = instance(i);
    if (lhs != rhs) {
      Witness w;
      w.indices = decode ? decode(i) : std::vector<std::size_t>{i};
      w.lhs = std::move(lhs);
      w.rhs = std::move(rhs);
      fail(name, std::move(w));
      return;
    }
  }
  pass(name);
}

void VerificationReport::merge(const VerificationReport& other) {
  checks_.insert(checks_.end(), other.checks_.begin(), other.checks_.end());
  notes_.insert(notes_.end(), other.notes_.begin(), other.notes_.end());
}

std::vector<std::size_t> decodeIndex(std::size_t flat, std::size_t n, std::size_t arity) {
  std::vector<std::size_t> digits(arity);
  for (std::size_t k = arity; k-- > 0;) {
    digits[k] = flat % n;
    flat /= n;
  }
  return digits;
}

}  // namespace qg
