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

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qgroupoid/rational.hpp"

namespace qg {

/// First counterexample found for a check: the basis indices of the failing
/// instance and both sides' coefficient vectors.
struct Witness {
  std::vector<std::size_t> indices;
  Vec lhs;
  Vec rhs;
  std::string detail;
};

struct Check {
  std::string suite;
  std::string name;
  bool passed = true;
  std::optional<Witness> witness;
};

class VerificationReport {
 public:
  VerificationReport() = default;
  explicit VerificationReport(std::string suite) : suite_(std::move(suite)) {}

  const std::string& suite() const { return suite_; }
  const std::vector<Check>& checks() const { return checks_; }
  const std::vector<std::pair<std::string, std::string>>& notes() const { return notes_; }

  bool passed() const;
  const Check* find(const std::string& name) const;
  const Check* firstFailure() const;

  void pass(const std::string& name);
  void fail(const std::string& name, Witness witness);
  void record(const std::string& name, bool ok, Witness witness = {});

  /// Records a value for inspection without asserting anything about it.
  void note(const std::string& name, std::string value);

  /// Runs `instance` for every index in [0, count) and records the first
  /// instance whose two sides differ. `decode` turns the flat index into the
  /// basis indices reported in the witness.
  void forEach(const std::string& name, std::size_t count,
               const std::function<std::pair<Vec, Vec>(std::size_t)>& instance,
               const std::function<std::vector<std::size_t>(std::size_t)>& decode = {});

  /// Appends another report's checks, keeping their suite names.
  void merge(const VerificationReport& other);

 private:
  std::string suite_;
  std::vector<Check> checks_;
  std::vector<std::pair<std::string, std::string>> notes_;
};

/// Decodes a flat index into `arity` digits base `n`, most significant first.
std::vector<std::size_t> decodeIndex(std::size_t flat, std::size_t n, std::size_t arity);

}  // namespace qg
