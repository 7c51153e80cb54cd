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

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qgroupoid/qt_cocycle.hpp"
#include "qgroupoid/rep_category.hpp"
#include "qgroupoid/weak_hopf.hpp"

namespace qg {

struct QTDocument {
  std::string algebra;
  QTStructure qt;
};

struct CocycleDocument {
  std::string algebra;
  WeakCocycle cocycle;
};

/// f(e_i) is column i of `matrix`, in the target basis.
struct MorphismDocument {
  std::string source;
  std::string target;
  Matrix matrix;
};

struct ModuleDocument {
  std::string algebra;
  HModule module;
};

/// A set of named objects. Names are unique across kinds; references
/// (algebra, source, target) always resolve inside the library.
struct Library {
  std::map<std::string, WeakBialgebra> bialgebras;
  std::map<std::string, QuantumGroupoid> groupoids;
  std::map<std::string, QTDocument> qtStructures;
  std::map<std::string, CocycleDocument> cocycles;
  std::map<std::string, MorphismDocument> morphisms;
  std::map<std::string, ModuleDocument> modules;

  bool contains(const std::string& name) const;
  /// Kind keyword of a named object ("quantum-groupoid", "cocycle", ...).
  std::string kindOf(const std::string& name) const;
  std::vector<std::string> names() const;

  /// Underlying weak bialgebra of either algebra kind. Throws
  /// Error("unknown-object").
  const WeakBialgebra& algebra(const std::string& name) const;
  const QuantumGroupoid& groupoid(const std::string& name) const;

  void add(const std::string& name, WeakBialgebra b);
  void add(const std::string& name, QuantumGroupoid q);
  void add(const std::string& name, QTDocument d);
  void add(const std::string& name, CocycleDocument d);
  void add(const std::string& name, MorphismDocument d);
  void add(const std::string& name, ModuleDocument d);

  /// Adds every object of `other`; throws Error("duplicate-object").
  void merge(const Library& other);
  /// The named objects plus everything they reference.
  Library closure(const std::vector<std::string>& names) const;
};

struct SourceText {
  std::string path;
  std::string text;
};

/// Parses one or more documents per source; references may cross sources.
/// Errors are Error("parse-error") naming file, line and field, or
/// Error("dimension-mismatch").
Library parseLibrary(const std::vector<SourceText>& sources);
Library parseLibrary(const std::string& text, const std::string& path = "<input>");
Library loadLibrary(const std::vector<std::string>& paths);

/// Canonical text: documents sorted by name, fixed field order, reduced
/// rationals, separated by "---" lines.
std::string serializeLibrary(const Library& lib);

}  // namespace qg
