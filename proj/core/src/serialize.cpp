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

#include "qgroupoid/serialize.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace qg {

// ---------------------------------------------------------------------------
// Library

namespace {

template <typename Map>
const typename Map::mapped_type* lookup(const Map& m, const std::string& name) {
  const auto it = m.find(name);
  return it == m.end() ? nullptr : &it->second;
}

}  // namespace

bool Library::contains(const std::string& name) const { return !kindOf(name).empty(); }

std::string Library::kindOf(const std::string& name) const {
  if (bialgebras.count(name)) return "weak-bialgebra";
  if (groupoids.count(name)) return "quantum-groupoid";
  if (qtStructures.count(name)) return "qt-structure";
  if (cocycles.count(name)) return "cocycle";
  if (morphisms.count(name)) return "morphism";
  if (modules.count(name)) return "module";
  return "";
}

std::vector<std::string> Library::names() const {
  std::vector<std::string> out;
  auto collect = [&](const auto& m) {
    for (const auto& [k, v] : m) out.push_back(k);
  };
  collect(bialgebras);
  collect(groupoids);
  collect(qtStructures);
  collect(cocycles);
  collect(morphisms);
  collect(modules);
  std::sort(out.begin(), out.end());
  return out;
}

const WeakBialgebra& Library::algebra(const std::string& name) const {
  if (const auto* b = lookup(bialgebras, name)) return *b;
  if (const auto* q = lookup(groupoids, name)) return q->base();
  throw Error("unknown-object", "no algebra named '" + name + "'");
}

const QuantumGroupoid& Library::groupoid(const std::string& name) const {
  if (const auto* q = lookup(groupoids, name)) return *q;
  throw Error("unknown-object", "no quantum groupoid named '" + name + "'");
}

namespace {

template <typename Map, typename T>
void insertUnique(const Library& lib, Map& m, const std::string& name, T value) {
  if (lib.contains(name)) throw Error("duplicate-object", "object '" + name + "' defined twice");
  m.emplace(name, std::move(value));
}

}  // namespace

void Library::add(const std::string& name, WeakBialgebra b) {
  insertUnique(*this, bialgebras, name, std::move(b));
}
void Library::add(const std::string& name, QuantumGroupoid q) {
  insertUnique(*this, groupoids, name, std::move(q));
}
void Library::add(const std::string& name, QTDocument d) {
  insertUnique(*this, qtStructures, name, std::move(d));
}
void Library::add(const std::string& name, CocycleDocument d) {
  insertUnique(*this, cocycles, name, std::move(d));
}
void Library::add(const std::string& name, MorphismDocument d) {
  insertUnique(*this, morphisms, name, std::move(d));
}
void Library::add(const std::string& name, ModuleDocument d) {
  insertUnique(*this, modules, name, std::move(d));
}

void Library::merge(const Library& other) {
  for (const auto& [k, v] : other.bialgebras) add(k, v);
  for (const auto& [k, v] : other.groupoids) add(k, v);
  for (const auto& [k, v] : other.qtStructures) add(k, v);
  for (const auto& [k, v] : other.cocycles) add(k, v);
  for (const auto& [k, v] : other.morphisms) add(k, v);
  for (const auto& [k, v] : other.modules) add(k, v);
}

Library Library::closure(const std::vector<std::string>& wanted) const {
  std::set<std::string> all;
  for (const auto& name : wanted) {
    if (!contains(name)) throw Error("unknown-object", "no object named '" + name + "'");
    all.insert(name);
    if (const auto* d = lookup(qtStructures, name)) all.insert(d->algebra);
    if (const auto* d = lookup(cocycles, name)) all.insert(d->algebra);
    if (const auto* d = lookup(modules, name)) all.insert(d->algebra);
    if (const auto* d = lookup(morphisms, name)) {
      all.insert(d->source);
      all.insert(d->target);
    }
  }
  Library out;
  for (const auto& name : all) {
    if (const auto* b = lookup(bialgebras, name)) out.add(name, *b);
    if (const auto* q = lookup(groupoids, name)) out.add(name, *q);
    if (const auto* d = lookup(qtStructures, name)) out.add(name, *d);
    if (const auto* d = lookup(cocycles, name)) out.add(name, *d);
    if (const auto* d = lookup(morphisms, name)) out.add(name, *d);
    if (const auto* d = lookup(modules, name)) out.add(name, *d);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

struct Row {
  std::string label;
  std::string values;
  std::size_t line = 0;
};

struct Field {
  std::string key;
  std::string value;
  std::size_t line = 0;
  bool block = false;
  std::vector<Row> rows;
};

struct RawDocument {
  std::string path;
  std::size_t line = 0;
  std::vector<Field> fields;
};

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> tokens(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

std::string where(const std::string& path, std::size_t line) {
  return path + ":" + std::to_string(line);
}

[[noreturn]] void locatedError(const std::string& code, const std::string& path, std::size_t line,
                               const std::string& field, const std::string& msg) {
  throw Error(code, where(path, line) + ": " + (field.empty() ? "" : "field '" + field + "': ") + msg);
}

[[noreturn]] void parseError(const std::string& path, std::size_t line, const std::string& field,
                             const std::string& msg) {
  locatedError("parse-error", path, line, field, msg);
}

std::vector<RawDocument> splitDocuments(const SourceText& src) {
  std::vector<RawDocument> docs;
  RawDocument current{src.path, 0, {}};
  auto finish = [&] {
    if (!current.fields.empty()) docs.push_back(std::move(current));
    current = RawDocument{src.path, 0, {}};
  };
  std::istringstream in(src.text);
  std::size_t lineNo = 0;
  for (std::string raw; std::getline(in, raw);) {
    ++lineNo;
    const std::string line = raw.substr(0, raw.find('#'));
    const std::string body = trim(line);
    if (body.empty()) continue;
    if (body == "---") {
      finish();
      continue;
    }
    const auto colon = body.find(':');
    if (colon == std::string::npos) parseError(src.path, lineNo, "", "expected 'key: value'");
    const std::string key = trim(body.substr(0, colon));
    const std::string value = trim(body.substr(colon + 1));
    const bool indented = line[0] == ' ' || line[0] == '\t';
    if (indented) {
      if (current.fields.empty() || !current.fields.back().block) {
        parseError(src.path, lineNo, "", "indented row outside a block field");
      }
      current.fields.back().rows.push_back({key, value, lineNo});
      continue;
    }
    if (key.empty()) parseError(src.path, lineNo, "", "missing field name");
    if (current.fields.empty()) current.line = lineNo;
    current.fields.push_back({key, value, lineNo, value.empty(), {}});
  }
  finish();
  return docs;
}

/// Field access for one document with strict key checking.
class DocReader {
 public:
  DocReader(const RawDocument& doc, const std::vector<std::string>& allowed) : doc_(doc) {
    std::set<std::string> seen;
    for (const auto& f : doc.fields) {
      if (std::find(allowed.begin(), allowed.end(), f.key) == allowed.end()) {
        parseError(doc.path, f.line, f.key, "unknown field for kind '" + kind() + "'");
      }
      if (!seen.insert(f.key).second) parseError(doc.path, f.line, f.key, "duplicate field");
    }
  }

  std::string kind() const {
    for (const auto& f : doc_.fields) {
      if (f.key == "kind") return f.value;
    }
    return "";
  }

  const Field* find(const std::string& key) const {
    for (const auto& f : doc_.fields) {
      if (f.key == key) return &f;
    }
    return nullptr;
  }

  const Field& require(const std::string& key) const {
    const Field* f = find(key);
    if (!f) parseError(doc_.path, doc_.line, key, "missing required field");
    return *f;
  }

  std::string scalar(const std::string& key) const {
    const Field& f = require(key);
    if (f.block || tokens(f.value).size() != 1) {
      parseError(doc_.path, f.line, key, "expected a single value");
    }
    return f.value;
  }

  std::size_t count(const std::string& key) const {
    const std::string v = scalar(key);
    if (v.find_first_not_of("0123456789") != std::string::npos || v == "0") {
      parseError(doc_.path, require(key).line, key, "expected a positive integer");
    }
    return std::stoul(v);
  }

  std::vector<std::string> names(const std::string& key, std::size_t expected) const {
    const Field& f = require(key);
    const auto t = tokens(f.value);
    if (f.block || t.size() != expected) {
      throw Error("dimension-mismatch", where(doc_.path, f.line) + ": field '" + key +
                                            "': expected " + std::to_string(expected) + " names");
    }
    if (std::set<std::string>(t.begin(), t.end()).size() != t.size()) {
      parseError(doc_.path, f.line, key, "basis names must be distinct");
    }
    return t;
  }

  Vec values(const std::string& text, std::size_t line, const std::string& key,
             std::size_t expected) const {
    Vec out;
    for (const auto& t : tokens(text)) {
      try {
        out.push_back(parseRational(t));
      } catch (const Error& e) {
        parseError(doc_.path, line, key, e.message());
      }
    }
    if (out.size() != expected) {
      throw Error("dimension-mismatch", where(doc_.path, line) + ": field '" + key + "': expected " +
                                            std::to_string(expected) + " values, got " +
                                            std::to_string(out.size()));
    }
    return out;
  }

  Vec inlineVector(const std::string& key, std::size_t expected) const {
    const Field& f = require(key);
    if (f.block) parseError(doc_.path, f.line, key, "expected values on the same line");
    return values(f.value, f.line, key, expected);
  }

  /// Block of rows, one per label, concatenated in label order.
  Vec rows(const Field& f, const std::vector<std::string>& labels, std::size_t perRow) const {
    if (!f.block) parseError(doc_.path, f.line, f.key, "expected an indented block");
    if (f.rows.empty()) parseError(doc_.path, f.line, f.key, "empty section");
    std::vector<std::optional<Vec>> parts(labels.size());
    for (const auto& row : f.rows) {
      const auto canonical = tokens(row.label);
      std::string label;
      for (const auto& t : canonical) label += (label.empty() ? "" : " ") + t;
      const auto it = std::find(labels.begin(), labels.end(), label);
      if (it == labels.end()) {
        parseError(doc_.path, row.line, f.key, "unknown row label '" + row.label + "'");
      }
      auto& slot = parts[it - labels.begin()];
      if (slot) parseError(doc_.path, row.line, f.key, "duplicate row '" + label + "'");
      slot = values(row.values, row.line, f.key, perRow);
    }
    Vec out;
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (!parts[i]) parseError(doc_.path, f.line, f.key, "missing row '" + labels[i] + "'");
      out.insert(out.end(), parts[i]->begin(), parts[i]->end());
    }
    return out;
  }

  Vec rows(const std::string& key, const std::vector<std::string>& labels,
           std::size_t perRow) const {
    return rows(require(key), labels, perRow);
  }

  const RawDocument& doc() const { return doc_; }

 private:
  const RawDocument& doc_;
};

std::string kindOf(const RawDocument& raw) {
  for (const auto& f : raw.fields) {
    if (f.key == "kind") return f.value;
  }
  return "";
}

std::vector<std::string> pairLabels(const std::vector<std::string>& a,
                                    const std::vector<std::string>& b) {
  std::vector<std::string> out;
  for (const auto& x : a) {
    for (const auto& y : b) out.push_back(x + " " + y);
  }
  return out;
}

const std::vector<std::string> kKinds = {"weak-bialgebra", "quantum-groupoid", "qt-structure",
                                         "cocycle",        "morphism",         "module"};

void parseAlgebra(const RawDocument& raw, Library& lib) {
  const bool groupoid = kindOf(raw) == "quantum-groupoid";
  std::vector<std::string> allowed = {"kind", "name", "dim", "basis", "mul", "unit", "comul",
                                      "counit"};
  if (groupoid) allowed.push_back("antipode");
  const DocReader r(raw, allowed);
  const std::string name = r.scalar("name");
  const std::size_t n = r.count("dim");
  const auto basis = r.names("basis", n);
  const Vec mul = r.rows("mul", pairLabels(basis, basis), n);
  const Vec unit = r.inlineVector("unit", n);
  const Vec comul = r.rows("comul", basis, n * n);
  const Vec counit = r.inlineVector("counit", n);
  WeakBialgebra b(name, basis, mul, unit, comul, counit);
  if (!groupoid) {
    lib.add(name, std::move(b));
    return;
  }
  Matrix s;
  if (r.find("antipode")) {
    s = Matrix(n, n, r.rows("antipode", basis, n)).transpose();
  } else {
    s = solveAntipode(b);
  }
  lib.add(name, QuantumGroupoid(std::move(b), s));
}

const WeakBialgebra& referencedAlgebra(const DocReader& r, const Library& lib,
                                       const std::string& key) {
  const std::string name = r.scalar(key);
  try {
    return lib.algebra(name);
  } catch (const Error&) {
    locatedError("unknown-object", r.doc().path, r.require(key).line, key,
                 "unknown algebra '" + name + "'");
  }
}

void parseReferencing(const RawDocument& raw, Library& lib, const Library& algebras) {
  const std::string kind = kindOf(raw);
  if (kind == "qt-structure" || kind == "cocycle") {
    const bool qt = kind == "qt-structure";
    const std::string x = qt ? "R" : "F", xinv = qt ? "Rinv" : "Finv";
    const DocReader r(raw, {"kind", "name", "algebra", x, xinv});
    const std::string name = r.scalar("name");
    const WeakBialgebra& h = referencedAlgebra(r, algebras, "algebra");
    const Vec main = r.rows(x, h.basisNames(), h.dim());
    std::optional<Vec> inv;
    if (r.find(xinv)) inv = r.rows(xinv, h.basisNames(), h.dim());
    if (qt) {
      lib.add(name, QTDocument{r.scalar("algebra"), makeQTStructure(h, main, inv)});
    } else {
      lib.add(name, CocycleDocument{r.scalar("algebra"), makeWeakCocycle(h, main, inv)});
    }
  } else if (kind == "morphism") {
    const DocReader r(raw, {"kind", "name", "source", "target", "map"});
    const WeakBialgebra& src = referencedAlgebra(r, algebras, "source");
    const WeakBialgebra& dst = referencedAlgebra(r, algebras, "target");
    const Vec rows = r.rows("map", src.basisNames(), dst.dim());
    lib.add(r.scalar("name"), MorphismDocument{r.scalar("source"), r.scalar("target"),
                                               Matrix(src.dim(), dst.dim(), rows).transpose()});
  } else {
    const DocReader r(raw, {"kind", "name", "algebra", "dim", "basis", "action"});
    const WeakBialgebra& h = referencedAlgebra(r, algebras, "algebra");
    const std::size_t d = r.count("dim");
    HModule m{r.scalar("name"), r.names("basis", d), {}};
    const Vec rows = r.rows("action", pairLabels(h.basisNames(), m.basisNames), d);
    for (std::size_t i = 0; i < h.dim(); ++i) {
      Matrix a(d, d);
      for (std::size_t v = 0; v < d; ++v) {
        for (std::size_t w = 0; w < d; ++w) a(w, v) = rows[(i * d + v) * d + w];
      }
      m.action.push_back(a);
    }
    lib.add(m.name, ModuleDocument{r.scalar("algebra"), m});
  }
}

}  // namespace

Library parseLibrary(const std::vector<SourceText>& sources) {
  std::vector<RawDocument> docs;
  for (const auto& src : sources) {
    auto part = splitDocuments(src);
    docs.insert(docs.end(), part.begin(), part.end());
  }
  Library lib;
  std::vector<const RawDocument*> later;
  for (const auto& raw : docs) {
    const Field* kind = nullptr;
    for (const auto& f : raw.fields) {
      if (f.key == "kind") kind = &f;
    }
    if (!kind) parseError(raw.path, raw.line, "kind", "missing required field");
    if (std::find(kKinds.begin(), kKinds.end(), kind->value) == kKinds.end()) {
      parseError(raw.path, kind->line, "kind", "unknown kind '" + kind->value + "'");
    }
    try {
      if (kind->value == "weak-bialgebra" || kind->value == "quantum-groupoid") {
        parseAlgebra(raw, lib);
      } else {
        later.push_back(&raw);
      }
    } catch (const Error& e) {
      if (e.code() == "duplicate-object") {
        locatedError(e.code(), raw.path, raw.line, "name", e.message());
      }
      throw;
    }
  }
  const Library algebras = lib;
  for (const auto* raw : later) {
    try {
      parseReferencing(*raw, lib, algebras);
    } catch (const Error& e) {
      if (e.code() == "duplicate-object") {
        locatedError(e.code(), raw->path, raw->line, "name", e.message());
      }
      throw;
    }
  }
  return lib;
}

Library parseLibrary(const std::string& text, const std::string& path) {
  return parseLibrary(std::vector<SourceText>{{path, text}});
}

Library loadLibrary(const std::vector<std::string>& paths) {
  std::vector<SourceText> sources;
  for (const auto& path : paths) {
    std::ifstream in(path);
    if (!in) throw Error("io-error", "cannot read '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    sources.push_back({path, buf.str()});
  }
  return parseLibrary(sources);
}

// ---------------------------------------------------------------------------
// Serialization

namespace {

std::string join(const Vec& v, std::size_t begin, std::size_t count) {
  std::string out;
  for (std::size_t i = begin; i < begin + count; ++i) {
    if (i > begin) out += ' ';
    out += formatRational(v[i]);
  }
  return out;
}

void writeRows(std::ostream& out, const std::string& key, const std::vector<std::string>& labels,
               const Vec& data, std::size_t perRow) {
  out << key << ":\n";
  for (std::size_t i = 0; i < labels.size(); ++i) {
    out << "  " << labels[i] << ": " << join(data, i * perRow, perRow) << '\n';
  }
}

std::string joinNames(const std::vector<std::string>& names) {
  std::string out;
  for (const auto& s : names) out += (out.empty() ? "" : " ") + s;
  return out;
}

void writeAlgebra(std::ostream& out, const std::string& name, const WeakBialgebra& h,
                  const Matrix* antipode) {
  const std::size_t n = h.dim();
  out << "kind: " << (antipode ? "quantum-groupoid" : "weak-bialgebra") << '\n'
      << "name: " << name << '\n'
      << "dim: " << n << '\n'
      << "basis: " << joinNames(h.basisNames()) << '\n';
  writeRows(out, "mul", pairLabels(h.basisNames(), h.basisNames()), h.mulTensor(), n);
  out << "unit: " << join(h.unit(), 0, n) << '\n';
  writeRows(out, "comul", h.basisNames(), h.comulTensor(), n * n);
  out << "counit: " << join(h.counit(), 0, n) << '\n';
  if (antipode) writeRows(out, "antipode", h.basisNames(), antipode->transpose().data(), n);
}

}  // namespace

std::string serializeLibrary(const Library& lib) {
  std::ostringstream out;
  bool first = true;
  for (const auto& name : lib.names()) {
    if (!first) out << "---\n";
    first = false;
    if (const auto* b = lookup(lib.bialgebras, name)) {
      writeAlgebra(out, name, *b, nullptr);
    } else if (const auto* q = lookup(lib.groupoids, name)) {
      writeAlgebra(out, name, q->base(), &q->antipode());
    } else if (const auto* d = lookup(lib.qtStructures, name)) {
      const WeakBialgebra& h = lib.algebra(d->algebra);
      out << "kind: qt-structure\nname: " << name << "\nalgebra: " << d->algebra << '\n';
      writeRows(out, "R", h.basisNames(), d->qt.R, h.dim());
      writeRows(out, "Rinv", h.basisNames(), d->qt.Rinv, h.dim());
    } else if (const auto* c = lookup(lib.cocycles, name)) {
      const WeakBialgebra& h = lib.algebra(c->algebra);
      out << "kind: cocycle\nname: " << name << "\nalgebra: " << c->algebra << '\n';
      writeRows(out, "F", h.basisNames(), c->cocycle.F, h.dim());
      writeRows(out, "Finv", h.basisNames(), c->cocycle.Finv, h.dim());
    } else if (const auto* m = lookup(lib.morphisms, name)) {
      const WeakBialgebra& src = lib.algebra(m->source);
      out << "kind: morphism\nname: " << name << "\nsource: " << m->source
          << "\ntarget: " << m->target << '\n';
      writeRows(out, "map", src.basisNames(), m->matrix.transpose().data(), m->matrix.rows());
    } else if (const auto* md = lookup(lib.modules, name)) {
      const WeakBialgebra& h = lib.algebra(md->algebra);
      const HModule& mod = md->module;
      const std::size_t d = mod.dim();
      out << "kind: module\nname: " << name << "\nalgebra: " << md->algebra << "\ndim: " << d
          << "\nbasis: " << joinNames(mod.basisNames) << '\n';
      Vec rows;
      for (std::size_t i = 0; i < h.dim(); ++i) {
        const Vec cols = mod.action[i].transpose().data();
        rows.insert(rows.end(), cols.begin(), cols.end());
      }
      writeRows(out, "action", pairLabels(h.basisNames(), mod.basisNames), rows, d);
    }
  }
  return out.str();
}

}  // namespace qg
