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

#include "qgroupoid_cli/cli.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "qgroupoid/serialize.hpp"
#include "qgroupoid/twisting.hpp"
#include "qgroupoid/zoo.hpp"

namespace qgcli {

namespace {

using qg::Error;
using qg::VerificationReport;
using Json = nlohmann::ordered_json;

/// Errors that mean the inputs themselves are unusable (exit 2); every other
/// library error is reported as a failed construction (exit 1).
bool isInputError(const std::string& code) {
  static const std::set<std::string> codes = {
      "parse-error",        "dimension-mismatch", "unknown-object",    "duplicate-object",
      "io-error",           "usage-error",        "precondition-unmet", "not-cocommutative",
      "mismatched-algebra", "invalid-groupoid",   "not-a-bicharacter"};
  return codes.count(code) > 0;
}

[[noreturn]] void usage(const std::string& msg) { throw Error("usage-error", msg); }

class Session {
 public:
  explicit Session(const RunConfig& config) : config_(config) {}

  /// Runs one suite unless an earlier failure stopped the session.
  void add(const std::string& label, const std::function<VerificationReport()>& suite) {
    if (stopped_) return;
    VerificationReport report;
    try {
      report = suite();
    } catch (const Error& e) {
      if (isInputError(e.code())) throw;
      report = VerificationReport(label);
      report.fail(e.code(), {{}, {}, {}, e.message()});
    }
    if (!report.passed() && config_.failFast) stopped_ = true;
    reports_.push_back(std::move(report));
  }

  void object(const std::string& name, const std::string& kind) {
    objects_.emplace_back(name, kind);
  }
  void artifact(const std::string& name, std::string text) {
    if (!stopped_) artifacts_.emplace_back(name, std::move(text));
  }

  bool passed() const {
    for (const auto& r : reports_) {
      if (!r.passed()) return false;
    }
    return true;
  }

  std::string render() const {
    return config_.format == ReportFormat::Text ? renderText() : renderJson();
  }

 private:
  /// Checks in order, truncated after the first failure under --fail-fast.
  template <typename Fn>
  void visit(Fn&& fn) const {
    for (const auto& r : reports_) {
      for (const auto& c : r.checks()) {
        fn(c);
        if (!c.passed && config_.failFast) return;
      }
    }
  }

  std::string renderText() const {
    std::ostringstream out;
    out << "qgroupoid " << config_.command << '\n';
    for (const auto& [name, kind] : objects_) out << "object " << name << " (" << kind << ")\n";
    std::size_t total = 0, failed = 0;
    visit([&](const qg::Check& c) {
      ++total;
      out << (c.passed ? "PASS " : "FAIL ") << c.suite << '/' << c.name;
      if (!c.passed) {
        ++failed;
        if (c.witness) {
          const auto& w = *c.witness;
          if (!w.indices.empty()) {
            out << " indices=";
            for (std::size_t i = 0; i < w.indices.size(); ++i) out << (i ? "," : "") << w.indices[i];
          }
          if (!w.lhs.empty() || !w.rhs.empty()) {
            out << " lhs=" << qg::formatVec(w.lhs) << " rhs=" << qg::formatVec(w.rhs);
          }
          if (!w.detail.empty()) out << " detail=\"" << w.detail << '"';
        }
      }
      out << '\n';
    });
    for (const auto& r : reports_) {
      for (const auto& [name, value] : r.notes()) out << "NOTE " << r.suite() << '/' << name << ": " << value << '\n';
    }
    for (const auto& [name, text] : artifacts_) out << "== " << name << " ==\n" << text;
    out << "summary: " << total << " checks, " << failed << " failed\n";
    return out.str();
  }

  std::string renderJson() const {
    Json doc;
    doc["command"] = config_.command;
    doc["objects"] = Json::array();
    for (const auto& [name, kind] : objects_) doc["objects"].push_back({{"name", name}, {"kind", kind}});
    auto vec = [](const qg::Vec& v) {
      Json a = Json::array();
      for (const auto& x : v) a.push_back(qg::formatRational(x));
      return a;
    };
    doc["checks"] = Json::array();
    bool ok = true;
    visit([&](const qg::Check& c) {
      Json j{{"suite", c.suite}, {"name", c.name}, {"passed", c.passed}};
      if (!c.passed && c.witness) {
        j["witness"] = {{"indices", c.witness->indices},
                        {"lhs", vec(c.witness->lhs)},
                        {"rhs", vec(c.witness->rhs)},
                        {"detail", c.witness->detail}};
      }
      ok = ok && c.passed;
      doc["checks"].push_back(std::move(j));
    });
    doc["notes"] = Json::array();
    for (const auto& r : reports_) {
      for (const auto& [name, value] : r.notes()) {
        doc["notes"].push_back({{"suite", r.suite()}, {"name", name}, {"value", value}});
      }
    }
    if (!artifacts_.empty()) {
      doc["presentations"] = Json::object();
      for (const auto& [name, text] : artifacts_) doc["presentations"][name] = text;
    }
    doc["passed"] = ok;
    return doc.dump(2) + "\n";
  }

  const RunConfig& config_;
  bool stopped_ = false;
  std::vector<VerificationReport> reports_;
  std::vector<std::pair<std::string, std::string>> objects_;
  std::vector<std::pair<std::string, std::string>> artifacts_;
};

qg::Library loadInputs(const RunConfig& config) {
  qg::Library lib = config.inputs.empty() ? qg::Library{} : qg::loadLibrary(config.inputs);
  if (config.builtin) lib.merge(qg::builtinZoo());
  return lib;
}

VerificationReport counitalProperties(const qg::QuantumGroupoid& q) {
  VerificationReport report("properties");
  const qg::WeakBialgebra& h = q.base();
  const qg::Matrix et = qg::epsilonTMatrix(h), es = qg::epsilonSMatrix(h);
  report.forEach("ε_t∘ε_t=ε_t", 1, [&](std::size_t) { return std::pair{(et * et).data(), et.data()}; });
  report.forEach("ε_s∘ε_s=ε_s", 1, [&](std::size_t) { return std::pair{(es * es).data(), es.data()}; });
  const qg::HModule reg = qg::regularModule(h);
  const qg::Matrix p = qg::truncatedTensor(q, reg, reg).projector;
  report.forEach("P²=P", 1, [&](std::size_t) { return std::pair{(p * p).data(), p.data()}; });
  return report;
}

void runCheck(const RunConfig& config, const qg::Library& lib, Session& s) {
  std::vector<std::string> names = config.names.empty() ? lib.names() : config.names;
  if (names.empty()) usage("nothing to check: give input files or --builtin");
  for (const auto& name : names) {
    const std::string kind = lib.kindOf(name);
    if (kind.empty()) throw Error("unknown-object", "no object named '" + name + "'");
    s.object(name, kind);
    if (kind == "weak-bialgebra") {
      s.add(name, [&] { return qg::checkWeakBialgebra(lib.algebra(name)); });
    } else if (kind == "quantum-groupoid") {
      const auto& q = lib.groupoid(name);
      s.add(name, [&] { return qg::checkQuantumGroupoid(q); });
      s.add(name, [&] { return counitalProperties(q); });
      s.add(name, [&] {
        VerificationReport r("antipode-oracle");
        r.forEach("solveAntipode=S", 1, [&](std::size_t) {
          return std::pair{qg::solveAntipode(q.base()).data(), q.antipode().data()};
        });
        return r;
      });
    } else if (kind == "qt-structure") {
      const auto& d = lib.qtStructures.at(name);
      const auto& q = lib.groupoid(d.algebra);
      s.add(name, [&] { return qg::checkQuasitriangular(q, d.qt); });
      s.add(name, [&] { return qg::derivedRIdentities(q, d.qt); });
      s.add(name, [&] { return qg::checkDrinfeldElement(q, d.qt, qg::drinfeldElement(q, d.qt)); });
      const qg::HModule reg = qg::regularModule(q.base());
      s.add(name, [&] { return qg::checkBraiding(q, qg::braidingPsi(q, d.qt, reg, reg), reg, reg); });
      if (config.withHexagons) {
        s.add(name, [&] { return qg::checkHexagons(q, reg, qg::psiElement(q, d.qt)); });
      }
    } else if (kind == "cocycle") {
      const auto& d = lib.cocycles.at(name);
      const auto& q = lib.groupoid(d.algebra);
      s.add(name, [&] { return qg::checkWeakCocycle(q, d.cocycle); });
      s.add(name, [&] { return qg::checkVInverseCoproduct(q, d.cocycle); });
      if (qg::isCocommutative(q.base())) {
        const qg::HModule ad = qg::adjointModule(q);
        s.add(name, [&] {
          return qg::checkBraiding(q, qg::braidingPhi(q, d.cocycle, ad, ad), ad, ad, &d.cocycle);
        });
        if (config.withHexagons) {
          s.add(name, [&] {
            return qg::checkHexagons(q, ad, qg::phiElement(q, d.cocycle), &d.cocycle);
          });
        }
      }
    } else if (kind == "morphism") {
      const auto& d = lib.morphisms.at(name);
      s.add(name, [&] {
        return qg::checkMorphism({lib.groupoid(d.source), lib.groupoid(d.target), d.matrix});
      });
    } else {
      const auto& d = lib.modules.at(name);
      s.add(name, [&] { return qg::checkModule(lib.algebra(d.algebra), d.module); });
      if (lib.groupoids.count(d.algebra)) {
        s.add(name, [&] { return qg::checkUnitors(lib.groupoid(d.algebra), d.module); });
      }
    }
  }
}

const qg::QTDocument& qtDoc(const qg::Library& lib, const std::string& name) {
  if (!lib.qtStructures.count(name)) throw Error("unknown-object", "no qt-structure named '" + name + "'");
  return lib.qtStructures.at(name);
}

const qg::CocycleDocument& cocycleDoc(const qg::Library& lib, const std::string& name) {
  if (!lib.cocycles.count(name)) throw Error("unknown-object", "no cocycle named '" + name + "'");
  return lib.cocycles.at(name);
}

void runTransmute(const RunConfig& config, const qg::Library& lib, Session& s) {
  if (config.qt.empty()) usage("transmute needs --qt");
  const auto& d = qtDoc(lib, config.qt);
  const auto& h = lib.groupoid(d.algebra);
  s.object(config.qt, "qt-structure");
  qg::QGMorphism f = qg::identityMorphism(h);
  if (!config.morphism.empty()) {
    if (!lib.morphisms.count(config.morphism)) {
      throw Error("unknown-object", "no morphism named '" + config.morphism + "'");
    }
    const auto& m = lib.morphisms.at(config.morphism);
    if (m.source != d.algebra) {
      throw Error("mismatched-algebra", "morphism '" + config.morphism + "' does not start at '" +
                                            d.algebra + "'");
    }
    f = {h, lib.groupoid(m.target), m.matrix};
    s.object(config.morphism, "morphism");
    s.add(config.morphism, [&] { return qg::checkMorphism(f); });
  }
  s.add("transmute", [&] {
    const auto p = qg::transmute(h, d.qt, f);
    s.artifact("presentation " + f.target.name(), qg::serializePresentation(p));
    return qg::verifyBraidedHopf(p);
  });
}

void runQuantize(const RunConfig& config, const qg::Library& lib, Session& s) {
  if (config.cocycle.empty()) usage("quantize needs --cocycle");
  const auto& d = cocycleDoc(lib, config.cocycle);
  const auto& h = lib.groupoid(d.algebra);
  s.object(config.cocycle, "cocycle");
  s.add("quantize", [&] {
    const auto p = qg::quantize(h, d.cocycle);
    s.artifact("presentation " + h.name() + "_F", qg::serializePresentation(p));
    return qg::verifyQuantization(p);
  });
}

void runTwist(const RunConfig& config, const qg::Library& lib, Session& s) {
  if (config.qt.empty() || config.cocycle.empty()) usage("twist needs --qt and --cocycle");
  const auto& r = qtDoc(lib, config.qt);
  const auto& c = cocycleDoc(lib, config.cocycle);
  if (r.algebra != c.algebra) {
    throw Error("mismatched-algebra", "'" + config.qt + "' and '" + config.cocycle +
                                          "' live on different algebras");
  }
  const auto& h = lib.groupoid(r.algebra);
  s.object(config.qt, "qt-structure");
  s.object(config.cocycle, "cocycle");
  std::optional<qg::TwistedPair> tp;
  s.add("twist", [&] {
    tp = qg::twist(h, r.qt, c.cocycle);
    qg::Library out;
    out.add(tp->twisted.name(), tp->twisted);
    out.add(tp->twisted.name() + ".R", qg::QTDocument{tp->twisted.name(), tp->twistedQt});
    s.artifact("twisted", qg::serializeLibrary(out));
    VerificationReport report = qg::checkQuantumGroupoid(tp->twisted);
    report.merge(qg::checkQuasitriangular(tp->twisted, tp->twistedQt));
    return report;
  });
  s.add("twist", [&] { return qg::checkVInverseCoproduct(h, c.cocycle); });
  if (tp) s.add("twist", [&] { return qg::checkCategoryIdentification(*tp); });
}

void runVerifyIso(const RunConfig& config, const qg::Library& lib, Session& s) {
  if (config.cocycle.empty()) usage("verify-iso needs --cocycle");
  const auto& c = cocycleDoc(lib, config.cocycle);
  const auto& h = lib.groupoid(c.algebra);
  s.object(config.cocycle, "cocycle");
  qg::QTStructure qt;
  if (config.qt.empty()) {
    if (!qg::isCocommutative(h.base())) {
      throw Error("not-cocommutative", "'" + h.name() + "' is not cocommutative");
    }
    qt = qg::canonicalR(h.base());
  } else {
    const auto& r = qtDoc(lib, config.qt);
    if (r.algebra != c.algebra) {
      throw Error("mismatched-algebra", "'" + config.qt + "' and '" + config.cocycle +
                                            "' live on different algebras");
    }
    s.object(config.qt, "qt-structure");
    qt = r.qt;
  }
  if (!qg::isCocommutative(h.base())) throw Error("not-cocommutative", "'" + h.name() + "' is not cocommutative");
  if (!qg::isCanonicalR(h.base(), qt)) {
    throw Error("precondition-unmet", "the isomorphism needs R = Δcop(1)Δ(1)");
  }
  s.add("verify-iso", [&] { return qg::verifyIsomorphism(h, qt, c.cocycle); });
  s.add("verify-iso", [&] { return qg::alphaMap(h, qt, c.cocycle).report; });
  s.add("verify-iso", [&] { return qg::checkVInverseCoproduct(h, c.cocycle); });
  s.add("verify-iso", [&] { return qg::checkCategoryIdentification(qg::twist(h, qt, c.cocycle)); });
  s.add("verify-iso", [&] {
    const auto tp = qg::twist(h, qt, c.cocycle);
    s.artifact("presentation C_F", qg::serializePresentation(qg::quantize(h, c.cocycle)));
    s.artifact("presentation C~",
               qg::serializePresentation(qg::selfTransmute(tp.twisted, tp.twistedQt)));
    return VerificationReport("verify-iso");
  });
}

int runZoo(const RunConfig& config, std::ostream& out) {
  const qg::Library lib = qg::builtinZoo();
  if (config.zooAction == "list") {
    for (const auto& name : lib.names()) out << name << ' ' << lib.kindOf(name) << '\n';
    return kPass;
  }
  if (config.zooAction == "emit") {
    out << qg::serializeLibrary(config.inputs.empty() ? lib : lib.closure(config.inputs));
    return kPass;
  }
  usage("zoo needs 'list' or 'emit'");
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    std::ostringstream buffer;
    int code = kPass;
    if (config.command == "zoo") {
      code = runZoo(config, buffer);
    } else {
      const qg::Library lib = loadInputs(config);
      Session session(config);
      if (config.command == "check") {
        runCheck(config, lib, session);
      } else if (config.command == "transmute") {
        runTransmute(config, lib, session);
      } else if (config.command == "quantize") {
        runQuantize(config, lib, session);
      } else if (config.command == "twist") {
        runTwist(config, lib, session);
      } else if (config.command == "verify-iso") {
        runVerifyIso(config, lib, session);
      } else {
        usage("unknown command '" + config.command + "'");
      }
      buffer << session.render();
      code = session.passed() ? kPass : kCheckFailed;
    }
    if (config.outPath.empty()) {
      out << buffer.str();
    } else {
      std::ofstream file(config.outPath);
      if (!file) throw Error("io-error", "cannot write '" + config.outPath + "'");
      file << buffer.str();
    }
    return code;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return isInputError(e.code()) ? kInputError : kCheckFailed;
  }
}

}  // namespace qgcli
