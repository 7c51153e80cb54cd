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

#include <gtest/gtest.h>

#include <nlohmann/json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "qgroupoid_cli/cli.hpp"

using namespace qgcli;

namespace {

std::string data(const std::string& file) { return std::string(QG_TEST_DATA) + "/" + file; }

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result runWith(RunConfig config) {
  std::ostringstream out, err;
  const int code = run(config, out, err);
  return {code, out.str(), err.str()};
}

RunConfig command(const std::string& name, std::vector<std::string> inputs = {}) {
  RunConfig c;
  c.command = name;
  c.inputs = std::move(inputs);
  return c;
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST(Cli, CheckPassesOnFixtureFile) {
  const Result r = runWith(command("check", {data("N.qg")}));
  EXPECT_EQ(r.code, kPass) << r.out << r.err;
  EXPECT_TRUE(contains(r.out, "object N (quantum-groupoid)"));
  EXPECT_TRUE(contains(r.out, "PASS weak-bialgebra/coassociativity"));
  EXPECT_TRUE(contains(r.out, "failed")) << r.out;
  EXPECT_TRUE(contains(r.out, ", 0 failed"));
}

TEST(Cli, EveryMutantFailsWithWitness) {
  for (const char* group : {"mul", "unit", "comul", "counit", "antipode", "R", "F", "morphism",
                            "module"}) {
    const Result r = runWith(command("check", {data(std::string("mutant_") + group + ".qg")}));
    EXPECT_EQ(r.code, kCheckFailed) << group << "\n" << r.err;
    EXPECT_TRUE(contains(r.out, "FAIL ")) << group;
    EXPECT_TRUE(contains(r.out, "lhs=[")) << group;
  }
}

TEST(Cli, InputErrorsExitTwo) {
  EXPECT_EQ(runWith(command("check", {data("does-not-exist.qg")})).code, kInputError);
  RunConfig unknown = command("transmute", {data("N.qg")});
  unknown.qt = "N.nope";
  const Result r = runWith(unknown);
  EXPECT_EQ(r.code, kInputError);
  EXPECT_TRUE(contains(r.err, "unknown-object")) << r.err;
  RunConfig bad = command("quantize");
  bad.builtin = true;
  bad.cocycle = "kD4.reflection";
  bad.qt = "ignored";
  EXPECT_EQ(runWith(bad).code, kPass);
  RunConfig precondition = command("verify-iso");
  precondition.builtin = true;
  precondition.cocycle = "kD4.reflection";
  precondition.qt = "kD4.central";
  EXPECT_EQ(runWith(precondition).code, kInputError);
}

TEST(Cli, StructuredOutputIsDeterministicJson) {
  RunConfig c = command("quantize");
  c.builtin = true;
  c.cocycle = "kD4.reflection";
  c.format = ReportFormat::Structured;
  const Result a = runWith(c);
  const Result b = runWith(c);
  ASSERT_EQ(a.code, kPass);
  EXPECT_EQ(a.out, b.out);
  const nlohmann::json j = nlohmann::json::parse(a.out);
  EXPECT_EQ(j["command"], "quantize");
  EXPECT_TRUE(j["passed"].get<bool>());
  EXPECT_FALSE(j["checks"].empty());
  EXPECT_TRUE(j["checks"][0].contains("suite"));
}

TEST(Cli, StructuredFailureCarriesWitness) {
  RunConfig c = command("check", {data("mutant_counit.qg")});
  c.format = ReportFormat::Structured;
  const Result r = runWith(c);
  EXPECT_EQ(r.code, kCheckFailed);
  const nlohmann::json j = nlohmann::json::parse(r.out);
  EXPECT_FALSE(j["passed"].get<bool>());
  // Axiom failures carry basis indices and both sides; errors raised while
  // running a suite carry a detail message instead.
  std::size_t failures = 0;
  for (const auto& check : j["checks"]) {
    if (check["passed"].get<bool>()) continue;
    const auto& w = check["witness"];
    if (failures++ == 0) {
      EXPECT_FALSE(w["indices"].empty());
      EXPECT_NE(w["lhs"], w["rhs"]);
    }
    EXPECT_TRUE(!w["indices"].empty() || !w["detail"].get<std::string>().empty()) << check;
  }
  EXPECT_GT(failures, 0u);
}

TEST(Cli, FailFastStopsEarly) {
  RunConfig slow = command("check", {data("mutant_mul.qg")});
  RunConfig fast = slow;
  fast.failFast = true;
  const Result a = runWith(slow);
  const Result b = runWith(fast);
  EXPECT_EQ(a.code, kCheckFailed);
  EXPECT_EQ(b.code, kCheckFailed);
  EXPECT_LT(b.out.size(), a.out.size());
}

TEST(Cli, OutFileReceivesTheReport) {
  const std::string path = ::testing::TempDir() + "qg_cli_out.txt";
  RunConfig c = command("transmute", {data("N.qg")});
  c.qt = "N.R";
  c.outPath = path;
  const Result r = runWith(c);
  EXPECT_EQ(r.code, kPass);
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  EXPECT_TRUE(contains(ss.str(), "== presentation"));
  std::remove(path.c_str());
}

TEST(Cli, TransmuteAlongMorphism) {
  RunConfig c = command("transmute", {data("N.qg")});
  c.qt = "N.R";
  c.morphism = "N.swap";
  EXPECT_EQ(runWith(c).code, kPass);
}

TEST(Cli, TwistEmitsLoadableLibrary) {
  RunConfig c = command("twist");
  c.builtin = true;
  c.qt = "kD4.R";
  c.cocycle = "kD4.reflection";
  const Result r = runWith(c);
  EXPECT_EQ(r.code, kPass) << r.err;
  EXPECT_TRUE(contains(r.out, "name: kD4_F"));
}

TEST(Cli, VerifyIsoReportsAllSuites) {
  RunConfig c = command("verify-iso");
  c.builtin = true;
  c.cocycle = "kD4+N.F";
  const Result r = runWith(c);
  EXPECT_EQ(r.code, kPass) << r.out;
  for (const char* suite : {"isomorphism/", "alpha", "category-identification/"}) {
    EXPECT_TRUE(contains(r.out, suite)) << suite;
  }
}

TEST(Cli, ZooListAndEmit) {
  RunConfig list = command("zoo");
  list.zooAction = "list";
  const Result l = runWith(list);
  EXPECT_EQ(l.code, kPass);
  EXPECT_TRUE(contains(l.out, "kD4.reflection"));
  RunConfig emit = command("zoo", {"N", "N.R", "N.F", "N.swap", "N.regular"});
  emit.zooAction = "emit";
  const Result e = runWith(emit);
  std::ifstream in(data("N.qg"));
  std::stringstream ss;
  ss << in.rdbuf();
  EXPECT_EQ(e.out, ss.str());
}
