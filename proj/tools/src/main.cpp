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

#include <iostream>

#include <CLI11.hpp>

#include "qgroupoid_cli/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of quantum groupoids, transmutation and twisting"};
  app.require_subcommand(1);
  qgcli::RunConfig config;
  std::string format = "text";

  auto common = [&](CLI::App* sub) {
    sub->add_option("inputs", config.inputs, "Object files");
    sub->add_flag("--builtin", config.builtin, "Include the builtin fixtures");
    sub->add_option("--format", format, "Report format")->check(CLI::IsMember({"text", "structured"}));
    sub->add_flag("--fail-fast", config.failFast, "Stop at the first failed check");
    sub->add_flag("--with-hexagons", config.withHexagons, "Also run the hexagon checks");
    sub->add_option("--out", config.outPath, "Write the report to a file");
  };

  auto* check = app.add_subcommand("check", "Run the axiom suites on every supplied object");
  common(check);
  check->add_option("--name", config.names, "Restrict to these objects");

  auto* transmute = app.add_subcommand("transmute", "Transmute along a morphism (default: identity)");
  common(transmute);
  transmute->add_option("--qt", config.qt, "QT structure of the acting algebra")->required();
  transmute->add_option("--morphism", config.morphism, "Morphism into the ambient algebra");

  auto* quantize = app.add_subcommand("quantize", "Quantize by a weak cocycle");
  common(quantize);
  quantize->add_option("--cocycle", config.cocycle, "Cocycle")->required();

  auto* twist = app.add_subcommand("twist", "Twist a QT quantum groupoid by a cocycle");
  common(twist);
  twist->add_option("--qt", config.qt, "QT structure")->required();
  twist->add_option("--cocycle", config.cocycle, "Cocycle")->required();

  auto* iso = app.add_subcommand("verify-iso", "Check the isomorphism between quantization and transmutation of the twist");
  common(iso);
  iso->add_option("--cocycle", config.cocycle, "Cocycle")->required();
  iso->add_option("--qt", config.qt, "QT structure (default: Δcop(1)Δ(1))");

  auto* zoo = app.add_subcommand("zoo", "Builtin fixtures");
  zoo->add_option("--out", config.outPath, "Write to a file");
  auto* list = zoo->add_subcommand("list", "List builtin objects");
  auto* emit = zoo->add_subcommand("emit", "Print builtin objects (default: all)");
  emit->add_option("names", config.inputs, "Objects to emit, with their dependencies");
  zoo->require_subcommand(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : qgcli::kInputError;
  }

  for (auto* sub : app.get_subcommands()) config.command = sub->get_name();
  if (config.command == "zoo") config.zooAction = list->parsed() ? "list" : "emit";
  config.format = format == "structured" ? qgcli::ReportFormat::Structured : qgcli::ReportFormat::Text;
  return qgcli::run(config, std::cout, std::cerr);
}
