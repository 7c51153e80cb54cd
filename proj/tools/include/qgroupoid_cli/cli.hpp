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

#include <iosfwd>
#include <string>
#include <vector>

namespace qgcli {

enum class ReportFormat { Text, Structured };

/// One invocation of the command-line tool, already parsed.
struct RunConfig {
  std::string command;               // check | transmute | quantize | twist | verify-iso | zoo
  std::string zooAction;             // list | emit
  std::vector<std::string> inputs;   // files, or object names for `zoo emit`
  std::vector<std::string> names;    // restricts `check` to these objects
  std::string qt;
  std::string cocycle;
  std::string morphism;
  bool builtin = false;              // add the builtin fixtures to the inputs
  ReportFormat format = ReportFormat::Text;
  bool failFast = false;
  bool withHexagons = false;
  std::string outPath;               // empty: write to `out`
};

/// Exit codes.
inline constexpr int kPass = 0;
inline constexpr int kCheckFailed = 1;
inline constexpr int kInputError = 2;

/// Runs a command; the report goes to `out` (or the --out file), input
/// errors to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace qgcli
