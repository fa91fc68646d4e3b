// Copyright 2026 The qevo Authors
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

#ifndef QEVO_TOOLS_CONFIG_HPP
#define QEVO_TOOLS_CONFIG_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace qevo_cli {

enum class Command { kAnalyze, kTransform, kSimulate, kScan };
enum class OutputFormat { kJson, kCsv };
enum class Constraint { kSymmetricOffDiagonal, kFullSimplex };

struct DynamicsConfig {
  double dt = 0.01;
  long steps = 5000;
  std::vector<double> x0;  // required for simulate
  double perturbation = 0.01;
};

struct ScanConfig {
  int resolution = 51;
  Constraint constraint = Constraint::kSymmetricOffDiagonal;
};

struct OutputConfig {
  std::string path;  // empty writes to stdout
  OutputFormat format = OutputFormat::kJson;
};

// Parsed run configuration. The JSON schema is documented in
// docs/config_schema.md; docs/examples/ ships one config per regime.
struct RunConfig {
  Command command = Command::kAnalyze;
  std::string description;
  int n = 0;                  // alpha is n x n, row-major
  std::vector<double> alpha;
  std::optional<std::vector<double>> weights;  // n x n, row-major
  // Either a preset name ("rsp3", "id-swap2"), or explicit permutation rows;
  // both empty means "default for n".
  std::string operator_preset;
  std::optional<std::vector<std::vector<int>>> operator_perms;
  DynamicsConfig dynamics;
  ScanConfig scan;
  OutputConfig output;
};

struct Diagnostic {
  std::string field;  // empty for whole-document (syntax) problems
  std::string message;

  std::string to_string() const {
    return field.empty() ? message : field + ": " + message;
  }
};

struct ParseResult {
  std::optional<RunConfig> config;
  // All problems found, not just the first; syntax errors yield exactly one
  // entry carrying the position.
  std::vector<Diagnostic> diagnostics;

  bool ok() const { return config.has_value(); }
};

// Parses and validates a config document. On success diagnostics is empty
// and config is set; on failure config is absent and every detected problem
// is listed.
ParseResult parse_config_text(const std::string& text);

// Inverse of parsing: a JSON document that parses back to a field-for-field
// identical RunConfig.
std::string serialize_config(const RunConfig& config);

const char* command_name(Command c);
const char* format_name(OutputFormat f);
const char* constraint_name(Constraint c);

}  // namespace qevo_cli

#endif  // QEVO_TOOLS_CONFIG_HPP
