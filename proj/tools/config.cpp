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

#include "config.hpp"

#include <cmath>
#include <json.hpp>
#include <sstream>

namespace qevo_cli {
namespace {

using nlohmann::ordered_json;

std::string num_str(double v) { return ordered_json(v).dump(); }

// Byte offset -> 1-based line/column for syntax diagnostics.
std::pair<size_t, size_t> line_column(const std::string& text, size_t byte) {
  size_t line = 1, column = 1;
  for (size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

struct Validator {
  const ordered_json& root;
  std::vector<Diagnostic>& diags;

  void error(std::string field, std::string message) {
    diags.push_back({std::move(field), std::move(message)});
  }

  // Reads an n x n numeric grid given as rows; returns flattened row-major
  // values, or nullopt after recording diagnostics.
  std::optional<std::vector<double>> grid(const ordered_json& j,
                                          const std::string& field) {
    if (!j.is_array() || j.empty()) {
      error(field, "expected an array of rows");
      return std::nullopt;
    }
    const size_t n = j.size();
    if (n != 2 && n != 3) {
      error(field, "expected 2 or 3 rows, got " + std::to_string(n));
      return std::nullopt;
    }
    std::vector<double> flat;
    flat.reserve(n * n);
    bool bad = false;
    for (size_t r = 0; r < n; ++r) {
      const ordered_json& row = j[r];
      const std::string row_field = field + "[" + std::to_string(r) + "]";
      if (!row.is_array() || row.size() != n) {
        error(row_field, "expected " + std::to_string(n) + " entries");
        bad = true;
        continue;
      }
      for (size_t c = 0; c < n; ++c) {
        if (!row[c].is_number()) {
          error(row_field + "[" + std::to_string(c) + "]",
                "expected a number");
          bad = true;
          continue;
        }
        const double v = row[c].get<double>();
        if (!std::isfinite(v)) {
          error(row_field + "[" + std::to_string(c) + "]",
                "value must be finite");
          bad = true;
          continue;
        }
        flat.push_back(v);
      }
    }
    if (bad) return std::nullopt;
    return flat;
  }

  void check_weight_values(const std::vector<double>& w,
                           const std::string& field) {
    double sum = 0.0;
    for (double v : w) {
      if (v < -1e-12)
        error(field, "entry " + num_str(v) + " is negative");
      sum += v;
    }
    if (std::abs(sum - 1.0) > 1e-9)
      error(field, "normalization violated: sum=" + num_str(sum));
  }
};

}  // namespace

const char* command_name(Command c) {
  switch (c) {
    case Command::kAnalyze:
      return "analyze";
    case Command::kTransform:
      return "transform";
    case Command::kSimulate:
      return "simulate";
    case Command::kScan:
      return "scan";
  }
  return "?";
}

const char* format_name(OutputFormat f) {
  return f == OutputFormat::kJson ? "json" : "csv";
}

const char* constraint_name(Constraint c) {
  return c == Constraint::kSymmetricOffDiagonal ? "symmetric-off-diagonal"
                                                : "full-simplex";
}

ParseResult parse_config_text(const std::string& text) {
  ParseResult result;
  ordered_json root;
  try {
    root = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    const auto [line, column] = line_column(text, e.byte > 0 ? e.byte - 1 : 0);
    std::ostringstream os;
    os << "syntax error at line " << line << ", column " << column;
    result.diagnostics.push_back({"", os.str()});
    return result;
  }

  Validator v{root, result.diagnostics};
  if (!root.is_object()) {
    v.error("", "config must be a JSON object");
    return result;
  }

  static const char* kKnownKeys[] = {"command", "description", "alpha",
                                     "weights", "operator_set", "dynamics",
                                     "scan", "output"};
  for (const auto& [key, value] : root.items()) {
    bool known = false;
    for (const char* k : kKnownKeys) known = known || key == k;
    if (!known) v.error(key, "unknown field");
  }

  RunConfig cfg;

  // command
  if (!root.contains("command") || !root["command"].is_string()) {
    v.error("command",
            "missing or non-string; expected one of analyze, transform, "
            "simulate, scan");
  } else {
    const std::string c = root["command"].get<std::string>();
    if (c == "analyze")
      cfg.command = Command::kAnalyze;
    else if (c == "transform")
      cfg.command = Command::kTransform;
    else if (c == "simulate")
      cfg.command = Command::kSimulate;
    else if (c == "scan")
      cfg.command = Command::kScan;
    else
      v.error("command", "unknown command \"" + c + "\"");
  }

  if (root.contains("description")) {
    if (root["description"].is_string())
      cfg.description = root["description"].get<std::string>();
    else
      v.error("description", "expected a string");
  }

  // alpha
  if (!root.contains("alpha")) {
    v.error("alpha", "missing required field (the classical payoff matrix)");
  } else if (auto a = v.grid(root["alpha"], "alpha")) {
    cfg.alpha = std::move(*a);
    cfg.n = cfg.alpha.size() == 4 ? 2 : 3;
  }

  // weights
  const bool weights_required =
      cfg.command == Command::kAnalyze || cfg.command == Command::kTransform;
  if (root.contains("weights")) {
    if (auto w = v.grid(root["weights"], "weights")) {
      const int wn = w->size() == 4 ? 2 : 3;
      if (cfg.n != 0 && wn != cfg.n)
        v.error("weights", "dimension mismatch: weights are " +
                               std::to_string(wn) + "x" + std::to_string(wn) +
                               " but alpha is " + std::to_string(cfg.n) + "x" +
                               std::to_string(cfg.n));
      v.check_weight_values(*w, "weights");
      cfg.weights = std::move(*w);
    }
  } else if (weights_required) {
    v.error("weights", std::string("missing required field for ") +
                           command_name(cfg.command) +
                           " (the initial-state weights)");
  }

  // operator_set
  if (root.contains("operator_set")) {
    const ordered_json& ops = root["operator_set"];
    if (ops.is_string()) {
      const std::string name = ops.get<std::string>();
      if (name != "rsp3" && name != "id-swap2")
        v.error("operator_set", "unknown preset \"" + name +
                                    "\" (use \"rsp3\" or \"id-swap2\")");
      else
        cfg.operator_preset = name;
    } else if (ops.is_object() && ops.contains("perms") &&
               ops["perms"].is_array()) {
      std::vector<std::vector<int>> perms;
      bool bad = false;
      for (size_t r = 0; r < ops["perms"].size(); ++r) {
        const ordered_json& row = ops["perms"][r];
        const std::string row_field =
            "operator_set.perms[" + std::to_string(r) + "]";
        if (!row.is_array() ||
            (cfg.n != 0 && row.size() != static_cast<size_t>(cfg.n))) {
          v.error(row_field, "expected " + std::to_string(cfg.n) + " images");
          bad = true;
          continue;
        }
        std::vector<int> images;
        for (const auto& e : row) {
          if (!e.is_number_integer()) {
            v.error(row_field, "images must be integers");
            bad = true;
            break;
          }
          images.push_back(e.get<int>());
        }
        perms.push_back(std::move(images));
      }
      if (!bad) cfg.operator_perms = std::move(perms);
    } else {
      v.error("operator_set",
              "expected a preset name or an object with a \"perms\" array");
    }
  }

  // dynamics
  if (root.contains("dynamics")) {
    const ordered_json& d = root["dynamics"];
    if (!d.is_object()) {
      v.error("dynamics", "expected an object");
    } else {
      if (d.contains("dt")) {
        if (d["dt"].is_number() && d["dt"].get<double>() > 0.0)
          cfg.dynamics.dt = d["dt"].get<double>();
        else
          v.error("dynamics.dt", "expected a positive number");
      }
      if (d.contains("steps")) {
        if (d["steps"].is_number_integer() && d["steps"].get<long>() >= 1)
          cfg.dynamics.steps = d["steps"].get<long>();
        else
          v.error("dynamics.steps", "expected an integer >= 1");
      }
      if (d.contains("perturbation")) {
        if (d["perturbation"].is_number() &&
            d["perturbation"].get<double>() > 0.0)
          cfg.dynamics.perturbation = d["perturbation"].get<double>();
        else
          v.error("dynamics.perturbation", "expected a positive number");
      }
      if (d.contains("x0")) {
        if (!d["x0"].is_array()) {
          v.error("dynamics.x0", "expected an array of probabilities");
        } else {
          std::vector<double> x0;
          double sum = 0.0;
          bool bad = false;
          for (const auto& e : d["x0"]) {
            if (!e.is_number()) {
              v.error("dynamics.x0", "entries must be numbers");
              bad = true;
              break;
            }
            x0.push_back(e.get<double>());
            sum += x0.back();
          }
          if (!bad) {
            if (std::abs(sum - 1.0) > 1e-9)
              v.error("dynamics.x0",
                      "probabilities must sum to 1 (sum=" + num_str(sum) + ")");
            cfg.dynamics.x0 = std::move(x0);
          }
        }
      }
    }
  }
  if (cfg.command == Command::kSimulate && cfg.dynamics.x0.empty())
    v.error("dynamics.x0", "missing required field for simulate");

  // scan
  if (root.contains("scan")) {
    const ordered_json& s = root["scan"];
    if (!s.is_object()) {
      v.error("scan", "expected an object");
    } else {
      if (s.contains("resolution")) {
        if (s["resolution"].is_number_integer() &&
            s["resolution"].get<int>() >= 2)
          cfg.scan.resolution = s["resolution"].get<int>();
        else
          v.error("scan.resolution", "expected an integer >= 2");
      }
      if (s.contains("constraint")) {
        const std::string c = s["constraint"].is_string()
                                  ? s["constraint"].get<std::string>()
                                  : "";
        if (c == "symmetric-off-diagonal")
          cfg.scan.constraint = Constraint::kSymmetricOffDiagonal;
        else if (c == "full-simplex")
          cfg.scan.constraint = Constraint::kFullSimplex;
        else
          v.error("scan.constraint",
                  "expected \"symmetric-off-diagonal\" or \"full-simplex\"");
      }
    }
  }

  // output
  if (root.contains("output")) {
    const ordered_json& o = root["output"];
    if (!o.is_object()) {
      v.error("output", "expected an object");
    } else {
      if (o.contains("path")) {
        if (o["path"].is_string())
          cfg.output.path = o["path"].get<std::string>();
        else
          v.error("output.path", "expected a string");
      }
      if (o.contains("format")) {
        const std::string f =
            o["format"].is_string() ? o["format"].get<std::string>() : "";
        if (f == "json")
          cfg.output.format = OutputFormat::kJson;
        else if (f == "csv")
          cfg.output.format = OutputFormat::kCsv;
        else
          v.error("output.format", "expected \"json\" or \"csv\"");
      }
    }
  }

  // cross-field requirements
  if (!cfg.alpha.empty()) {
    if ((cfg.command == Command::kAnalyze || cfg.command == Command::kScan) &&
        cfg.n != 2)
      v.error("alpha", std::string(command_name(cfg.command)) +
                           " requires a 2x2 payoff matrix");
  }

  if (result.diagnostics.empty()) result.config = std::move(cfg);
  return result;
}

std::string serialize_config(const RunConfig& cfg) {
  ordered_json j;
  j["command"] = command_name(cfg.command);
  if (!cfg.description.empty()) j["description"] = cfg.description;

  const auto grid_json = [&](const std::vector<double>& flat) {
    const int n = flat.size() == 4 ? 2 : 3;
    ordered_json rows = ordered_json::array();
    for (int r = 0; r < n; ++r) {
      ordered_json row = ordered_json::array();
      for (int c = 0; c < n; ++c)
        row.push_back(flat[static_cast<size_t>(r) * n + c]);
      rows.push_back(std::move(row));
    }
    return rows;
  };

  j["alpha"] = grid_json(cfg.alpha);
  if (cfg.weights) j["weights"] = grid_json(*cfg.weights);
  if (!cfg.operator_preset.empty()) j["operator_set"] = cfg.operator_preset;
  if (cfg.operator_perms) j["operator_set"] = {{"perms", *cfg.operator_perms}};

  j["dynamics"] = {{"dt", cfg.dynamics.dt},
                   {"steps", cfg.dynamics.steps},
                   {"perturbation", cfg.dynamics.perturbation}};
  if (!cfg.dynamics.x0.empty()) j["dynamics"]["x0"] = cfg.dynamics.x0;

  j["scan"] = {{"resolution", cfg.scan.resolution},
               {"constraint", constraint_name(cfg.scan.constraint)}};

  j["output"] = ordered_json::object();
  if (!cfg.output.path.empty()) j["output"]["path"] = cfg.output.path;
  j["output"]["format"] = format_name(cfg.output.format);

  return j.dump(2) + "\n";
}

}  // namespace qevo_cli
