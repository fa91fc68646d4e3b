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

#include "serialize.hpp"

#include <cmath>
#include <cstdio>
#include <json.hpp>

namespace qevo_cli {
namespace {

using nlohmann::ordered_json;

ordered_json grid_json(const std::vector<double>& flat, int n) {
  ordered_json rows = ordered_json::array();
  for (int r = 0; r < n; ++r) {
    ordered_json row = ordered_json::array();
    for (int c = 0; c < n; ++c)
      row.push_back(flat[static_cast<size_t>(r) * n + c]);
    rows.push_back(std::move(row));
  }
  return rows;
}

ordered_json meta_json(const RunMeta& meta) {
  ordered_json j;
  j["command"] = command_name(meta.config->command);
  if (!meta.config->description.empty())
    j["description"] = meta.config->description;
  if (meta.seed) j["seed"] = *meta.seed;
  j["alpha"] = grid_json(meta.config->alpha, meta.config->n);
  if (meta.config->weights)
    j["weights"] = grid_json(*meta.config->weights, meta.config->n);
  return j;
}

ordered_json report_json(const qevo_report& r) {
  ordered_json j;
  j["classical_discriminant"] = r.classical_discriminant;
  j["quantum_discriminant"] = r.quantum_discriminant;
  j["mixed_ne_classical"] = r.has_mixed_ne_classical
                                ? ordered_json(r.mixed_ne_classical)
                                : ordered_json(nullptr);
  j["mixed_ne_quantum"] = r.has_mixed_ne_quantum
                              ? ordered_json(r.mixed_ne_quantum)
                              : ordered_json(nullptr);
  j["classical_degenerate"] = static_cast<bool>(r.classical_degenerate);
  j["quantum_degenerate"] = static_cast<bool>(r.quantum_degenerate);
  j["ne_preserved"] = static_cast<bool>(r.ne_preserved);
  j["classical_mixed_is_ess"] = static_cast<bool>(r.classical_mixed_is_ess);
  j["quantum_mixed_is_ess"] = static_cast<bool>(r.quantum_mixed_is_ess);
  j["flip"] = static_cast<bool>(r.flip);
  j["pure_ess_classical"] = std::vector<int>(
      r.pure_ess_classical, r.pure_ess_classical + r.pure_ess_classical_count);
  j["pure_ess_quantum"] = std::vector<int>(
      r.pure_ess_quantum, r.pure_ess_quantum + r.pure_ess_quantum_count);
  j["state_symmetric"] = static_cast<bool>(r.state_symmetric);
  return j;
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

void append_report_csv(std::string& out, const qevo_report& r) {
  out += fmt17(r.classical_discriminant);
  out += ',';
  out += fmt17(r.quantum_discriminant);
  out += ',';
  out += r.has_mixed_ne_quantum ? fmt17(r.mixed_ne_quantum) : "nan";
  out += ',';
  out += r.classical_mixed_is_ess ? '1' : '0';
  out += ',';
  out += r.quantum_mixed_is_ess ? '1' : '0';
  out += ',';
  out += r.flip ? '1' : '0';
  out += '\n';
}

constexpr const char* kScanHeader =
    "w00,w01,w10,w11,classical_disc,quantum_disc,mixed_ne,classical_ess,"
    "quantum_ess,flip\n";

}  // namespace

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string transform_json(const RunMeta& meta, int k,
                           const std::vector<double>& omega) {
  ordered_json j = meta_json(meta);
  j["omega"] = grid_json(omega, k);
  return dump(j);
}

std::string transform_csv(int k, const std::vector<double>& omega) {
  std::string out;
  for (int r = 0; r < k; ++r) {
    for (int c = 0; c < k; ++c) {
      if (c) out += ',';
      out += fmt17(omega[static_cast<size_t>(r) * k + c]);
    }
    out += '\n';
  }
  return out;
}

std::string analyze_json(const RunMeta& meta, const qevo_report& report,
                         const std::vector<double>& omega) {
  ordered_json j = meta_json(meta);
  j["omega"] = grid_json(omega, 2);
  j["report"] = report_json(report);
  return dump(j);
}

std::string analyze_csv(const std::vector<double>& weights,
                        const qevo_report& report) {
  std::string out = kScanHeader;
  for (double w : weights) {
    out += fmt17(w);
    out += ',';
  }
  append_report_csv(out, report);
  return out;
}

std::string simulate_json(const RunMeta& meta, int n,
                          const std::vector<double>& matrix,
                          const std::vector<std::vector<double>>& states) {
  ordered_json j = meta_json(meta);
  j["matrix"] = grid_json(matrix, n);
  j["dynamics"] = {{"dt", meta.config->dynamics.dt},
                   {"steps", meta.config->dynamics.steps},
                   {"x0", meta.config->dynamics.x0}};
  j["final_state"] = states.back();
  j["states"] = states;
  return dump(j);
}

std::string simulate_csv(int n,
                         const std::vector<std::vector<double>>& states) {
  std::string out = "step";
  for (int i = 0; i < n; ++i) out += ",p" + std::to_string(i);
  out += '\n';
  for (size_t s = 0; s < states.size(); ++s) {
    out += std::to_string(s);
    for (double v : states[s]) {
      out += ',';
      out += fmt17(v);
    }
    out += '\n';
  }
  return out;
}

std::string scan_json(const RunMeta& meta, const std::vector<ScanRow>& rows,
                      double flip_fraction) {
  ordered_json j = meta_json(meta);
  j["resolution"] = meta.config->scan.resolution;
  j["constraint"] = constraint_name(meta.config->scan.constraint);
  j["flip_fraction"] = flip_fraction;
  ordered_json points = ordered_json::array();
  for (const ScanRow& row : rows) {
    ordered_json p;
    p["weights"] = grid_json(
        std::vector<double>(row.weights, row.weights + 4), 2);
    p["report"] = report_json(row.report);
    points.push_back(std::move(p));
  }
  j["points"] = std::move(points);
  return dump(j);
}

std::string scan_csv(const std::vector<ScanRow>& rows) {
  std::string out = kScanHeader;
  for (const ScanRow& row : rows) {
    for (double w : row.weights) {
      out += fmt17(w);
      out += ',';
    }
    append_report_csv(out, row.report);
  }
  return out;
}

}  // namespace qevo_cli
