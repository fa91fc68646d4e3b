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

// Command-line front door. Parses a JSON run config, drives the library
// through its C API, and writes JSON/CSV artifacts for plotting and
// regression tests.
//
// Exit codes: 0 success; 2 config validation failure (with one diagnostic
// per problem); 1 runtime failure, including degeneracy made fatal by
// --strict-degenerate.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "config.hpp"
#include "qevo/qevo.h"
#include "serialize.hpp"

namespace {

using namespace qevo_cli;

constexpr int kExitRuntime = 1;
constexpr int kExitConfig = 2;

struct GameDeleter {
  void operator()(qevo_game* g) const { qevo_game_free(g); }
};
struct WeightsDeleter {
  void operator()(qevo_weights* w) const { qevo_weights_free(w); }
};
struct OperatorsDeleter {
  void operator()(qevo_operators* o) const { qevo_operators_free(o); }
};
struct MatrixDeleter {
  void operator()(qevo_matrix* m) const { qevo_matrix_free(m); }
};
struct TrajectoryDeleter {
  void operator()(qevo_trajectory* t) const { qevo_trajectory_free(t); }
};
struct ScanDeleter {
  void operator()(qevo_scan* s) const { qevo_scan_free(s); }
};

using GamePtr = std::unique_ptr<qevo_game, GameDeleter>;
using WeightsPtr = std::unique_ptr<qevo_weights, WeightsDeleter>;
using OperatorsPtr = std::unique_ptr<qevo_operators, OperatorsDeleter>;
using MatrixPtr = std::unique_ptr<qevo_matrix, MatrixDeleter>;
using TrajectoryPtr = std::unique_ptr<qevo_trajectory, TrajectoryDeleter>;
using ScanPtr = std::unique_ptr<qevo_scan, ScanDeleter>;

// Library-level rejections are still config problems from the user's side.
int fail(qevo_status status, const char* where) {
  std::cerr << "error: " << where << ": " << qevo_last_error() << "\n";
  return status == QEVO_ERROR_INTERNAL || status == QEVO_ERROR_NO_MEMORY
             ? kExitRuntime
             : kExitConfig;
}

int write_artifact(const std::string& path, const std::string& payload) {
  if (path.empty()) {
    std::cout << payload;
    return 0;
  }
  std::ofstream out(path, std::ios::binary);
  out << payload;
  if (!out) {
    std::cerr << "error: cannot write " << path << "\n";
    return kExitRuntime;
  }
  return 0;
}

std::vector<double> matrix_entries(const qevo_matrix* m) {
  const size_t k = static_cast<size_t>(qevo_matrix_size(m));
  std::vector<double> e(k * k);
  qevo_matrix_entries(m, e.data());
  return e;
}

OperatorsPtr make_operators(const RunConfig& cfg, qevo_status* status) {
  qevo_operators* ops = nullptr;
  if (cfg.operator_perms) {
    std::vector<int> flat;
    for (const auto& row : *cfg.operator_perms)
      flat.insert(flat.end(), row.begin(), row.end());
    *status = qevo_operators_create(
        cfg.n, static_cast<int>(cfg.operator_perms->size()), flat.data(),
        &ops);
  } else {
    const std::string name = !cfg.operator_preset.empty()
                                 ? cfg.operator_preset
                                 : (cfg.n == 2 ? "id-swap2" : "rsp3");
    *status = qevo_operators_preset(name.c_str(), &ops);
  }
  return OperatorsPtr(ops);
}

int run_transform(const RunConfig& cfg, const RunMeta& meta,
                  const GamePtr& game, const WeightsPtr& weights) {
  qevo_status st = QEVO_OK;
  const OperatorsPtr ops = make_operators(cfg, &st);
  if (st != QEVO_OK) return fail(st, "operator_set");

  qevo_matrix* omega = nullptr;
  st = qevo_transform(game.get(), weights.get(), ops.get(), &omega);
  if (st != QEVO_OK) return fail(st, "transform");
  const MatrixPtr holder(omega);

  const int k = qevo_matrix_size(omega);
  const std::vector<double> entries = matrix_entries(omega);
  return write_artifact(cfg.output.path,
                        cfg.output.format == OutputFormat::kJson
                            ? transform_json(meta, k, entries)
                            : transform_csv(k, entries));
}

int run_analyze(const RunConfig& cfg, const RunMeta& meta, bool strict,
                const GamePtr& game, const WeightsPtr& weights) {
  qevo_report report;
  qevo_status st = qevo_analyze(game.get(), weights.get(), &report);
  if (st != QEVO_OK) return fail(st, "analyze");
  if (strict && (report.classical_degenerate || report.quantum_degenerate)) {
    std::cerr << "error: degenerate game (no isolated mixed equilibrium)\n";
    return kExitRuntime;
  }

  qevo_matrix* omega = nullptr;
  st = qevo_transform_2x2(game.get(), weights.get(), &omega);
  if (st != QEVO_OK) return fail(st, "transform");
  const MatrixPtr holder(omega);

  return write_artifact(cfg.output.path,
                        cfg.output.format == OutputFormat::kJson
                            ? analyze_json(meta, report, matrix_entries(omega))
                            : analyze_csv(*cfg.weights, report));
}

int run_simulate(const RunConfig& cfg, const RunMeta& meta,
                 const GamePtr& game, const WeightsPtr& weights) {
  // With weights present the dynamics run on the quantized game.
  GamePtr effective;
  qevo_status st = QEVO_OK;
  if (weights) {
    const OperatorsPtr ops = make_operators(cfg, &st);
    if (st != QEVO_OK) return fail(st, "operator_set");
    qevo_matrix* omega = nullptr;
    st = qevo_transform(game.get(), weights.get(), ops.get(), &omega);
    if (st != QEVO_OK) return fail(st, "transform");
    const MatrixPtr holder(omega);
    qevo_game* as_game = nullptr;
    st = qevo_matrix_as_game(omega, &as_game);
    if (st != QEVO_OK) return fail(st, "transform");
    effective.reset(as_game);
  }
  const qevo_game* m = weights ? effective.get() : game.get();

  qevo_trajectory* traj = nullptr;
  st = qevo_simulate(m, cfg.dynamics.x0.data(), cfg.dynamics.dt,
                     cfg.dynamics.steps, &traj);
  if (st != QEVO_OK) return fail(st, "simulate");
  const TrajectoryPtr holder(traj);

  const int n = qevo_trajectory_dim(traj);
  const long len = qevo_trajectory_length(traj);
  std::vector<std::vector<double>> states(
      static_cast<size_t>(len), std::vector<double>(static_cast<size_t>(n)));
  for (long i = 0; i < len; ++i)
    qevo_trajectory_state(traj, i, states[static_cast<size_t>(i)].data());

  std::vector<double> entries(static_cast<size_t>(n) * n);
  qevo_game_entries(m, entries.data());
  return write_artifact(cfg.output.path,
                        cfg.output.format == OutputFormat::kJson
                            ? simulate_json(meta, n, entries, states)
                            : simulate_csv(n, states));
}

int run_scan(const RunConfig& cfg, const RunMeta& meta, bool strict,
             const GamePtr& game) {
  const qevo_scan_constraint constraint =
      cfg.scan.constraint == Constraint::kSymmetricOffDiagonal
          ? QEVO_SCAN_SYMMETRIC_OFF_DIAGONAL
          : QEVO_SCAN_FULL_SIMPLEX;
  qevo_scan* scan = nullptr;
  qevo_status st =
      qevo_scan_run(game.get(), cfg.scan.resolution, constraint, 0, &scan);
  if (st != QEVO_OK) return fail(st, "scan");
  const ScanPtr holder(scan);

  const long size = qevo_scan_size(scan);
  std::vector<ScanRow> rows(static_cast<size_t>(size));
  for (long i = 0; i < size; ++i) {
    ScanRow& row = rows[static_cast<size_t>(i)];
    qevo_scan_point(scan, i, row.weights, &row.report);
    if (strict &&
        (row.report.classical_degenerate || row.report.quantum_degenerate)) {
      std::cerr << "error: degenerate point in scan (grid index " << i
                << ")\n";
      return kExitRuntime;
    }
  }
  double fraction = 0.0;
  qevo_scan_flip_fraction(scan, &fraction);

  return write_artifact(cfg.output.path,
                        cfg.output.format == OutputFormat::kJson
                            ? scan_json(meta, rows, fraction)
                            : scan_csv(rows));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "qevo: evolutionary stability of mixed equilibria in quantized "
      "symmetric games"};
  std::string config_path;
  std::string out_override;
  std::string format_override;
  bool strict_degenerate = false;
  uint64_t seed_value = 0;
  app.add_option("--config", config_path, "run configuration (JSON)")
      ->required();
  app.add_option("--out", out_override, "output path (overrides the config)");
  app.add_option("--format", format_override,
                 "output format (overrides the config)")
      ->check(CLI::IsMember({"json", "csv"}));
  app.add_flag("--strict-degenerate", strict_degenerate,
               "treat degenerate games as fatal (exit 1)");
  auto* seed_opt = app.add_option(
      "--seed", seed_value,
      "recorded in output metadata; the pipeline itself is deterministic");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  std::ifstream in(config_path, std::ios::binary);
  if (!in) {
    std::cerr << "config error: cannot read " << config_path << "\n";
    return kExitConfig;
  }
  std::stringstream buffer;
  buffer << in.rdbuf();

  ParseResult parsed = parse_config_text(buffer.str());
  if (!parsed.ok()) {
    for (const Diagnostic& d : parsed.diagnostics)
      std::cerr << "config error: " << d.to_string() << "\n";
    return kExitConfig;
  }
  RunConfig cfg = std::move(*parsed.config);
  if (!out_override.empty()) cfg.output.path = out_override;
  if (!format_override.empty())
    cfg.output.format = format_override == "json" ? OutputFormat::kJson
                                                  : OutputFormat::kCsv;

  RunMeta meta;
  meta.config = &cfg;
  if (seed_opt->count() > 0) meta.seed = seed_value;

  qevo_game* game_raw = nullptr;
  qevo_status st = qevo_game_create(cfg.n, cfg.alpha.data(), &game_raw);
  if (st != QEVO_OK) return fail(st, "alpha");
  const GamePtr game(game_raw);

  WeightsPtr weights;
  if (cfg.weights) {
    qevo_weights* w = nullptr;
    st = qevo_weights_create(cfg.n, cfg.weights->data(), &w);
    if (st != QEVO_OK) return fail(st, "weights");
    weights.reset(w);
  }

  switch (cfg.command) {
    case Command::kTransform:
      return run_transform(cfg, meta, game, weights);
    case Command::kAnalyze:
      return run_analyze(cfg, meta, strict_degenerate, game, weights);
    case Command::kSimulate:
      return run_simulate(cfg, meta, game, weights);
    case Command::kScan:
      return run_scan(cfg, meta, strict_degenerate, game);
  }
  return kExitRuntime;
}
