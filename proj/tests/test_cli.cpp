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

// End-to-end CLI checks: the binary is spawned the way a user would run it.
// Config parsing and serialization are additionally unit-tested in-process
// through the cli support library.

#include <doctest.h>
#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>

#include "config.hpp"
#include "serialize.hpp"

namespace {

using nlohmann::ordered_json;
using namespace qevo_cli;

struct RunResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spit(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
}

RunResult run_cli(const std::string& args) {
  const std::string out_file = "/tmp/qevo_cli_test_stdout.txt";
  const std::string err_file = "/tmp/qevo_cli_test_stderr.txt";
  const std::string cmd = std::string(QEVO_CLI_PATH) + " " + args + " > " +
                          out_file + " 2> " + err_file;
  const int status = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out_file);
  r.err = slurp(err_file);
  return r;
}

std::string write_config(const std::string& name, const std::string& body) {
  const std::string path = "/tmp/qevo_cli_test_" + name + ".json";
  spit(path, body);
  return path;
}

}  // namespace

TEST_CASE("analyze run produces the flip report") {
  const std::string cfg = write_config("flip", R"({
    "command": "analyze",
    "alpha": [[3, 4], [2, 5]],
    "weights": [[0, 0.5], [0.5, 0]]
  })");
  const RunResult r = run_cli("--config " + cfg);
  REQUIRE(r.exit_code == 0);
  const ordered_json j = ordered_json::parse(r.out);
  CHECK(j["report"]["flip"] == true);
  CHECK(j["report"]["quantum_mixed_is_ess"] == true);
  CHECK(j["report"]["classical_mixed_is_ess"] == false);
  CHECK(j["omega"] == ordered_json::parse("[[3.0,4.0],[4.0,3.0]]"));
}

TEST_CASE("transform with classical-limit weights echoes alpha") {
  const std::string cfg = write_config("climit", R"({
    "command": "transform",
    "alpha": [[3, 4], [2, 5]],
    "weights": [[1, 0], [0, 0]]
  })");
  const RunResult r = run_cli("--config " + cfg);
  REQUIRE(r.exit_code == 0);
  const ordered_json j = ordered_json::parse(r.out);
  CHECK(j["omega"] == j["alpha"]);
}

TEST_CASE("simulate writes a trajectory in both formats") {
  const std::string cfg = write_config("sim", R"({
    "command": "simulate",
    "alpha": [[3, 4], [4, 3]],
    "dynamics": {"dt": 0.01, "steps": 200, "x0": [0.6, 0.4]}
  })");
  const RunResult json_run = run_cli("--config " + cfg);
  REQUIRE(json_run.exit_code == 0);
  const ordered_json j = ordered_json::parse(json_run.out);
  CHECK(j["states"].size() == 201);
  const double final0 = j["final_state"][0].get<double>();
  CHECK(final0 < 0.6);

  const RunResult csv_run = run_cli("--config " + cfg + " --format csv");
  REQUIRE(csv_run.exit_code == 0);
  CHECK(csv_run.out.rfind("step,p0,p1\n", 0) == 0);
}

TEST_CASE("scan emits the documented CSV header") {
  const std::string cfg = write_config("scan", R"({
    "command": "scan",
    "alpha": [[3, 4], [2, 5]],
    "scan": {"resolution": 5},
    "output": {"format": "csv"}
  })");
  const RunResult r = run_cli("--config " + cfg);
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.rfind("w00,w01,w10,w11,classical_disc,quantum_disc,mixed_ne,"
                    "classical_ess,quantum_ess,flip\n",
                    0) == 0);
  // 15 grid points + header
  size_t lines = 0;
  for (char c : r.out)
    if (c == '\n') ++lines;
  CHECK(lines == 16);
}

TEST_CASE("missing weights for analyze names the field and exits 2") {
  const std::string cfg = write_config("noweights", R"({
    "command": "analyze",
    "alpha": [[3, 4], [2, 5]]
  })");
  const RunResult r = run_cli("--config " + cfg);
  CHECK(r.exit_code == 2);
  CHECK(r.err.find("weights") != std::string::npos);
}

TEST_CASE("all validation errors are reported together") {
  const std::string cfg = write_config("multi", R"({
    "command": "analyze",
    "alpha": [[3, 4, 0], [2, 5, 0], [0, 0, 0]],
    "weights": [[0.4, 0.5], [0, 0]],
    "typo_field": 1
  })");
  const RunResult r = run_cli("--config " + cfg);
  CHECK(r.exit_code == 2);
  CHECK(r.err.find("dimension mismatch") != std::string::npos);
  CHECK(r.err.find("normalization violated: sum=0.9") != std::string::npos);
  CHECK(r.err.find("typo_field") != std::string::npos);
  CHECK(r.err.find("2x2 payoff matrix") != std::string::npos);
}

TEST_CASE("malformed JSON yields one positioned syntax diagnostic") {
  const std::string cfg =
      write_config("broken", "{\n  \"command\": \"analyze\",\n");
  const RunResult r = run_cli("--config " + cfg);
  CHECK(r.exit_code == 2);
  CHECK(r.err.find("syntax error at line") != std::string::npos);
  // exactly one diagnostic
  CHECK(r.err.find("config error:") == r.err.rfind("config error:"));
}

TEST_CASE("strict-degenerate makes flat games fatal") {
  const std::string cfg = write_config("degen", R"({
    "command": "analyze",
    "alpha": [[1, 1], [1, 1]],
    "weights": [[0, 0.5], [0.5, 0]]
  })");
  CHECK(run_cli("--config " + cfg).exit_code == 0);
  CHECK(run_cli("--config " + cfg + " --strict-degenerate").exit_code == 1);
}

TEST_CASE("seed is recorded in output metadata") {
  const std::string cfg = write_config("seeded", R"({
    "command": "analyze",
    "alpha": [[3, 4], [2, 5]],
    "weights": [[1, 0], [0, 0]]
  })");
  const RunResult r = run_cli("--config " + cfg + " --seed 42");
  REQUIRE(r.exit_code == 0);
  const ordered_json j = ordered_json::parse(r.out);
  CHECK(j["seed"] == 42);
}

TEST_CASE("repeated runs are byte-identical") {
  for (const char* name :
       {"classical_limit.json", "flip_state.json", "diagonal_state.json"}) {
    const std::string cfg = std::string(QEVO_DOCS_DIR) + "/examples/" + name;
    const std::string out1 = "/tmp/qevo_cli_test_rep1.json";
    const std::string out2 = "/tmp/qevo_cli_test_rep2.json";
    REQUIRE(run_cli("--config " + cfg + " --out " + out1).exit_code == 0);
    REQUIRE(run_cli("--config " + cfg + " --out " + out2).exit_code == 0);
    CHECK(slurp(out1) == slurp(out2));
    CHECK(!slurp(out1).empty());
  }
}

TEST_CASE("config round-trips through serialize/parse") {
  const std::string text = R"({
    "command": "simulate",
    "description": "round trip",
    "alpha": [[3, 4], [2, 5]],
    "weights": [[0.25, 0.25], [0.25, 0.25]],
    "operator_set": "id-swap2",
    "dynamics": {"dt": 0.02, "steps": 100, "x0": [0.7, 0.3]},
    "output": {"path": "x.json", "format": "csv"}
  })";
  const ParseResult first = parse_config_text(text);
  REQUIRE(first.ok());
  const ParseResult second = parse_config_text(serialize_config(*first.config));
  REQUIRE(second.ok());

  const RunConfig& a = *first.config;
  const RunConfig& b = *second.config;
  CHECK(a.command == b.command);
  CHECK(a.description == b.description);
  CHECK(a.alpha == b.alpha);
  CHECK(a.weights == b.weights);
  CHECK(a.operator_preset == b.operator_preset);
  CHECK(a.dynamics.dt == b.dynamics.dt);
  CHECK(a.dynamics.steps == b.dynamics.steps);
  CHECK(a.dynamics.x0 == b.dynamics.x0);
  CHECK(a.dynamics.perturbation == b.dynamics.perturbation);
  CHECK(a.scan.resolution == b.scan.resolution);
  CHECK(a.scan.constraint == b.scan.constraint);
  CHECK(a.output.path == b.output.path);
  CHECK(a.output.format == b.output.format);
}

TEST_CASE("emitted JSON reports reparse to identical numbers") {
  const std::string cfg = write_config("reparse", R"({
    "command": "analyze",
    "alpha": [[0.3123456789012345, 4.25], [2.125, 5.0625]],
    "weights": [[0.1234567890123456, 0.2], [0.2, 0.4765432109876544]]
  })");
  const RunResult r = run_cli("--config " + cfg);
  REQUIRE(r.exit_code == 0);
  const ordered_json j = ordered_json::parse(r.out);
  // shortest round-trip serialization: dump/parse is the identity here
  const ordered_json again = ordered_json::parse(j.dump());
  CHECK(again == j);
  const double wc = j["weights"][0][0].get<double>();
  CHECK(wc == 0.1234567890123456);
}

TEST_CASE("explicit operator permutations drive the transform") {
  const std::string cfg = write_config("ops", R"({
    "command": "transform",
    "alpha": [[1, 2, 3], [4, 5, 6], [7, 8, 9]],
    "weights": [[1, 0, 0], [0, 0, 0], [0, 0, 0]],
    "operator_set": {"perms": [[0, 1, 2], [1, 2, 0]]}
  })");
  const RunResult r = run_cli("--config " + cfg);
  REQUIRE(r.exit_code == 0);
  const ordered_json j = ordered_json::parse(r.out);
  // with the unentangled state, entry (mu, nu) is alpha at the operators'
  // images of label 0
  CHECK(j["omega"][0][0] == 1.0);
  CHECK(j["omega"][0][1] == 2.0);
  CHECK(j["omega"][1][0] == 4.0);
  CHECK(j["omega"][1][1] == 5.0);
}
