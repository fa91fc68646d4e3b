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

#ifndef QEVO_TOOLS_SERIALIZE_HPP
#define QEVO_TOOLS_SERIALIZE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "config.hpp"
#include "qevo/qevo.h"

namespace qevo_cli {

// Metadata common to all artifacts; the seed is recorded verbatim when given
// (the pipeline itself is deterministic). Nothing time- or host-dependent is
// ever written, so identical runs produce identical bytes.
struct RunMeta {
  const RunConfig* config = nullptr;
  std::optional<uint64_t> seed;
};

// value -> decimal with 17 significant digits (CSV contract).
std::string fmt17(double v);

std::string transform_json(const RunMeta& meta, int k,
                           const std::vector<double>& omega);
std::string transform_csv(int k, const std::vector<double>& omega);

std::string analyze_json(const RunMeta& meta, const qevo_report& report,
                         const std::vector<double>& omega);
std::string analyze_csv(const std::vector<double>& weights,
                        const qevo_report& report);

std::string simulate_json(const RunMeta& meta, int n,
                          const std::vector<double>& matrix,
                          const std::vector<std::vector<double>>& states);
std::string simulate_csv(int n, const std::vector<std::vector<double>>& states);

struct ScanRow {
  double weights[4];
  qevo_report report;
};

std::string scan_json(const RunMeta& meta, const std::vector<ScanRow>& rows,
                      double flip_fraction);
// Header: w00,w01,w10,w11,classical_disc,quantum_disc,mixed_ne,
// classical_ess,quantum_ess,flip. One row per grid point, floats with 17
// significant digits, booleans as 0/1, absent equilibria as nan.
std::string scan_csv(const std::vector<ScanRow>& rows);

}  // namespace qevo_cli

#endif  // QEVO_TOOLS_SERIALIZE_HPP
