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

#ifndef QEVO_SCANNER_HPP
#define QEVO_SCANNER_HPP

#include <vector>

#include "qevo/analyzer.hpp"
#include "qevo/game.hpp"
#include "qevo/state_weights.hpp"

namespace qevo {

inline constexpr int kDefaultScanResolution = 51;

enum class ScanConstraint {
  // w01 = w10 = c/2 with w00 + w11 + c = 1: every grid point satisfies the
  // symmetry condition, so ESS verdicts apply everywhere. The default.
  kSymmetricOffDiagonal,
  // All four weights vary freely; asymmetric points carry reports with
  // state_symmetric = false and inapplicable ESS fields.
  kFullSimplex,
};

struct ScanPoint {
  StateWeights weights;
  StabilityReport report;
};

struct ScanGrid {
  int resolution = kDefaultScanResolution;
  ScanConstraint constraint = ScanConstraint::kSymmetricOffDiagonal;
  std::vector<ScanPoint> points;
};

// Sweeps the weight simplex at `resolution` samples per axis and analyzes the
// 2x2 game alpha at every point. Point order is lexicographic in the grid
// indices regardless of thread count; threads = 1 forces a serial run,
// threads <= 0 uses the hardware concurrency. Parallel and serial runs
// produce identical grids.
ScanGrid scan(const PayoffMatrix& alpha, int resolution,
              ScanConstraint constraint = ScanConstraint::kSymmetricOffDiagonal,
              int threads = 0);

// Fraction of grid points whose report flags a stability flip.
double flip_fraction(const ScanGrid& grid);

}  // namespace qevo

#endif  // QEVO_SCANNER_HPP
