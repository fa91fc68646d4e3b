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

#include "qevo/scanner.hpp"

#include <thread>
#include <utility>

namespace qevo {
namespace {

// Weight grids in lexicographic grid-index order. Values are derived from
// integer indices only, so the enumeration is identical however the reports
// are later computed.
std::vector<StateWeights> enumerate_weights(int resolution,
                                            ScanConstraint constraint) {
  const int divisions = resolution - 1;
  std::vector<StateWeights> out;
  if (constraint == ScanConstraint::kSymmetricOffDiagonal) {
    // (w00, w11, c) on the 2-simplex, off-diagonal mass split evenly.
    for (int i = 0; i <= divisions; ++i) {
      for (int j = 0; j <= divisions - i; ++j) {
        const double w00 = static_cast<double>(i) / divisions;
        const double w11 = static_cast<double>(j) / divisions;
        const double half = (1.0 - w00 - w11) / 2.0;
        out.emplace_back(2, std::vector<double>{w00, half, half, w11});
      }
    }
  } else {
    // (w00, w01, w10) free, w11 the remainder.
    for (int i = 0; i <= divisions; ++i) {
      for (int j = 0; j <= divisions - i; ++j) {
        for (int k = 0; k <= divisions - i - j; ++k) {
          const double w00 = static_cast<double>(i) / divisions;
          const double w01 = static_cast<double>(j) / divisions;
          const double w10 = static_cast<double>(k) / divisions;
          const double w11 = 1.0 - w00 - w01 - w10;
          out.emplace_back(2, std::vector<double>{w00, w01, w10, w11});
        }
      }
    }
  }
  return out;
}

}  // namespace

ScanGrid scan(const PayoffMatrix& alpha, int resolution,
              ScanConstraint constraint, int threads) {
  if (alpha.size() != 2)
    throw DimensionError("scan: defined for 2x2 games only");
  if (resolution < 2) throw DomainError("scan: resolution must be >= 2");

  ScanGrid grid;
  grid.resolution = resolution;
  grid.constraint = constraint;

  std::vector<StateWeights> weights = enumerate_weights(resolution, constraint);
  const size_t count = weights.size();
  std::vector<StabilityReport> reports(count);

  unsigned workers = threads > 0 ? static_cast<unsigned>(threads)
                                 : std::thread::hardware_concurrency();
  if (workers == 0) workers = 1;
  if (workers == 1 || count < 2 * workers) {
    for (size_t i = 0; i < count; ++i) reports[i] = analyze(alpha, weights[i]);
  } else {
    // Each worker fills its own contiguous slice; ordering never depends on
    // scheduling.
    std::vector<std::thread> pool;
    pool.reserve(workers);
    const size_t chunk = (count + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
      const size_t begin = w * chunk;
      const size_t end = std::min(count, begin + chunk);
      if (begin >= end) break;
      pool.emplace_back([&, begin, end] {
        for (size_t i = begin; i < end; ++i)
          reports[i] = analyze(alpha, weights[i]);
      });
    }
    for (std::thread& t : pool) t.join();
  }

  grid.points.reserve(count);
  for (size_t i = 0; i < count; ++i)
    grid.points.push_back({std::move(weights[i]), std::move(reports[i])});
  return grid;
}

double flip_fraction(const ScanGrid& grid) {
  if (grid.points.empty()) throw DomainError("flip_fraction: empty grid");
  size_t flips = 0;
  for (const ScanPoint& p : grid.points)
    if (p.report.flip) ++flips;
  return static_cast<double>(flips) / static_cast<double>(grid.points.size());
}

}  // namespace qevo
