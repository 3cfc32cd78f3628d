// Copyright 2026 The GQAS Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gqas/config.hpp"
#include "gqas/overlap.hpp"

namespace gqas {

struct RunOptions {
  /// Reuse overlap matrices from a previous run instead of measuring.
  std::optional<std::filesystem::path> overlaps_dir;
  /// Dense cross-checks; ORed with the config flag.
  bool with_oracle = false;
};

struct RunResult {
  std::filesystem::path output_dir;
  std::string observable_name;
  std::vector<double> times;
  std::vector<double> observable;
  /// Empty unless the oracle ran and the experiment has a fidelity.
  std::vector<double> fidelity;
  /// Scalar figures of merit, in a fixed order per experiment.
  std::vector<std::pair<std::string, double>> summary;
  std::vector<std::string> warnings;
};

/// Executes one config and writes basis.tsv, overlaps/, trajectory.csv and
/// manifest.json below config.output_dir.
RunResult run_experiment(const ExperimentConfig& config, const RunOptions& options = {});

struct SweepRow {
  double value = 0.0;
  RunResult result;
};

/// One run per value of `key` (in parallel), each in <output_dir>/<key>_<value>,
/// plus <output_dir>/summary.csv.
std::vector<SweepRow> run_sweep(const ExperimentConfig& config, const std::string& key,
                                const std::vector<double>& values, const RunOptions& options = {});

/// Measures and stores the overlap matrices only.
RunResult compute_overlaps(const ExperimentConfig& config);

}  // namespace gqas
