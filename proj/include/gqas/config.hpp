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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "gqas/ansatz.hpp"
#include "gqas/dynamics.hpp"
#include "gqas/overlap.hpp"

namespace gqas {

/// Invalid or unknown configuration entry. The CLI maps it to exit code 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Experiment { open_ising, gibbs, dnls, matrix_inverse, overlaps_only };
enum class Model { ising_ladder, tfim, dnls };

struct OperatorTerm {
  cplx coeff;
  std::string letters;
};

/**
 * Everything one run needs. Read from a flat JSON object; every key is
 * optional except "experiment", and unknown keys are rejected.
 */
struct ExperimentConfig {
  Experiment experiment = Experiment::open_ising;
  Model model = Model::ising_ladder;

  std::size_t n_qubits = 6;
  std::size_t layers = 6;
  std::uint64_t circuit_seed = 1;
  std::vector<double> angles;  // explicit angles override circuit_seed

  double J = 1.0;
  double h = 1.0;
  double gamma = 0.0;
  double g = 0.0;
  std::vector<double> V;  // empty means zero potential
  bool periodic = true;

  std::size_t K = 2;
  std::size_t M = 64;
  Selection selection = Selection::ordered;
  std::uint64_t selection_seed = 0;

  MeasurementMode backend = MeasurementMode::exact;
  std::size_t shots = 1000;
  std::uint64_t shot_seed = 0;

  double dt = 1e-3;
  double t_final = 6.0;
  double pinv_cutoff = 1e-8;
  std::size_t output_stride = 100;

  std::vector<OperatorTerm> operator_terms;  // matrix_inverse; empty -> random
  std::uint64_t operator_seed = 0;

  bool with_oracle = false;
  std::string output_dir = "gqas_out";

  static ExperimentConfig from_json(const nlohmann::json& j);
  static ExperimentConfig load(const std::string& path);
  nlohmann::json to_json() const;

  void validate() const;
  /// Overwrites one numeric key (used by sweeps); ConfigError when the key
  /// is unknown or not numeric.
  void set_numeric(const std::string& key, double value);

  CircuitSpec circuit() const;
  IntegratorConfig integrator() const;
  MeasurementBackend measurement() const;
};

std::string to_string(Experiment e);
std::string to_string(Model m);

}  // namespace gqas
