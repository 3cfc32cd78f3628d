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

#include "gqas/config.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <map>

namespace gqas {

namespace {

using nlohmann::json;

template <class Enum>
Enum parse_enum(const json& v, const std::string& key,
                const std::vector<std::pair<std::string, Enum>>& choices) {
  if (!v.is_string()) throw ConfigError("config key '" + key + "' must be a string");
  const auto s = v.get<std::string>();
  for (const auto& [name, value] : choices) {
    if (name == s) return value;
  }
  std::string allowed;
  for (const auto& c : choices) allowed += (allowed.empty() ? "" : ", ") + c.first;
  throw ConfigError("config key '" + key + "' has value '" + s + "'; expected one of " + allowed);
}

const std::vector<std::pair<std::string, Experiment>> kExperiments = {
    {"open_ising", Experiment::open_ising},
    {"gibbs", Experiment::gibbs},
    {"dnls", Experiment::dnls},
    {"matrix_inverse", Experiment::matrix_inverse},
    {"overlaps_only", Experiment::overlaps_only}};
const std::vector<std::pair<std::string, Model>> kModels = {
    {"ising_ladder", Model::ising_ladder}, {"tfim", Model::tfim}, {"dnls", Model::dnls}};
const std::vector<std::pair<std::string, Selection>> kSelections = {
    {"ordered", Selection::ordered}, {"random", Selection::random}};
const std::vector<std::pair<std::string, MeasurementMode>> kBackends = {
    {"exact", MeasurementMode::exact}, {"sampled", MeasurementMode::sampled}};

double number(const json& v, const std::string& key) {
  if (!v.is_number()) throw ConfigError("config key '" + key + "' must be a number");
  return v.get<double>();
}

std::size_t count(const json& v, const std::string& key) {
  if (!v.is_number_integer() || v.get<long long>() < 0) {
    throw ConfigError("config key '" + key + "' must be a non-negative integer");
  }
  return v.get<std::size_t>();
}

std::uint64_t seed(const json& v, const std::string& key) {
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0)) {
    throw ConfigError("config key '" + key + "' must be an unsigned integer");
  }
  return v.get<std::uint64_t>();
}

std::vector<double> numbers(const json& v, const std::string& key) {
  if (!v.is_array()) throw ConfigError("config key '" + key + "' must be an array of numbers");
  std::vector<double> out;
  for (const auto& x : v) out.push_back(number(x, key));
  return out;
}

Model default_model(Experiment e) {
  switch (e) {
    case Experiment::gibbs: return Model::tfim;
    case Experiment::dnls: return Model::dnls;
    default: return Model::ising_ladder;
  }
}

template <class Enum>
std::string name_of(Enum value, const std::vector<std::pair<std::string, Enum>>& choices) {
  for (const auto& [name, v] : choices) {
    if (v == value) return name;
  }
  return "?";
}

}  // namespace

std::string to_string(Experiment e) { return name_of(e, kExperiments); }
std::string to_string(Model m) { return name_of(m, kModels); }

ExperimentConfig ExperimentConfig::from_json(const json& j) {
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  if (!j.contains("experiment")) throw ConfigError("config key 'experiment' is required");

  ExperimentConfig c;
  c.experiment = parse_enum(j.at("experiment"), "experiment", kExperiments);
  c.model = default_model(c.experiment);

  using Setter = std::function<void(const json&, const std::string&)>;
  const std::map<std::string, Setter> setters = {
      {"experiment", [](const json&, const std::string&) {}},
      {"model", [&](const json& v, const std::string& k) { c.model = parse_enum(v, k, kModels); }},
      {"n_qubits", [&](const json& v, const std::string& k) { c.n_qubits = count(v, k); }},
      {"layers", [&](const json& v, const std::string& k) { c.layers = count(v, k); }},
      {"circuit_seed", [&](const json& v, const std::string& k) { c.circuit_seed = seed(v, k); }},
      {"angles", [&](const json& v, const std::string& k) { c.angles = numbers(v, k); }},
      {"J", [&](const json& v, const std::string& k) { c.J = number(v, k); }},
      {"h", [&](const json& v, const std::string& k) { c.h = number(v, k); }},
      {"gamma", [&](const json& v, const std::string& k) { c.gamma = number(v, k); }},
      {"g", [&](const json& v, const std::string& k) { c.g = number(v, k); }},
      {"V", [&](const json& v, const std::string& k) { c.V = numbers(v, k); }},
      {"periodic",
       [&](const json& v, const std::string& k) {
         if (!v.is_boolean()) throw ConfigError("config key '" + k + "' must be a boolean");
         c.periodic = v.get<bool>();
       }},
      {"K", [&](const json& v, const std::string& k) { c.K = count(v, k); }},
      {"M", [&](const json& v, const std::string& k) { c.M = count(v, k); }},
      {"selection",
       [&](const json& v, const std::string& k) { c.selection = parse_enum(v, k, kSelections); }},
      {"selection_seed",
       [&](const json& v, const std::string& k) { c.selection_seed = seed(v, k); }},
      {"backend",
       [&](const json& v, const std::string& k) { c.backend = parse_enum(v, k, kBackends); }},
      {"shots", [&](const json& v, const std::string& k) { c.shots = count(v, k); }},
      {"shot_seed", [&](const json& v, const std::string& k) { c.shot_seed = seed(v, k); }},
      {"dt", [&](const json& v, const std::string& k) { c.dt = number(v, k); }},
      {"t_final", [&](const json& v, const std::string& k) { c.t_final = number(v, k); }},
      {"pinv_cutoff", [&](const json& v, const std::string& k) { c.pinv_cutoff = number(v, k); }},
      {"output_stride",
       [&](const json& v, const std::string& k) { c.output_stride = count(v, k); }},
      {"operator_terms",
       [&](const json& v, const std::string& k) {
         if (!v.is_array()) throw ConfigError("config key '" + k + "' must be an array");
         c.operator_terms.clear();
         for (const auto& t : v) {
           if (!t.is_array() || t.size() != 3 || !t[2].is_string()) {
             throw ConfigError("config key '" + k + "' entries must be [re, im, \"letters\"]");
           }
           c.operator_terms.push_back(
               {cplx(number(t[0], k), number(t[1], k)), t[2].get<std::string>()});
         }
       }},
      {"operator_seed", [&](const json& v, const std::string& k) { c.operator_seed = seed(v, k); }},
      {"with_oracle",
       [&](const json& v, const std::string& k) {
         if (!v.is_boolean()) throw ConfigError("config key '" + k + "' must be a boolean");
         c.with_oracle = v.get<bool>();
       }},
      {"output_dir",
       [&](const json& v, const std::string& k) {
         if (!v.is_string()) throw ConfigError("config key '" + k + "' must be a string");
         c.output_dir = v.get<std::string>();
       }},
  };
  for (const auto& [key, value] : j.items()) {
    const auto it = setters.find(key);
    if (it == setters.end()) throw ConfigError("unknown config key '" + key + "'");
    it->second(value, key);
  }
  c.validate();
  return c;
}

ExperimentConfig ExperimentConfig::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw ConfigError("config file '" + path + "' is not valid JSON: " + e.what());
  }
  return from_json(j);
}

json ExperimentConfig::to_json() const {
  json j;
  j["experiment"] = to_string(experiment);
  j["model"] = to_string(model);
  j["n_qubits"] = n_qubits;
  j["layers"] = layers;
  j["circuit_seed"] = circuit_seed;
  j["angles"] = angles;
  j["J"] = J;
  j["h"] = h;
  j["gamma"] = gamma;
  j["g"] = g;
  j["V"] = V;
  j["periodic"] = periodic;
  j["K"] = K;
  j["M"] = M;
  j["selection"] = name_of(selection, kSelections);
  j["selection_seed"] = selection_seed;
  j["backend"] = name_of(backend, kBackends);
  j["shots"] = shots;
  j["shot_seed"] = shot_seed;
  j["dt"] = dt;
  j["t_final"] = t_final;
  j["pinv_cutoff"] = pinv_cutoff;
  j["output_stride"] = output_stride;
  j["operator_terms"] = json::array();
  for (const auto& t : operator_terms) {
    j["operator_terms"].push_back({t.coeff.real(), t.coeff.imag(), t.letters});
  }
  j["operator_seed"] = operator_seed;
  j["with_oracle"] = with_oracle;
  j["output_dir"] = output_dir;
  return j;
}

void ExperimentConfig::validate() const {
  auto fail = [](const std::string& key, const std::string& why) {
    throw ConfigError("config key '" + key + "': " + why);
  };
  if (n_qubits == 0 || n_qubits > kMaxStateQubits) {
    fail("n_qubits", "must lie in 1.." + std::to_string(kMaxStateQubits));
  }
  if (layers == 0) fail("layers", "must be >= 1");
  if (!angles.empty() && angles.size() != layers * n_qubits) {
    fail("angles", "needs layers * n_qubits = " + std::to_string(layers * n_qubits) + " entries");
  }
  if (M == 0) fail("M", "must be >= 1");
  if (gamma < 0.0) fail("gamma", "must be >= 0");
  if (!V.empty() && V.size() != n_qubits) fail("V", "needs one entry per site");
  if (backend == MeasurementMode::sampled && shots == 0) fail("shots", "must be >= 1");
  if (!(dt > 0.0)) fail("dt", "must be positive");
  if (!(t_final > 0.0)) fail("t_final", "must be positive");
  if (dt > t_final) fail("dt", "must not exceed t_final");
  if (!(pinv_cutoff > 0.0 && pinv_cutoff < 1.0)) fail("pinv_cutoff", "must lie in (0, 1)");
  if (output_stride == 0) fail("output_stride", "must be >= 1");
  if (output_dir.empty()) fail("output_dir", "must not be empty");
  const bool uses_model = experiment != Experiment::matrix_inverse;
  if (uses_model && model == Model::ising_ladder && (n_qubits < 4 || n_qubits % 2 != 0)) {
    fail("n_qubits", "the ladder model needs an even count >= 4");
  }
  if (uses_model && (model == Model::tfim || model == Model::dnls) && n_qubits < 2) {
    fail("n_qubits", "must be >= 2 for this model");
  }
  for (const auto& t : operator_terms) {
    if (t.letters.size() != n_qubits) {
      fail("operator_terms", "term '" + t.letters + "' does not act on n_qubits qubits");
    }
    if (t.letters.find_first_not_of("IXYZ") != std::string::npos) {
      fail("operator_terms", "term '" + t.letters + "' has letters outside IXYZ");
    }
  }
  const bool model_fits = [&] {
    switch (experiment) {
      case Experiment::open_ising: return model == Model::ising_ladder;
      case Experiment::gibbs: return model != Model::dnls;
      case Experiment::dnls: return model == Model::dnls;
      default: return true;
    }
  }();
  if (!model_fits) fail("model", "'" + to_string(model) + "' is not valid for " + to_string(experiment));
}

void ExperimentConfig::set_numeric(const std::string& key, double value) {
  auto as_count = [&](std::size_t& field) {
    if (value < 0.0 || std::floor(value) != value) {
      throw ConfigError("sweep value for '" + key + "' must be a non-negative integer");
    }
    field = static_cast<std::size_t>(value);
  };
  auto as_seed = [&](std::uint64_t& field) {
    if (value < 0.0 || std::floor(value) != value) {
      throw ConfigError("sweep value for '" + key + "' must be a non-negative integer");
    }
    field = static_cast<std::uint64_t>(value);
  };
  if (key == "n_qubits") as_count(n_qubits);
  else if (key == "layers") as_count(layers);
  else if (key == "circuit_seed") as_seed(circuit_seed);
  else if (key == "J") J = value;
  else if (key == "h") h = value;
  else if (key == "gamma") gamma = value;
  else if (key == "g") g = value;
  else if (key == "K") as_count(K);
  else if (key == "M") as_count(M);
  else if (key == "selection_seed") as_seed(selection_seed);
  else if (key == "shots") as_count(shots);
  else if (key == "shot_seed") as_seed(shot_seed);
  else if (key == "dt") dt = value;
  else if (key == "t_final") t_final = value;
  else if (key == "pinv_cutoff") pinv_cutoff = value;
  else if (key == "operator_seed") as_seed(operator_seed);
  else throw ConfigError("'" + key + "' is not a numeric config key");
  validate();
}

CircuitSpec ExperimentConfig::circuit() const {
  CircuitSpec spec = CircuitSpec::random(n_qubits, layers, circuit_seed);
  if (!angles.empty()) spec.angles = angles;
  return spec;
}

IntegratorConfig ExperimentConfig::integrator() const {
  IntegratorConfig cfg;
  cfg.dt = dt;
  cfg.t_final = t_final;
  cfg.pinv_cutoff = pinv_cutoff;
  cfg.output_stride = output_stride;
  return cfg;
}

MeasurementBackend ExperimentConfig::measurement() const {
  return {backend, shots, shot_seed};
}

}  // namespace gqas
