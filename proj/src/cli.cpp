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

#include "gqas/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <iostream>
#include <sstream>

#include "gqas/experiment.hpp"
#include "gqas/parallel.hpp"

#ifndef GQAS_VERSION
#define GQAS_VERSION "unknown"
#endif

namespace gqas {

namespace {

std::vector<double> parse_values(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ConfigError("--values entry '" + item + "' is not a number");
    }
  }
  if (out.empty()) throw ConfigError("--values is empty");
  return out;
}

void report(const RunResult& r, std::ostream& out) {
  out << "wrote " << r.output_dir.string() << "\n";
  for (const auto& [name, value] : r.summary) out << "  " << name << " = " << value << "\n";
  for (const auto& w : r.warnings) out << "  warning: " << w << "\n";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generalized quantum assisted simulator", "gqas"};
  app.set_version_flag("--version", std::string(GQAS_VERSION));
  app.require_subcommand(1);

  std::string config_path;
  std::string overlaps_dir;
  bool with_oracle = false;

  auto* run = app.add_subcommand("run", "Run one experiment config");
  run->add_option("config", config_path, "JSON experiment config")->required();
  run->add_option("--overlaps", overlaps_dir, "Reuse overlap matrices from this directory");
  run->add_flag("--with-oracle", with_oracle)->group("");

  std::string key;
  std::string values;
  auto* sweep = app.add_subcommand("sweep", "Run a config once per value of one numeric key");
  sweep->add_option("config", config_path, "JSON experiment config")->required();
  sweep->add_option("--key", key, "Numeric config key to vary")->required();
  sweep->add_option("--values", values, "Comma-separated values")->required();
  sweep->add_flag("--with-oracle", with_oracle)->group("");

  auto* overlaps = app.add_subcommand("overlaps", "Measure and store the overlap matrices only");
  overlaps->add_option("config", config_path, "JSON experiment config")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitConfigError;
  }

  try {
    const ExperimentConfig config = ExperimentConfig::load(config_path);
    RunOptions options;
    options.with_oracle = with_oracle;
    if (run->parsed()) {
      if (!overlaps_dir.empty()) options.overlaps_dir = overlaps_dir;
      report(run_experiment(config, options), out);
    } else if (sweep->parsed()) {
      for (const auto& row : run_sweep(config, key, parse_values(values), options)) {
        out << key << " = " << row.value << ": ";
        report(row.result, out);
      }
    } else {
      report(compute_overlaps(config), out);
    }
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const NumericalError& e) {
    err << "numerical failure: " << e.what() << "\n";
    return kExitNumericalFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitOk;
}

}  // namespace gqas
