// Copyright 2026 The qpt Authors
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

#include <CLI11.hpp>

#include <cstdio>
#include <exception>
#include <optional>
#include <string>
#include <vector>

#include "qpt/errors.hpp"
#include "qpt/experiment.hpp"

namespace {

struct Options {
  std::string config_path;
  std::string out;
  std::optional<int> stride;
  std::optional<std::uint64_t> seed;
  std::vector<int> steps;
  bool no_decoherence = false;
};

qpt::ExperimentConfig resolve(const Options& opt) {
  qpt::ExperimentConfig config =
      opt.config_path.empty() ? qpt::ExperimentConfig{} : qpt::load_config(opt.config_path);
  if (!opt.out.empty()) config.output = opt.out;
  if (opt.stride) config.stride = *opt.stride;
  if (opt.seed) config.seed = *opt.seed;
  if (!opt.steps.empty()) config.step_counts = opt.steps;
  if (opt.no_decoherence) config.decoherence.enabled = false;
  config.validate();
  return config;
}

void print_written(const qpt::ExperimentConfig& config, const char* file) {
  std::printf("wrote %s\n", (config.output / file).string().c_str());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-spin transverse-field Ising adiabatic sweep simulator"};
  app.require_subcommand(1);

  Options opt;
  app.add_option("--config", opt.config_path, "key = value configuration file")
      ->check(CLI::ExistingFile);
  app.add_option("--out", opt.out, "output directory (overrides output_dir)");
  app.add_option("--stride", opt.stride, "record every n-th trajectory step")
      ->check(CLI::PositiveNumber);
  app.add_flag("--no-decoherence", opt.no_decoherence, "switch the noise model off");
  app.add_option("--seed", opt.seed, "optimizer seed (0 = deterministic starts only)");

  auto* eigen = app.add_subcommand("eigen-scan", "triplet energies and ground-state amplitudes");
  auto* design = app.add_subcommand("sweep-design", "continuous and discretized g_z(t) schedules");
  auto* simulate = app.add_subcommand("simulate", "fidelity, concurrence and zz along the scan");
  auto* study = app.add_subcommand("step-study", "minimum fidelity against step count");
  study->add_option("--steps", opt.steps, "step counts (overrides step_counts)")
      ->delimiter(',')
      ->check(CLI::PositiveNumber);

  // Global options may appear after the subcommand as well.
  for (auto* sub : {eigen, design, simulate, study}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    const qpt::ExperimentConfig config = resolve(opt);
    if (eigen->parsed()) {
      qpt::cmd_eigen_scan(config);
      print_written(config, "eigen_scan.csv");
    } else if (design->parsed()) {
      const auto d = qpt::cmd_sweep_design(config);
      std::printf("schedule %s, min fidelity %.6f (rate %.4g)\n",
                  d.discrete.status == qpt::FitStatus::Optimized ? "sinh" : "fallback",
                  d.discrete.min_fidelity, d.continuous.adiabaticity_rate);
      print_written(config, "sweep_continuous.csv");
      print_written(config, "sweep_discrete.csv");
      print_written(config, "pulse_segments.csv");
    } else if (simulate->parsed()) {
      const auto traj = qpt::cmd_simulate(config);
      std::printf("min fidelity %.6f, final fidelity %.6f, peak concurrence %.6f\n",
                  traj.min_fidelity(), traj.final_record().fidelity, traj.max_concurrence());
      print_written(config, "trajectory.csv");
    } else if (study->parsed()) {
      for (const auto& row : qpt::cmd_step_study(config)) {
        std::printf("M=%-4d ideal %.6f  decohered %.6f\n", row.steps, row.min_fidelity_ideal,
                    row.min_fidelity_decohered);
      }
      print_written(config, "step_study.csv");
    }
  } catch (const std::exception& e) {
    std::fprintf(stderr, "qpt: error: %s\n", e.what());
    return 1;
  }
  return 0;
}
