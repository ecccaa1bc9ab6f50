// Copyright 2026 The REORIENT Authors
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


// Command-line front end: solve, sensitivity, compare and gen-scenarios.

#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "reorient/cli/commands.h"
#include "reorient/cli/run.h"
#include "reorient/errors.h"

namespace {

using reorient::cli::RunManifest;

struct Flags {
  std::string case_path;
  std::string algorithm = "enhanced";
  double epsilon_rel = 0.01;
  double gamma = 0.5;
  uint64_t seed = 0;
  int threads = 1;
  std::string output;
};

void AddCommon(CLI::App* cmd, Flags& f) {
  cmd->add_option("case", f.case_path, "Case file")->required();
  cmd->add_option("--algorithm", f.algorithm, "enhanced, standard or monolithic")
      ->check(CLI::IsMember({"enhanced", "standard", "monolithic"}));
  cmd->add_option("--epsilon-rel", f.epsilon_rel, "Relative convergence tolerance");
  cmd->add_option("--gamma", f.gamma, "Level-set parameter in (0, 1)");
  cmd->add_option("--seed", f.seed, "Seed for price paths and scenario sampling");
  cmd->add_option("--threads", f.threads, "Worker threads for subproblem solves");
  cmd->add_option("--output", f.output,
                  std::string("Output directory (default: $") +
                      reorient::cli::kOutputDirVariable + " or reorient-out)");
}

RunManifest ToManifest(const Flags& f, const CLI::App* cmd) {
  RunManifest m;
  m.case_path = f.case_path;
  m.algorithm = reorient::cli::ParseAlgorithm(f.algorithm);
  m.config.epsilon_rel = f.epsilon_rel;
  m.config.gamma = f.gamma;
  m.config.threads = f.threads;
  if (cmd->count("--seed") > 0) m.seed = f.seed;
  m.output_dir = f.output.empty() ? reorient::cli::DefaultOutputDir() : f.output;
  return m;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Capacity expansion with retrofit planning, solved by Benders decomposition"};
  app.set_version_flag("--version", reorient::cli::VersionString());
  app.require_subcommand(1);

  Flags flags;
  CLI::App* solve = app.add_subcommand("solve", "Solve a case and write a decision report");
  AddCommon(solve, flags);

  std::string parameter;
  std::vector<double> values;
  CLI::App* sweep = app.add_subcommand("sensitivity", "Solve once per value of a scalar");
  AddCommon(sweep, flags);
  sweep->add_option("--parameter", parameter, "Scalar to sweep, e.g. retrofit_share")
      ->required();
  sweep->add_option("--values", values, "Values, comma separated")
      ->required()
      ->delimiter(',');

  CLI::App* compare =
      app.add_subcommand("compare", "Solve the full and the investment-only model");
  AddCommon(compare, flags);

  CLI::App* scenarios =
      app.add_subcommand("gen-scenarios", "Write the price tree and operational periods");
  AddCommon(scenarios, flags);

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve->parsed()) {
      return reorient::cli::CmdSolve(ToManifest(flags, solve), std::cout);
    }
    if (sweep->parsed()) {
      return reorient::cli::CmdSensitivity(ToManifest(flags, sweep), parameter, values,
                                           std::cout);
    }
    if (compare->parsed()) {
      return reorient::cli::CmdCompare(ToManifest(flags, compare), std::cout);
    }
    return reorient::cli::CmdGenScenarios(ToManifest(flags, scenarios), std::cout);
  } catch (const reorient::cli::UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return reorient::cli::kExitUsage;
  } catch (const reorient::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return reorient::cli::kExitError;
  }
}
