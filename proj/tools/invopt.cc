// Copyright 2026 The invopt Authors
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

// invopt: solve, verify and generate inverse optimization instances.
//
//   invopt solve instance.json [--objective linf|hamming] [--trace] [--out f]
//   invopt verify [--seed 42] [--count 500]
//   invopt gen [--seed 7] [--n 4] [--kind explicit] [--k 1] [--out f]

#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "invopt/cli.h"

int main(int argc, char** argv) {
  using invopt::RunConfig;
  CLI::App app("Inverse optimization with a minimum-cost oracle.");
  app.require_subcommand(1);

  RunConfig config;
  std::string objective;
  std::string kind = "explicit";

  CLI::App* solve = app.add_subcommand("solve", "Solve an instance document.");
  solve->add_option("instance", config.instance_path, "Instance JSON file")
      ->required();
  solve->add_option("--objective", objective, "hamming or linf");
  solve->add_flag("--trace", config.trace, "Include the iteration trace");
  solve->add_option("--out", config.output_path, "Report file");

  CLI::App* verify =
      app.add_subcommand("verify", "Check the solvers on random instances.");
  verify->add_option("--seed", config.seed, "Sweep seed");
  verify->add_option("--count", config.count, "Number of instances");

  CLI::App* gen = app.add_subcommand("gen", "Write a random instance.");
  gen->add_option("--seed", config.generator.seed, "Generator seed");
  gen->add_option("--n", config.generator.n, "Ground set size");
  gen->add_option("--kind", kind,
                  "explicit, spanning_tree, dag_path or uniform_matroid");
  gen->add_option("--k", config.generator.k, "Number of cost functions");
  gen->add_option("--bound-density", config.generator.bound_density,
                  "Probability of each finite bound");
  gen->add_flag("--unit-weights", config.generator.unit_weights,
                "Use w = 1 everywhere");
  gen->add_option("--objective", objective, "hamming or linf");
  gen->add_option("--out", config.output_path, "Instance file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : invopt::kExitError;
  }

  if (!objective.empty()) {
    config.objective = invopt::ParseObjective(objective);
    if (!config.objective) {
      std::cerr << "error: unknown objective " << objective << "\n";
      return invopt::kExitError;
    }
    config.generator.objective = *config.objective;
  }
  if (*solve) return invopt::CmdSolve(config, std::cout, std::cerr);
  if (*verify) {
    return invopt::CmdVerify(config, invopt::Solvers::Default(), std::cout,
                             std::cerr);
  }
  const auto family_kind = invopt::ParseFamilyKind(kind);
  if (!family_kind) {
    std::cerr << "error: unknown family kind " << kind << "\n";
    return invopt::kExitError;
  }
  config.generator.kind = *family_kind;
  return invopt::CmdGen(config, std::cout, std::cerr);
}
