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

#ifndef INVOPT_CLI_H_
#define INVOPT_CLI_H_

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

#include "invopt/instance.h"
#include "invopt/reference.h"
#include "invopt/verify.h"

namespace invopt {

inline constexpr int kExitOptimal = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitInfeasible = 2;

struct RunConfig {
  std::string instance_path;
  // Empty means the `out` stream.
  std::string output_path;
  bool trace = false;
  std::optional<Objective> objective;
  uint64_t seed = 42;
  int count = 500;
  GeneratorParams generator;
};

// Solves the instance with the objective it names (or the override) and
// writes the report. k > 1 cost functions select the combined solver.
int CmdSolve(const RunConfig& config, std::ostream& out, std::ostream& err);

// Random sweep against the reference solvers; exit 0 iff every check passes.
int CmdVerify(const RunConfig& config, const Solvers& solvers,
              std::ostream& out, std::ostream& err);

// Writes RandomInstance(config.generator).
int CmdGen(const RunConfig& config, std::ostream& out, std::ostream& err);

std::optional<Objective> ParseObjective(const std::string& name);
std::optional<FamilyKind> ParseFamilyKind(const std::string& name);

}  // namespace invopt

#endif  // INVOPT_CLI_H_
