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

#include "invopt/cli.h"

#include <exception>
#include <fstream>

#include "invopt/hamming.h"
#include "invopt/io.h"
#include "invopt/linf.h"
#include "invopt/report.h"

namespace invopt {
namespace {

// Writes `text` to the configured file, or to `out` when none is set.
bool Emit(const RunConfig& config, const std::string& text, std::ostream& out,
          std::ostream& err) {
  if (config.output_path.empty()) {
    out << text;
    return static_cast<bool>(out);
  }
  std::ofstream file(config.output_path, std::ios::binary);
  file << text;
  if (!file) {
    err << "error: cannot write " << config.output_path << "\n";
    return false;
  }
  return true;
}

void PrintTrace(const Instance& instance, const SolveReport& report,
                std::ostream& err) {
  for (const TraceEntry& e : report.trace) {
    err << "round " << e.index << "  parameter " << ToString(e.parameter)
        << "  challenger {";
    for (size_t i = 0; i < e.challenger.size(); ++i) {
      err << (i ? "," : "") << instance.element_ids[e.challenger[i]];
    }
    err << "}  c(F*) " << ToString(e.star_cost) << "  c(F) "
        << ToString(e.challenger_cost) << "  |S| " << e.active_set_size;
    if (e.potential) err << "  potential " << ToString(*e.potential);
    err << "\n";
  }
}

}  // namespace

std::optional<Objective> ParseObjective(const std::string& name) {
  if (name == "hamming") return Objective::kHamming;
  if (name == "linf") return Objective::kLInf;
  return std::nullopt;
}

std::optional<FamilyKind> ParseFamilyKind(const std::string& name) {
  for (FamilyKind kind :
       {FamilyKind::kExplicit, FamilyKind::kSpanningTree, FamilyKind::kDagPath,
        FamilyKind::kUniformMatroid}) {
    if (FamilyKindName(kind) == name) return kind;
  }
  return std::nullopt;
}

int CmdSolve(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    Instance instance = LoadInstanceFile(config.instance_path);
    if (config.objective) instance.objective = *config.objective;
    const FamilyOracle oracle(instance.family);
    const SolveReport report = instance.objective == Objective::kHamming
                                   ? SolveHammingMulti(instance, oracle)
                                   : SolveLinfMulti(instance, oracle);
    if (config.trace) PrintTrace(instance, report, err);
    if (!Emit(config, SerializeReport(instance, report, config.trace), out,
              err)) {
      return kExitError;
    }
    return report.optimal() ? kExitOptimal : kExitInfeasible;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
  }
  return kExitError;
}

int CmdVerify(const RunConfig& config, const Solvers& solvers,
              std::ostream& out, std::ostream& err) {
  if (config.count < 0) {
    err << "error: count must be nonnegative\n";
    return kExitError;
  }
  try {
    const VerifySummary summary =
        RunVerifySweep(config.seed, config.count, solvers);
    PrintVerifySummary(summary, out);
    return summary.ok() ? kExitOptimal : kExitError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
  }
  return kExitError;
}

int CmdGen(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    const Instance instance = RandomInstance(config.generator);
    return Emit(config, SerializeInstance(instance), out, err) ? kExitOptimal
                                                               : kExitError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
  }
  return kExitError;
}

}  // namespace invopt
