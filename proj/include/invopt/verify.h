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

#ifndef INVOPT_VERIFY_H_
#define INVOPT_VERIFY_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "invopt/instance.h"
#include "invopt/oracle.h"
#include "invopt/reference.h"
#include "invopt/report.h"

namespace invopt {

// Each check returns nullopt when it passes and a diagnostic otherwise.
using CheckFailure = std::optional<std::string>;

using SolverFn =
    std::function<SolveReport(const Instance& instance, const Oracle& oracle)>;

// The solvers under test; tests swap in broken ones.
struct Solvers {
  SolverFn hamming;
  SolverFn linf;

  static Solvers Default();
};

// Splits a trace into its per-cost-function runs (each run restarts at
// index 0).
std::vector<std::span<const TraceEntry>> SplitRuns(
    const std::vector<TraceEntry>& trace);

// Status and optimal value agree with the brute-force reference, and an
// optimal vector is feasible against `family`.
CheckFailure CheckHammingEquivalence(const Instance& instance,
                                     const SolveReport& report,
                                     const ReferenceResult& reference,
                                     std::span<const Subset> family);
// Same, and additionally the optimal d agrees.
CheckFailure CheckLinfEquivalence(const Instance& instance,
                                  const SolveReport& report,
                                  const ReferenceResult& reference,
                                  std::span<const Subset> family);

// At most n + 1 rounds per cost function.
CheckFailure CheckHammingRounds(const Instance& instance,
                                const SolveReport& report);
// At most IterationCapLinf rounds per cost function, and 2n^2 + 2 when all
// weights are 1.
CheckFailure CheckLinfRounds(const Instance& instance,
                             const SolveReport& report);

// Between consecutive rounds d grows, and either the previous challenger is
// now tied with the input solution, the active set shrank, or the active set
// kept its size and the potential dropped.
CheckFailure CheckLinfProgress(const SolveReport& report);

// Solver infeasibility matches the threshold-max(w) test (Hamming) and the
// p^m test (L-inf), both decided by enumeration.
CheckFailure CheckHammingCharacterization(const Instance& instance,
                                          const SolveReport& report,
                                          std::span<const Subset> family);
CheckFailure CheckLinfCharacterization(const Instance& instance,
                                       const SolveReport& report,
                                       std::span<const Subset> family);

// For `samples` thresholds above the optimum, the candidate vector stays
// feasible. Report must be optimal.
CheckFailure CheckMonotoneHamming(const Instance& instance,
                                  const SolveReport& report,
                                  std::span<const Subset> family,
                                  std::mt19937_64& rng, int samples);
CheckFailure CheckMonotoneLinf(const Instance& instance,
                               const SolveReport& report,
                               std::span<const Subset> family,
                               std::mt19937_64& rng, int samples);

// The combined report's value is the max of the single-cost values and its
// vector is feasible for every cost function.
CheckFailure CheckMultiCost(const Instance& instance, const SolveReport& report,
                            const SolverFn& solver, const Oracle& oracle,
                            std::span<const Subset> family);

// p^{ceil(d*)} is feasible, and for every integer 0 <= t < ceil(d*) no
// feasible p^t has value at most t. Unit weights, integral data.
CheckFailure CheckIntegralRounding(const Instance& instance,
                                   const SolveReport& report,
                                   std::span<const Subset> family);

// Parameters of case `index` of a sweep: every family kind, n <= 7, mixed
// bound densities and k in {1, 2, 3}.
GeneratorParams SweepParams(uint64_t seed, int index);

struct CheckTally {
  std::string name;
  int cases = 0;
  int failures = 0;
};

struct VerifySummary {
  int cases = 0;
  int failed_cases = 0;
  int max_hamming_rounds = 0;
  int max_linf_rounds = 0;
  int64_t oracle_calls = 0;
  std::vector<CheckTally> checks;
  // First failing case, in case order.
  std::optional<int> first_failure_index;
  std::string first_failure_message;
  std::optional<Instance> first_failure;

  bool ok() const { return failed_cases == 0; }
};

// Runs every check on `count` generated cases.
VerifySummary RunVerifySweep(uint64_t seed, int count, const Solvers& solvers);

// Summary table, then the first failing instance as a document.
void PrintVerifySummary(const VerifySummary& summary, std::ostream& out);

}  // namespace invopt

#endif  // INVOPT_VERIFY_H_
