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

#include "invopt/verify.h"

#include <algorithm>
#include <exception>
#include <iomanip>
#include <map>
#include <sstream>
#include <utility>

#include "invopt/family.h"
#include "invopt/hamming.h"
#include "invopt/io.h"
#include "invopt/linf.h"

namespace invopt {
namespace {

std::string Describe(const SolveReport& report) {
  if (!report.optimal()) return "infeasible";
  return "optimal " + ToString(report.objective_value) + " (parameter " +
         ToString(report.parameter) + ")";
}

std::string Describe(const ReferenceResult& reference) {
  if (!reference.optimal()) return "infeasible";
  return "optimal " + ToString(reference.optimal_value) + " (parameter " +
         ToString(reference.parameter) + ")";
}

CheckFailure Fail(std::string message) { return message; }

CheckFailure CheckFeasible(const Instance& instance, const DeviationVector& p,
                           std::span<const Subset> family, const char* what) {
  const FeasibilityResult result = IsFeasibleAgainst(instance, p, family);
  if (result.feasible) return std::nullopt;
  std::ostringstream out;
  out << what << " is not feasible";
  if (result.violated_element) {
    out << ": bound violated at " << instance.element_ids[*result.violated_element];
  } else if (result.cheaper_solution) {
    out << ": a cheaper solution exists for cost " << result.cost_index;
  }
  return out.str();
}

bool Unconstrained(const Instance& instance) {
  for (int s = 0; s < instance.size(); ++s) {
    if (instance.lower[s].is_finite() || instance.upper[s].is_finite()) {
      return false;
    }
  }
  return true;
}

bool UnitWeights(const Instance& instance) {
  return std::all_of(instance.weights.begin(), instance.weights.end(),
                     [](const Rational& w) { return w == 1; });
}

// A positive rational with small numerator and denominator.
Rational RandomPositive(std::mt19937_64& rng) {
  const long num = std::uniform_int_distribution<long>(1, 24)(rng);
  const long den = std::uniform_int_distribution<long>(1, 6)(rng);
  Rational r(num, den);
  r.canonicalize();
  return r;
}

int RoundCount(const SolveReport& report) {
  int most = 0;
  for (std::span<const TraceEntry> run : SplitRuns(report.trace)) {
    most = std::max(most, static_cast<int>(run.size()));
  }
  return most;
}

}  // namespace

Solvers Solvers::Default() {
  return {[](const Instance& instance, const Oracle& oracle) {
            return SolveHammingMulti(instance, oracle);
          },
          [](const Instance& instance, const Oracle& oracle) {
            return SolveLinfMulti(instance, oracle);
          }};
}

std::vector<std::span<const TraceEntry>> SplitRuns(
    const std::vector<TraceEntry>& trace) {
  std::vector<std::span<const TraceEntry>> runs;
  size_t start = 0;
  for (size_t i = 1; i <= trace.size(); ++i) {
    if (i == trace.size() || trace[i].index == 0) {
      runs.emplace_back(trace.data() + start, i - start);
      start = i;
    }
  }
  return runs;
}

CheckFailure CheckHammingEquivalence(const Instance& instance,
                                     const SolveReport& report,
                                     const ReferenceResult& reference,
                                     std::span<const Subset> family) {
  if (report.status != reference.status ||
      (report.optimal() && report.objective_value != reference.optimal_value)) {
    return Fail("hamming: solver " + Describe(report) + ", reference " +
                Describe(reference));
  }
  if (report.optimal()) {
    if (!report.deviation) return Fail("hamming: optimal report without vector");
    if (HammingObjective(*report.deviation, instance.weights) !=
        report.objective_value) {
      return Fail("hamming: reported value differs from the vector's");
    }
    return CheckFeasible(instance, *report.deviation, family, "hamming vector");
  }
  return std::nullopt;
}

CheckFailure CheckLinfEquivalence(const Instance& instance,
                                  const SolveReport& report,
                                  const ReferenceResult& reference,
                                  std::span<const Subset> family) {
  if (report.status != reference.status ||
      (report.optimal() &&
       (report.objective_value != reference.optimal_value ||
        report.parameter != reference.parameter))) {
    return Fail("linf: solver " + Describe(report) + ", reference " +
                Describe(reference));
  }
  if (report.optimal()) {
    if (!report.deviation) return Fail("linf: optimal report without vector");
    if (LInfObjective(*report.deviation, instance.weights) !=
        report.objective_value) {
      return Fail("linf: reported value differs from the vector's");
    }
    return CheckFeasible(instance, *report.deviation, family, "linf vector");
  }
  return std::nullopt;
}

CheckFailure CheckHammingRounds(const Instance& instance,
                                const SolveReport& report) {
  const int rounds = RoundCount(report);
  if (rounds > instance.size() + 1) {
    return Fail("hamming: " + std::to_string(rounds) + " rounds for n = " +
                std::to_string(instance.size()));
  }
  return std::nullopt;
}

CheckFailure CheckLinfRounds(const Instance& instance,
                             const SolveReport& report) {
  const int rounds = RoundCount(report);
  const Integer cap = IterationCapLinf(instance);
  if (Integer(rounds) > cap) {
    return Fail("linf: " + std::to_string(rounds) + " rounds, cap " +
                cap.get_str());
  }
  const int n = instance.size();
  if (UnitWeights(instance) && rounds > 2 * n * n + 2) {
    return Fail("linf: " + std::to_string(rounds) +
                " rounds with unit weights, n = " + std::to_string(n));
  }
  return std::nullopt;
}

CheckFailure CheckLinfProgress(const SolveReport& report) {
  for (std::span<const TraceEntry> run : SplitRuns(report.trace)) {
    for (size_t i = 1; i < run.size(); ++i) {
      const TraceEntry& before = run[i - 1];
      const TraceEntry& after = run[i];
      const std::string where = "linf round " + std::to_string(after.index);
      if (after.parameter <= before.parameter) {
        return Fail(where + ": d did not increase");
      }
      if (!after.previous_challenger_cost || !before.potential ||
          !after.potential) {
        return Fail(where + ": trace entry lacks progress data");
      }
      const bool tied = *after.previous_challenger_cost == after.star_cost;
      const bool shrank = after.active_set_size < before.active_set_size;
      const bool potential_dropped =
          after.active_set_size == before.active_set_size &&
          *after.potential < *before.potential;
      if (!tied && !shrank && !potential_dropped) {
        return Fail(where + ": no tie, no active-set shrink, no potential drop");
      }
    }
  }
  return std::nullopt;
}

CheckFailure CheckHammingCharacterization(const Instance& instance,
                                          const SolveReport& report,
                                          std::span<const Subset> family) {
  const Rational m = HammingMByEnumeration(instance, family);
  const DeviationVector p =
      SpecialVectorHamming(instance, MaxWeight(instance), m);
  const bool feasible = IsFeasibleAgainst(instance, p, family).feasible;
  if (feasible != report.optimal()) {
    return Fail(std::string("hamming: solver ") + Describe(report) +
                " but the max-threshold vector is " +
                (feasible ? "feasible" : "infeasible"));
  }
  return std::nullopt;
}

CheckFailure CheckLinfCharacterization(const Instance& instance,
                                       const SolveReport& report,
                                       std::span<const Subset> family) {
  const Rational m = FeasibilityBoundM(instance);
  const DeviationVector p = SpecialVectorLinf(instance, m);
  const bool feasible = IsFeasibleAgainst(instance, p, family).feasible;
  if (feasible != report.optimal()) {
    return Fail(std::string("linf: solver ") + Describe(report) + " but p^" +
                ToString(m) + " is " + (feasible ? "feasible" : "infeasible"));
  }
  return std::nullopt;
}

CheckFailure CheckMonotoneHamming(const Instance& instance,
                                  const SolveReport& report,
                                  std::span<const Subset> family,
                                  std::mt19937_64& rng, int samples) {
  const Rational m = HammingMByEnumeration(instance, family);
  for (int i = 0; i < samples; ++i) {
    const Rational delta = report.parameter + RandomPositive(rng);
    const DeviationVector p = SpecialVectorHamming(instance, delta, m);
    if (IsFeasibleAgainst(instance, p, family).feasible) continue;
    return Fail("hamming: threshold " + ToString(delta) +
                " infeasible above optimum " + ToString(report.parameter));
  }
  return std::nullopt;
}

CheckFailure CheckMonotoneLinf(const Instance& instance,
                               const SolveReport& report,
                               std::span<const Subset> family,
                               std::mt19937_64& rng, int samples) {
  for (int i = 0; i < samples; ++i) {
    const Rational d = report.parameter + RandomPositive(rng);
    const DeviationVector p = SpecialVectorLinf(instance, d);
    if (IsFeasibleAgainst(instance, p, family).feasible) continue;
    return Fail("linf: p^" + ToString(d) + " infeasible above optimum " +
                ToString(report.parameter));
  }
  return std::nullopt;
}

CheckFailure CheckMultiCost(const Instance& instance, const SolveReport& report,
                            const SolverFn& solver, const Oracle& oracle,
                            std::span<const Subset> family) {
  bool all_optimal = true;
  Rational best = 0;
  for (int j = 0; j < instance.num_costs(); ++j) {
    const SolveReport single = solver(WithSingleCost(instance, j), oracle);
    if (!single.optimal()) {
      all_optimal = false;
      break;
    }
    best = std::max(best, single.objective_value);
  }
  if (all_optimal != report.optimal()) {
    return Fail("multi-cost: combined " + Describe(report) +
                " disagrees with the per-cost statuses");
  }
  if (!report.optimal()) return std::nullopt;
  if (report.objective_value != best) {
    return Fail("multi-cost: combined value " +
                ToString(report.objective_value) + ", per-cost max " +
                ToString(best));
  }
  return CheckFeasible(instance, *report.deviation, family, "combined vector");
}

CheckFailure CheckIntegralRounding(const Instance& instance,
                                   const SolveReport& report,
                                   std::span<const Subset> family) {
  if (!report.optimal()) return std::nullopt;
  const Integer top = Ceil(report.parameter);
  const DeviationVector rounded = RoundIntegral(instance, report.parameter);
  for (const Rational& v : rounded) {
    if (!IsIntegral(v)) return Fail("rounding: non-integral coordinate");
  }
  if (CheckFailure f = CheckFeasible(instance, rounded, family,
                                     "rounded vector")) {
    return f;
  }
  for (Integer t = 0; t < top; ++t) {
    // Below d0, p^t sits on a bound and its value exceeds t; only vectors
    // whose value really is at most t would beat the rounded one.
    const DeviationVector p = SpecialVectorLinf(instance, Rational(t));
    if (LInfObjective(p, instance.weights) <= t &&
        IsFeasibleAgainst(instance, p, family).feasible) {
      return Fail("rounding: integral d = " + t.get_str() +
                  " already feasible, below " + top.get_str());
    }
  }
  return std::nullopt;
}

GeneratorParams SweepParams(uint64_t seed, int index) {
  std::mt19937_64 rng(seed);
  rng.discard(static_cast<unsigned long long>(index) * 8);
  auto pick = [&](int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
  };
  static constexpr double kDensities[] = {0.0, 0.2, 0.4, 0.7};
  GeneratorParams params;
  params.seed = rng();
  params.kind = static_cast<FamilyKind>(index % 4);
  params.n = pick(2, 7);
  params.bound_density = kDensities[pick(0, 3)];
  const int roll = pick(0, 9);
  params.k = roll < 6 ? 1 : roll < 8 ? 2 : 3;
  params.unit_weights = pick(0, 4) == 0;
  params.objective = index % 2 == 0 ? Objective::kLInf : Objective::kHamming;
  return params;
}

VerifySummary RunVerifySweep(uint64_t seed, int count, const Solvers& solvers) {
  static const char* kCheckNames[] = {
      "hamming_equivalence", "linf_equivalence",      "hamming_rounds",
      "linf_rounds",         "linf_progress",         "hamming_feasibility",
      "linf_feasibility",    "minmax",                "monotone_hamming",
      "monotone_linf"};
  VerifySummary summary;
  for (const char* name : kCheckNames) summary.checks.push_back({name, 0, 0});
  auto tally = [&](int check, const CheckFailure& failure,
                   std::vector<std::string>& messages) {
    ++summary.checks[check].cases;
    if (failure) {
      ++summary.checks[check].failures;
      messages.push_back(summary.checks[check].name + ": " + *failure);
    }
  };

  for (int index = 0; index < count; ++index) {
    const GeneratorParams params = SweepParams(seed, index);
    const Instance instance = RandomInstance(params);
    std::vector<std::string> messages;
    try {
      const std::vector<Subset> family =
          EnumerateFamily(instance.family, instance.size());
      const FamilyOracle base(instance.family);
      const CountingOracle oracle(base);
      std::mt19937_64 rng(params.seed ^ 0x9e3779b97f4a7c15ULL);

      const SolveReport hamming = solvers.hamming(instance, oracle);
      const SolveReport linf = solvers.linf(instance, oracle);
      summary.oracle_calls += oracle.calls();
      summary.max_hamming_rounds =
          std::max(summary.max_hamming_rounds, RoundCount(hamming));
      summary.max_linf_rounds =
          std::max(summary.max_linf_rounds, RoundCount(linf));

      tally(0, CheckHammingEquivalence(instance, hamming,
                                       BruteForceHamming(instance), family),
            messages);
      tally(1, CheckLinfEquivalence(instance, linf, BruteForceLinf(instance),
                                    family),
            messages);
      tally(2, CheckHammingRounds(instance, hamming), messages);
      tally(3, CheckLinfRounds(instance, linf), messages);
      tally(4, CheckLinfProgress(linf), messages);
      tally(5, CheckHammingCharacterization(instance, hamming, family),
            messages);
      tally(6, CheckLinfCharacterization(instance, linf, family), messages);
      if (Unconstrained(instance)) {
        const MinmaxCheck minmax = CheckMinmaxTheorem(instance);
        tally(7,
              minmax.holds ? CheckFailure()
                           : Fail("lhs " + ToString(minmax.lhs) + " != rhs " +
                                  ToString(minmax.rhs)),
              messages);
      }
      if (hamming.optimal()) {
        tally(8, CheckMonotoneHamming(instance, hamming, family, rng, 2),
              messages);
      }
      if (linf.optimal()) {
        tally(9, CheckMonotoneLinf(instance, linf, family, rng, 2), messages);
      }
    } catch (const std::exception& e) {
      messages.push_back(std::string("exception: ") + e.what());
    }
    ++summary.cases;
    if (!messages.empty()) {
      ++summary.failed_cases;
      if (!summary.first_failure_index) {
        summary.first_failure_index = index;
        summary.first_failure_message = messages.front();
        summary.first_failure = instance;
      }
    }
  }
  return summary;
}

void PrintVerifySummary(const VerifySummary& summary, std::ostream& out) {
  out << std::left << std::setw(22) << "check" << std::right << std::setw(8)
      << "cases" << std::setw(10) << "failures" << "\n";
  for (const CheckTally& check : summary.checks) {
    out << std::left << std::setw(22) << check.name << std::right
        << std::setw(8) << check.cases << std::setw(10) << check.failures
        << "\n";
  }
  out << "cases " << summary.cases << ", failed " << summary.failed_cases
      << ", max rounds hamming " << summary.max_hamming_rounds << " linf "
      << summary.max_linf_rounds << ", oracle calls " << summary.oracle_calls
      << "\n";
  if (summary.first_failure) {
    out << "first failure: case " << *summary.first_failure_index << ": "
        << summary.first_failure_message << "\n"
        << SerializeInstance(*summary.first_failure);
  }
}

}  // namespace invopt
