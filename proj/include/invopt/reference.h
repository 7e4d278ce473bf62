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

#ifndef INVOPT_REFERENCE_H_
#define INVOPT_REFERENCE_H_

#include <cstdint>
#include <span>
#include <vector>

#include "invopt/family.h"
#include "invopt/instance.h"
#include "invopt/report.h"

namespace invopt {

// Exhaustive certifiers. They never call an oracle; every feasibility
// decision is made against the full enumerated family.

struct ReferenceResult {
  SolveStatus status = SolveStatus::kInfeasible;
  Rational optimal_value = 0;
  // Threshold (Hamming) or d (L-inf) of the returned vector.
  Rational parameter = 0;
  DeviationVector vector;

  bool optimal() const { return status == SolveStatus::kOptimal; }
};

// m for the threshold vectors, maximized directly over `family` and over
// every cost function.
Rational HammingMByEnumeration(const Instance& instance,
                               std::span<const Subset> family);

// Scans thresholds {0} + {w(s)} upward and returns the first whose vector
// is feasible for every cost function.
ReferenceResult BruteForceHamming(const Instance& instance,
                                  int64_t limit = kDefaultEnumerationLimit);

// For every solution F and cost function, finds the smallest d >= d0 at
// which the piecewise-linear gap (c - p^d)(F*) - (c - p^d)(F) drops to 0,
// solving each linear piece exactly. The answer is the largest such root.
ReferenceResult BruteForceLinf(const Instance& instance,
                               int64_t limit = kDefaultEnumerationLimit);

struct MinmaxCheck {
  bool holds = false;
  Rational lhs;
  Rational rhs;
};

// lhs: max over cost functions of the single-cost brute-force optimum.
// rhs: MinmaxValue. Unconstrained instances only.
MinmaxCheck CheckMinmaxTheorem(const Instance& instance);

struct GeneratorParams {
  uint64_t seed = 1;
  int n = 4;
  FamilyKind kind = FamilyKind::kExplicit;
  int min_family_size = 2;
  int max_family_size = 6;
  int cost_min = -5;
  int cost_max = 5;
  int bound_min = -5;
  int bound_max = 5;
  // Probability that each of l(s), u(s) is finite.
  double bound_density = 0.3;
  bool unit_weights = false;
  int k = 1;
  Objective objective = Objective::kLInf;
};

// Deterministic in `params`; always passes ValidateInstance. Weights are
// drawn from {1/3, 1/2, 1, 2, 3} unless unit_weights is set.
Instance RandomInstance(const GeneratorParams& params);

}  // namespace invopt

#endif  // INVOPT_REFERENCE_H_
