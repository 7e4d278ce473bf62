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

#ifndef INVOPT_LINF_H_
#define INVOPT_LINF_H_

#include <cstdint>
#include <optional>

#include "invopt/family.h"
#include "invopt/instance.h"
#include "invopt/oracle.h"
#include "invopt/report.h"

namespace invopt {

// Weighted L-infinity objective.
//
// Candidates are p^d(s) = clamp(+d/w(s)) on F* and clamp(-d/w(s)) off F*,
// clamped to [l(s), u(s)]. Feasibility of p^d is monotone in d, so the
// solver raises d Newton-style until no challenger beats the input solution.

DeviationVector SpecialVectorLinf(const Instance& instance,
                                  const Rational& delta);

// max{0, max{w l : l > 0}, max{w |u| : u < 0}}.
Rational InitialD0(const Instance& instance);

// Coordinates of p^d that still move when d grows:
// {s in F*: d < w u} + {s not in F*: d < -w l}.
Subset ActiveSet(const Instance& instance, const Rational& d);

// 1/w((F \ F*) & S) - 1/w((F & F*) & S).
Rational Potential(const Instance& instance, const Subset& challenger,
                   const Subset& active);

struct LInfState {
  Rational d;
  Subset challenger;
  Subset active;
  Rational star_cost;
  Rational challenger_cost;
};

// Next increase of d: the step that equalizes F* with the challenger, capped
// where an active coordinate hits its bound. nullopt when no active
// coordinate separates the two solutions, which certifies infeasibility.
// Requires star_cost > challenger_cost.
std::optional<Rational> StepIncrement(const Instance& instance,
                                      const LInfState& state);

// n * (2 * D * ||w||_{-1} + 1) + 2, D the lcm of the denominators of 1/w.
Integer IterationCapLinf(const Instance& instance);

SolveReport SolveLinf(const Instance& instance, const Oracle& oracle,
                      int cost_index = 0);

// All cost functions: p^d for the largest per-cost optimum.
SolveReport SolveLinfMulti(const Instance& instance, const Oracle& oracle);

// max{0, max_{j, F != F*} (c^j(F*) - c^j(F)) / (1/w)(F* sym F)} by
// enumeration. Unconstrained instances only (kConstrainedInstance).
Rational MinmaxValue(const Instance& instance,
                     int64_t limit = kDefaultEnumerationLimit);

// m = max{0, m1, m2, m3}; the problem is feasible iff p^m is. Enumerates
// the family; with several cost functions m3 maximizes over all of them.
Rational FeasibilityBoundM(const Instance& instance,
                           int64_t limit = kDefaultEnumerationLimit);

// p^{ceil(delta)}. Requires unit weights and integral costs and finite
// bounds (kPreconditionViolated otherwise).
DeviationVector RoundIntegral(const Instance& instance, const Rational& delta);

}  // namespace invopt

#endif  // INVOPT_LINF_H_
