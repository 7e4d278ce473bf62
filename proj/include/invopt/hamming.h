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

#ifndef INVOPT_HAMMING_H_
#define INVOPT_HAMMING_H_

#include <optional>

#include "invopt/instance.h"
#include "invopt/oracle.h"
#include "invopt/report.h"

namespace invopt {

// Weighted bottleneck Hamming distance objective.
//
// Candidate deviation vectors come from a single threshold delta: every
// coordinate of weight at most delta is pushed to its bound in the direction
// that favours the input solution (u(s) on F*, l(s) elsewhere), or to +-m
// when that bound is infinite; heavier coordinates stay 0.

// Finite stand-in for infinite bounds, for cost function `cost_index`:
//   m = max{0, max_F c(F*) - c(F) - sum_{F*\F, u<0} u + sum_{F\F*, l>0} l}.
// The inner maximum is one oracle call on c'' = c - u[s in F*, u<0]
// - l[s not in F*, l>0], since it equals c(F*) - U - min_F c''(F).
Rational ComputeMHamming(const Instance& instance, int cost_index,
                         const Oracle& oracle);

// True when the threshold vector for `delta` assigns +-m somewhere.
bool HammingNeedsM(const Instance& instance, const Rational& delta);

// The threshold vector. Coordinates that would receive +m (resp. -m) are
// kept inside their finite lower (resp. upper) bound.
DeviationVector SpecialVectorHamming(const Instance& instance,
                                     const Rational& delta, const Rational& m);

// max{0, max{w(s): l(s) > 0}, max{w(s): u(s) < 0}}: the smallest threshold
// whose vector respects the bounds.
Rational InitialThresholdHamming(const Instance& instance);

struct HammingFeasibility {
  bool feasible = false;
  DeviationVector certificate;
  Rational m = 0;
  FeasibilityResult check;
};

// The problem (over all cost functions) is feasible iff the vector at
// threshold max_s w(s) is feasible.
HammingFeasibility CheckFeasibilityHamming(const Instance& instance,
                                           const Oracle& oracle);

// Newton-type threshold search for cost function `cost_index`. Uses at most
// n + 1 challenger queries plus one query for m.
SolveReport SolveHamming(const Instance& instance, const Oracle& oracle,
                         int cost_index = 0);

// All cost functions at once: the largest per-cost optimal threshold.
SolveReport SolveHammingMulti(const Instance& instance, const Oracle& oracle);

}  // namespace invopt

#endif  // INVOPT_HAMMING_H_
