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

#ifndef INVOPT_INSTANCE_H_
#define INVOPT_INSTANCE_H_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "invopt/family.h"
#include "invopt/oracle.h"
#include "invopt/rational.h"

namespace invopt {

enum class Objective { kHamming, kLInf };

std::string_view ObjectiveName(Objective objective);

// Deviation p(s) per element index; always finite.
using DeviationVector = std::vector<Rational>;
using CostVector = std::vector<Rational>;

// One inverse optimization problem. Element i has id element_ids[i]; all
// per-element vectors are indexed the same way. Immutable once validated.
struct Instance {
  std::vector<std::string> element_ids;
  FamilyDescriptor family;
  Subset star;
  std::vector<CostVector> costs;
  std::vector<Rational> weights;
  std::vector<ExtendedRational> lower;
  std::vector<ExtendedRational> upper;
  Objective objective = Objective::kLInf;

  int size() const { return static_cast<int>(element_ids.size()); }
  int num_costs() const { return static_cast<int>(costs.size()); }

  // Membership mask of the input solution.
  std::vector<char> StarMask() const;

  friend bool operator==(const Instance&, const Instance&) = default;
};

// Fills in missing bounds (lower -inf, upper +inf) and checks every
// invariant. Throws Error with kMalformedDocument, kBoundViolation,
// kNonPositiveWeight, kInvalidFamily or kStarNotInFamily.
void ValidateInstance(Instance& instance);

// Copy of `instance` keeping only cost function `cost_index`.
Instance WithSingleCost(const Instance& instance, int cost_index);

// Sum of cost[s] over s in subset; 0 for the empty set.
Rational CostOf(std::span<const Rational> cost, const Subset& subset);
Rational CostOf(const Instance& instance, int cost_index, const Subset& subset);

// c - p, elementwise.
CostVector Perturbed(std::span<const Rational> cost, const DeviationVector& p);

// max{ w(s) : p(s) != 0 }, reported as 0 when p is identically zero.
Rational HammingObjective(const DeviationVector& p,
                          std::span<const Rational> weights);

// max{ w(s) * |p(s)| }.
Rational LInfObjective(const DeviationVector& p,
                       std::span<const Rational> weights);

Rational ObjectiveValue(const Instance& instance, const DeviationVector& p);

struct FeasibilityResult {
  bool feasible = false;
  // Set when a bound l(s) <= p(s) <= u(s) fails.
  std::optional<int> violated_element;
  // Set when some solution is strictly cheaper than the input solution.
  std::optional<Subset> cheaper_solution;
  int cost_index = -1;
};

// Bounds hold and the input solution is a minimum-cost member under c^j - p
// for every cost function j.
FeasibilityResult IsFeasibleDeviation(const Instance& instance,
                                      const DeviationVector& p,
                                      const Oracle& oracle);

// Same test against an explicit list of solutions, used by the certifiers
// so they do not depend on the oracle.
FeasibilityResult IsFeasibleAgainst(const Instance& instance,
                                    const DeviationVector& p,
                                    std::span<const Subset> solutions);

// Largest weight and sum of 1/w(s).
Rational MaxWeight(const Instance& instance);
Rational InverseWeightSum(const Instance& instance);

}  // namespace invopt

#endif  // INVOPT_INSTANCE_H_
