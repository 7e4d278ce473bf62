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

#include "invopt/instance.h"

#include <algorithm>
#include <set>
#include <string>

#include "invopt/error.h"

namespace invopt {

std::string_view ObjectiveName(Objective objective) {
  return objective == Objective::kHamming ? "hamming" : "linf";
}

std::vector<char> Instance::StarMask() const {
  std::vector<char> mask(element_ids.size(), 0);
  for (int s : star) mask[s] = 1;
  return mask;
}

void ValidateInstance(Instance& instance) {
  const int n = instance.size();
  auto malformed = [](const std::string& message) {
    throw Error(ErrorCode::kMalformedDocument, message);
  };
  if (n == 0) malformed("ground set is empty");
  std::set<std::string> ids(instance.element_ids.begin(),
                            instance.element_ids.end());
  if (static_cast<int>(ids.size()) != n) malformed("duplicate element id");
  if (instance.costs.empty()) malformed("at least one cost function required");
  for (const CostVector& c : instance.costs) {
    if (static_cast<int>(c.size()) != n) malformed("cost vector size mismatch");
  }
  if (static_cast<int>(instance.weights.size()) != n) {
    malformed("weight vector size mismatch");
  }
  if (instance.lower.empty()) {
    instance.lower.assign(n, ExtendedRational::NegInf());
  }
  if (instance.upper.empty()) {
    instance.upper.assign(n, ExtendedRational::PosInf());
  }
  if (static_cast<int>(instance.lower.size()) != n ||
      static_cast<int>(instance.upper.size()) != n) {
    malformed("bound vector size mismatch");
  }
  for (int s = 0; s < n; ++s) {
    const std::string& id = instance.element_ids[s];
    if (instance.weights[s] <= 0) {
      throw Error(ErrorCode::kNonPositiveWeight, "weight of " + id);
    }
    if (instance.lower[s].is_pos_inf() || instance.upper[s].is_neg_inf()) {
      malformed("bound of " + id + " has the wrong infinity");
    }
    if (instance.lower[s] > instance.upper[s]) {
      throw Error(ErrorCode::kBoundViolation, "lower > upper for " + id);
    }
  }
  ValidateFamily(instance.family, n);
  Subset& star = instance.star;
  std::sort(star.begin(), star.end());
  if (std::adjacent_find(star.begin(), star.end()) != star.end()) {
    malformed("input solution repeats an element");
  }
  if (!star.empty() && (star.front() < 0 || star.back() >= n)) {
    malformed("input solution element out of range");
  }
  if (!Contains(instance.family, n, star)) {
    throw Error(ErrorCode::kStarNotInFamily,
                "input solution is not a member of the family");
  }
}

Instance WithSingleCost(const Instance& instance, int cost_index) {
  Instance single = instance;
  single.costs = {instance.costs.at(cost_index)};
  return single;
}

Rational CostOf(std::span<const Rational> cost, const Subset& subset) {
  Rational total = 0;
  for (int s : subset) total += cost[s];
  return total;
}

Rational CostOf(const Instance& instance, int cost_index,
                const Subset& subset) {
  return CostOf(instance.costs.at(cost_index), subset);
}

CostVector Perturbed(std::span<const Rational> cost, const DeviationVector& p) {
  CostVector out(cost.size());
  for (size_t s = 0; s < cost.size(); ++s) out[s] = cost[s] - p[s];
  return out;
}

Rational HammingObjective(const DeviationVector& p,
                          std::span<const Rational> weights) {
  Rational best = 0;
  for (size_t s = 0; s < p.size(); ++s) {
    if (p[s] != 0 && weights[s] > best) best = weights[s];
  }
  return best;
}

Rational LInfObjective(const DeviationVector& p,
                       std::span<const Rational> weights) {
  Rational best = 0;
  for (size_t s = 0; s < p.size(); ++s) {
    Rational v = weights[s] * abs(p[s]);
    if (v > best) best = std::move(v);
  }
  return best;
}

Rational ObjectiveValue(const Instance& instance, const DeviationVector& p) {
  return instance.objective == Objective::kHamming
             ? HammingObjective(p, instance.weights)
             : LInfObjective(p, instance.weights);
}

namespace {

std::optional<int> FirstBoundViolation(const Instance& instance,
                                       const DeviationVector& p) {
  for (int s = 0; s < instance.size(); ++s) {
    const ExtendedRational value(p[s]);
    if (value < instance.lower[s] || value > instance.upper[s]) return s;
  }
  return std::nullopt;
}

}  // namespace

FeasibilityResult IsFeasibleDeviation(const Instance& instance,
                                      const DeviationVector& p,
                                      const Oracle& oracle) {
  FeasibilityResult result;
  if ((result.violated_element = FirstBoundViolation(instance, p))) {
    return result;
  }
  for (int j = 0; j < instance.num_costs(); ++j) {
    const CostVector modified = Perturbed(instance.costs[j], p);
    Subset challenger = oracle.MinCost(modified);
    if (CostOf(modified, instance.star) > CostOf(modified, challenger)) {
      result.cheaper_solution = std::move(challenger);
      result.cost_index = j;
      return result;
    }
  }
  result.feasible = true;
  return result;
}

FeasibilityResult IsFeasibleAgainst(const Instance& instance,
                                    const DeviationVector& p,
                                    std::span<const Subset> solutions) {
  FeasibilityResult result;
  if ((result.violated_element = FirstBoundViolation(instance, p))) {
    return result;
  }
  for (int j = 0; j < instance.num_costs(); ++j) {
    const CostVector modified = Perturbed(instance.costs[j], p);
    const Rational star_cost = CostOf(modified, instance.star);
    for (const Subset& f : solutions) {
      if (CostOf(modified, f) < star_cost) {
        result.cheaper_solution = f;
        result.cost_index = j;
        return result;
      }
    }
  }
  result.feasible = true;
  return result;
}

Rational MaxWeight(const Instance& instance) {
  return *std::max_element(instance.weights.begin(), instance.weights.end());
}

Rational InverseWeightSum(const Instance& instance) {
  Rational total = 0;
  for (const Rational& w : instance.weights) total += 1 / w;
  return total;
}

}  // namespace invopt
