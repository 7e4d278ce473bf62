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

#include "invopt/hamming.h"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "invopt/error.h"

namespace invopt {

Rational ComputeMHamming(const Instance& instance, int cost_index,
                         const Oracle& oracle) {
  const CostVector& cost = instance.costs.at(cost_index);
  const std::vector<char> in_star = instance.StarMask();
  CostVector shifted = cost;
  Rational negative_upper_sum = 0;
  for (int s = 0; s < instance.size(); ++s) {
    const ExtendedRational& u = instance.upper[s];
    const ExtendedRational& l = instance.lower[s];
    if (in_star[s] && u.is_finite() && u.value() < 0) {
      shifted[s] -= u.value();
      negative_upper_sum += u.value();
    } else if (!in_star[s] && l.is_finite() && l.value() > 0) {
      shifted[s] -= l.value();
    }
  }
  const Subset best = oracle.MinCost(shifted);
  Rational m = CostOf(cost, instance.star) - negative_upper_sum -
               CostOf(shifted, best);
  return m > 0 ? m : Rational(0);
}

bool HammingNeedsM(const Instance& instance, const Rational& delta) {
  const std::vector<char> in_star = instance.StarMask();
  for (int s = 0; s < instance.size(); ++s) {
    if (instance.weights[s] > delta) continue;
    if (in_star[s] ? instance.upper[s].is_pos_inf()
                   : instance.lower[s].is_neg_inf()) {
      return true;
    }
  }
  return false;
}

DeviationVector SpecialVectorHamming(const Instance& instance,
                                     const Rational& delta, const Rational& m) {
  const std::vector<char> in_star = instance.StarMask();
  DeviationVector p(instance.size(), Rational(0));
  for (int s = 0; s < instance.size(); ++s) {
    if (instance.weights[s] > delta) continue;
    const ExtendedRational& l = instance.lower[s];
    const ExtendedRational& u = instance.upper[s];
    if (in_star[s]) {
      p[s] = u.is_finite() ? u.value() : Clamp(m, l, u);
    } else {
      p[s] = l.is_finite() ? l.value() : Clamp(-m, l, u);
    }
  }
  return p;
}

Rational InitialThresholdHamming(const Instance& instance) {
  Rational delta = 0;
  for (int s = 0; s < instance.size(); ++s) {
    const bool forced =
        (instance.lower[s].is_finite() && instance.lower[s].value() > 0) ||
        (instance.upper[s].is_finite() && instance.upper[s].value() < 0);
    if (forced && instance.weights[s] > delta) delta = instance.weights[s];
  }
  return delta;
}

HammingFeasibility CheckFeasibilityHamming(const Instance& instance,
                                           const Oracle& oracle) {
  HammingFeasibility result;
  const Rational w_max = MaxWeight(instance);
  if (HammingNeedsM(instance, w_max)) {
    for (int j = 0; j < instance.num_costs(); ++j) {
      result.m = std::max(result.m, ComputeMHamming(instance, j, oracle));
    }
  }
  result.certificate = SpecialVectorHamming(instance, w_max, result.m);
  result.check = IsFeasibleDeviation(instance, result.certificate, oracle);
  result.feasible = result.check.feasible;
  return result;
}

SolveReport SolveHamming(const Instance& instance, const Oracle& oracle,
                         int cost_index) {
  const CountingOracle counted(oracle);
  const CostVector& cost = instance.costs.at(cost_index);
  const int n = instance.size();
  std::optional<Rational> m;

  SolveReport report;
  Rational delta = InitialThresholdHamming(instance);
  for (int i = 0;; ++i) {
    if (i > n + 1) {
      throw Error(ErrorCode::kIterationCapExceeded,
                  "threshold search exceeded n + 2 rounds");
    }
    if (!m && HammingNeedsM(instance, delta)) {
      m = ComputeMHamming(instance, cost_index, counted);
    }
    DeviationVector p = SpecialVectorHamming(instance, delta, m.value_or(0));
    const CostVector current = Perturbed(cost, p);

    TraceEntry entry;
    entry.index = i;
    entry.parameter = delta;
    entry.challenger = counted.MinCost(current);
    entry.star_cost = CostOf(current, instance.star);
    entry.challenger_cost = CostOf(current, entry.challenger);
    std::optional<Rational> next_threshold;
    for (const Rational& w : instance.weights) {
      if (w > delta) {
        ++entry.active_set_size;
        if (!next_threshold || w < *next_threshold) next_threshold = w;
      }
    }
    const bool improvable = entry.star_cost > entry.challenger_cost;
    report.trace.push_back(std::move(entry));

    if (!improvable) {
      report.status = SolveStatus::kOptimal;
      report.objective_value = HammingObjective(p, instance.weights);
      report.parameter = delta;
      report.deviation = std::move(p);
      break;
    }
    if (!next_threshold) {
      report.status = SolveStatus::kInfeasible;
      break;
    }
    delta = *next_threshold;
  }
  report.oracle_calls = counted.calls();
  return report;
}

SolveReport SolveHammingMulti(const Instance& instance, const Oracle& oracle) {
  if (instance.num_costs() == 1) return SolveHamming(instance, oracle, 0);
  const CountingOracle counted(oracle);
  SolveReport combined;
  Rational delta = 0;
  for (int j = 0; j < instance.num_costs(); ++j) {
    SolveReport single = SolveHamming(instance, counted, j);
    combined.trace.insert(combined.trace.end(), single.trace.begin(),
                          single.trace.end());
    if (!single.optimal()) {
      combined.status = SolveStatus::kInfeasible;
      combined.oracle_calls = counted.calls();
      return combined;
    }
    delta = std::max(delta, single.parameter);
  }
  Rational m = 0;
  if (HammingNeedsM(instance, delta)) {
    for (int j = 0; j < instance.num_costs(); ++j) {
      m = std::max(m, ComputeMHamming(instance, j, counted));
    }
  }
  DeviationVector p = SpecialVectorHamming(instance, delta, m);
  if (!IsFeasibleDeviation(instance, p, counted).feasible) {
    throw std::logic_error("combined threshold vector is not feasible");
  }
  combined.status = SolveStatus::kOptimal;
  combined.objective_value = HammingObjective(p, instance.weights);
  combined.parameter = delta;
  combined.deviation = std::move(p);
  combined.oracle_calls = counted.calls();
  return combined;
}

}  // namespace invopt
