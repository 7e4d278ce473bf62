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

#include "invopt/linf.h"

#include <algorithm>
#include <stdexcept>

#include "invopt/error.h"

namespace invopt {

DeviationVector SpecialVectorLinf(const Instance& instance,
                                  const Rational& delta) {
  const std::vector<char> in_star = instance.StarMask();
  DeviationVector p(instance.size());
  for (int s = 0; s < instance.size(); ++s) {
    Rational step = delta / instance.weights[s];
    if (!in_star[s]) step = -step;
    p[s] = Clamp(step, instance.lower[s], instance.upper[s]);
  }
  return p;
}

Rational InitialD0(const Instance& instance) {
  Rational d = 0;
  for (int s = 0; s < instance.size(); ++s) {
    const Rational& w = instance.weights[s];
    const ExtendedRational& l = instance.lower[s];
    const ExtendedRational& u = instance.upper[s];
    if (l.is_finite() && l.value() > 0) d = std::max<Rational>(d, w * l.value());
    if (u.is_finite() && u.value() < 0) d = std::max<Rational>(d, -w * u.value());
  }
  return d;
}

Subset ActiveSet(const Instance& instance, const Rational& d) {
  const std::vector<char> in_star = instance.StarMask();
  Subset active;
  for (int s = 0; s < instance.size(); ++s) {
    const Rational& w = instance.weights[s];
    if (in_star[s]) {
      const ExtendedRational& u = instance.upper[s];
      if (!u.is_finite() || d < w * u.value()) active.push_back(s);
    } else {
      const ExtendedRational& l = instance.lower[s];
      if (!l.is_finite() || d < -w * l.value()) active.push_back(s);
    }
  }
  return active;
}

Rational Potential(const Instance& instance, const Subset& challenger,
                   const Subset& active) {
  const std::vector<char> in_star = instance.StarMask();
  std::vector<char> in_challenger(instance.size(), 0);
  for (int s : challenger) in_challenger[s] = 1;
  Rational potential = 0;
  for (int s : active) {
    if (!in_challenger[s]) continue;
    if (in_star[s]) {
      potential -= 1 / instance.weights[s];
    } else {
      potential += 1 / instance.weights[s];
    }
  }
  return potential;
}

std::optional<Rational> StepIncrement(const Instance& instance,
                                      const LInfState& state) {
  const std::vector<char> in_star = instance.StarMask();
  std::vector<char> in_challenger(instance.size(), 0);
  for (int s : state.challenger) in_challenger[s] = 1;

  Rational separating_inverse_weight = 0;
  std::optional<Rational> cap;
  for (int s : state.active) {
    const Rational& w = instance.weights[s];
    if (in_star[s] != in_challenger[s]) separating_inverse_weight += 1 / w;
    Rational room;
    if (in_star[s]) {
      if (!instance.upper[s].is_finite()) continue;
      room = w * instance.upper[s].value() - state.d;
    } else {
      if (!instance.lower[s].is_finite()) continue;
      room = -w * instance.lower[s].value() - state.d;
    }
    if (!cap || room < *cap) cap = std::move(room);
  }
  if (separating_inverse_weight == 0) return std::nullopt;
  Rational step =
      (state.star_cost - state.challenger_cost) / separating_inverse_weight;
  if (cap && *cap < step) step = *cap;
  return step;
}

Integer IterationCapLinf(const Instance& instance) {
  Integer lcm = 1;
  for (const Rational& w : instance.weights) {
    // 1/w = den/num in lowest terms.
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), w.get_num_mpz_t());
  }
  const Rational inverse_sum = InverseWeightSum(instance);
  // D * ||w||_{-1} is an integer because D clears every denominator.
  const Rational scaled = Rational(lcm) * inverse_sum;
  return Integer(instance.size()) * (2 * Floor(scaled) + 1) + 2;
}

SolveReport SolveLinf(const Instance& instance, const Oracle& oracle,
                      int cost_index) {
  const CountingOracle counted(oracle);
  const CostVector& cost = instance.costs.at(cost_index);
  const Integer cap = IterationCapLinf(instance);

  SolveReport report;
  Rational d = InitialD0(instance);
  std::optional<Subset> previous;
  for (int i = 0;; ++i) {
    if (Integer(i) > cap) {
      throw Error(ErrorCode::kIterationCapExceeded,
                  "L-inf search exceeded its iteration cap");
    }
    DeviationVector p = SpecialVectorLinf(instance, d);
    const CostVector current = Perturbed(cost, p);

    LInfState state;
    state.d = d;
    state.challenger = counted.MinCost(current);
    state.active = ActiveSet(instance, d);
    state.star_cost = CostOf(current, instance.star);
    state.challenger_cost = CostOf(current, state.challenger);

    TraceEntry entry;
    entry.index = i;
    entry.parameter = d;
    entry.challenger = state.challenger;
    entry.star_cost = state.star_cost;
    entry.challenger_cost = state.challenger_cost;
    entry.active_set_size = static_cast<int>(state.active.size());
    entry.potential = Potential(instance, state.challenger, state.active);
    if (previous) entry.previous_challenger_cost = CostOf(current, *previous);
    report.trace.push_back(std::move(entry));

    if (state.star_cost <= state.challenger_cost) {
      report.status = SolveStatus::kOptimal;
      const bool zero = std::all_of(p.begin(), p.end(),
                                    [](const Rational& v) { return v == 0; });
      report.objective_value = zero ? Rational(0) : d;
      report.parameter = d;
      report.deviation = std::move(p);
      break;
    }
    const std::optional<Rational> step = StepIncrement(instance, state);
    if (!step) {
      report.status = SolveStatus::kInfeasible;
      break;
    }
    d += *step;
    previous = std::move(state.challenger);
  }
  report.oracle_calls = counted.calls();
  return report;
}

SolveReport SolveLinfMulti(const Instance& instance, const Oracle& oracle) {
  if (instance.num_costs() == 1) return SolveLinf(instance, oracle, 0);
  const CountingOracle counted(oracle);
  SolveReport combined;
  Rational d = 0;
  for (int j = 0; j < instance.num_costs(); ++j) {
    SolveReport single = SolveLinf(instance, counted, j);
    combined.trace.insert(combined.trace.end(), single.trace.begin(),
                          single.trace.end());
    if (!single.optimal()) {
      combined.status = SolveStatus::kInfeasible;
      combined.oracle_calls = counted.calls();
      return combined;
    }
    d = std::max(d, single.parameter);
  }
  DeviationVector p = SpecialVectorLinf(instance, d);
  if (!IsFeasibleDeviation(instance, p, counted).feasible) {
    throw std::logic_error("combined L-inf vector is not feasible");
  }
  const bool zero =
      std::all_of(p.begin(), p.end(), [](const Rational& v) { return v == 0; });
  combined.status = SolveStatus::kOptimal;
  combined.objective_value = zero ? Rational(0) : d;
  combined.parameter = d;
  combined.deviation = std::move(p);
  combined.oracle_calls = counted.calls();
  return combined;
}

namespace {

bool IsUnconstrained(const Instance& instance) {
  for (int s = 0; s < instance.size(); ++s) {
    if (instance.lower[s].is_finite() || instance.upper[s].is_finite()) {
      return false;
    }
  }
  return true;
}

}  // namespace

Rational MinmaxValue(const Instance& instance, int64_t limit) {
  if (!IsUnconstrained(instance)) {
    throw Error(ErrorCode::kConstrainedInstance,
                "min-max value needs l = -inf and u = +inf");
  }
  const std::vector<Subset> family =
      EnumerateFamily(instance.family, instance.size(), limit);
  const std::vector<char> in_star = instance.StarMask();
  Rational best = 0;
  for (const Subset& f : family) {
    if (f == instance.star) continue;
    std::vector<char> in_f(instance.size(), 0);
    for (int s : f) in_f[s] = 1;
    Rational inverse_weight = 0;
    for (int s = 0; s < instance.size(); ++s) {
      if (in_star[s] != in_f[s]) inverse_weight += 1 / instance.weights[s];
    }
    for (const CostVector& c : instance.costs) {
      Rational ratio = (CostOf(c, instance.star) - CostOf(c, f)) / inverse_weight;
      if (ratio > best) best = std::move(ratio);
    }
  }
  return best;
}

Rational FeasibilityBoundM(const Instance& instance, int64_t limit) {
  const std::vector<char> in_star = instance.StarMask();
  Rational m = 0;
  for (int s = 0; s < instance.size(); ++s) {
    const Rational& w = instance.weights[s];
    if (in_star[s] && instance.upper[s].is_finite()) {
      m = std::max<Rational>(m, w * abs(instance.upper[s].value()));
    }
    if (!in_star[s] && instance.lower[s].is_finite()) {
      m = std::max<Rational>(m, w * abs(instance.lower[s].value()));
    }
  }
  const std::vector<Subset> family =
      EnumerateFamily(instance.family, instance.size(), limit);
  for (const Subset& f : family) {
    std::vector<char> in_f(instance.size(), 0);
    for (int s : f) in_f[s] = 1;
    Rational divisor = 0;
    Rational bound_shift = 0;
    for (int s = 0; s < instance.size(); ++s) {
      if (in_star[s] && !in_f[s]) {
        if (instance.upper[s].is_finite()) {
          bound_shift -= instance.upper[s].value();
        } else {
          divisor += 1 / instance.weights[s];
        }
      } else if (!in_star[s] && in_f[s]) {
        if (instance.lower[s].is_finite()) {
          bound_shift += instance.lower[s].value();
        } else {
          divisor += 1 / instance.weights[s];
        }
      }
    }
    if (divisor == 0) continue;  // W(F) = 0 contributes 0.
    for (const CostVector& c : instance.costs) {
      Rational term =
          (CostOf(c, instance.star) - CostOf(c, f) + bound_shift) / divisor;
      if (term > m) m = std::move(term);
    }
  }
  return m;
}

DeviationVector RoundIntegral(const Instance& instance, const Rational& delta) {
  auto fail = [](const char* what) {
    throw Error(ErrorCode::kPreconditionViolated, what);
  };
  for (int s = 0; s < instance.size(); ++s) {
    if (instance.weights[s] != 1) fail("integral rounding needs unit weights");
    for (const ExtendedRational* b : {&instance.lower[s], &instance.upper[s]}) {
      if (b->is_finite() && !IsIntegral(b->value())) fail("non-integral bound");
    }
    for (const CostVector& c : instance.costs) {
      if (!IsIntegral(c[s])) fail("non-integral cost");
    }
  }
  if (delta < 0) fail("delta must be nonnegative");
  return SpecialVectorLinf(instance, Rational(Ceil(delta)));
}

}  // namespace invopt
