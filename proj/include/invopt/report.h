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

#ifndef INVOPT_REPORT_H_
#define INVOPT_REPORT_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "invopt/family.h"
#include "invopt/instance.h"
#include "invopt/rational.h"

namespace invopt {

enum class SolveStatus { kOptimal, kInfeasible };

// One challenger query of a Newton-type solve: the parameter in force, the
// solution the oracle returned and the two costs compared.
struct TraceEntry {
  int index = 0;
  Rational parameter;
  Subset challenger;
  Rational star_cost;
  Rational challenger_cost;
  int active_set_size = 0;
  // L-inf only: 1/w((F_i \ F*) & S_i) - 1/w((F_i & F*) & S_i).
  std::optional<Rational> potential;
  // L-inf only, from the second entry on: cost of the previous challenger
  // under the current costs.
  std::optional<Rational> previous_challenger_cost;
};

struct SolveReport {
  SolveStatus status = SolveStatus::kInfeasible;
  std::optional<DeviationVector> deviation;
  Rational objective_value = 0;
  // Final threshold (Hamming) or d (L-inf) when optimal.
  Rational parameter = 0;
  std::vector<TraceEntry> trace;
  int64_t oracle_calls = 0;

  bool optimal() const { return status == SolveStatus::kOptimal; }
};

// Counts queries and forwards them.
class CountingOracle : public Oracle {
 public:
  explicit CountingOracle(const Oracle& inner) : inner_(inner) {}
  Subset MinCost(std::span<const Rational> cost) const override {
    ++calls_;
    return inner_.MinCost(cost);
  }
  int64_t calls() const { return calls_; }

 private:
  const Oracle& inner_;
  mutable int64_t calls_ = 0;
};

}  // namespace invopt

#endif  // INVOPT_REPORT_H_
