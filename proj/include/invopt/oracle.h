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

#ifndef INVOPT_ORACLE_H_
#define INVOPT_ORACLE_H_

#include <span>

#include "invopt/family.h"
#include "invopt/rational.h"

namespace invopt {

// Black-box access to the underlying problem: a minimum-cost member of the
// solution family for an arbitrary finite cost vector. Implementations must
// be pure queries; solvers count their own calls.
class Oracle {
 public:
  virtual ~Oracle() = default;
  virtual Subset MinCost(std::span<const Rational> cost) const = 0;
};

// Oracle over one of the built-in family kinds.
class FamilyOracle : public Oracle {
 public:
  explicit FamilyOracle(const FamilyDescriptor& family) : family_(family) {}

  Subset MinCost(std::span<const Rational> cost) const override {
    return MinCostSolution(family_, cost);
  }

 private:
  const FamilyDescriptor& family_;
};

}  // namespace invopt

#endif  // INVOPT_ORACLE_H_
