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

#ifndef INVOPT_TESTS_FIXTURES_H_
#define INVOPT_TESTS_FIXTURES_H_

#include <string>
#include <vector>

#include "invopt/instance.h"
#include "invopt/rational.h"

namespace invopt::testing {

inline Rational Q(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline std::vector<Rational> Qs(std::initializer_list<Rational> values) {
  return values;
}

// S = {a, b}, family {{a}, {b}}, F* = {a}, c = (3, 1), w = (1, 1), no bounds.
inline Instance Ex1() {
  Instance instance;
  instance.element_ids = {"a", "b"};
  instance.family = ExplicitFamily{{{0}, {1}}};
  instance.star = {0};
  instance.costs = {{Q(3), Q(1)}};
  instance.weights = {Q(1), Q(1)};
  instance.objective = Objective::kLInf;
  ValidateInstance(instance);
  return instance;
}

// Ex1 with the Hamming objective and w = (5, 2).
inline Instance Ex2() {
  Instance instance = Ex1();
  instance.weights = {Q(5), Q(2)};
  instance.objective = Objective::kHamming;
  return instance;
}

// Ex1 with u(a) = 1 and l(b) = 0: no feasible deviation exists.
inline Instance BoundedInfeasible(Objective objective) {
  Instance instance = Ex1();
  instance.upper[0] = Q(1);
  instance.lower[1] = Q(0);
  instance.objective = objective;
  return instance;
}

}  // namespace invopt::testing

#endif  // INVOPT_TESTS_FIXTURES_H_
