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

#include <gtest/gtest.h>

#include "fixtures.h"
#include "invopt/error.h"

namespace invopt {
namespace {

using ::invopt::testing::Ex1;
using ::invopt::testing::Q;

ErrorCode CodeOf(Instance instance) {
  try {
    ValidateInstance(instance);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error";
  return ErrorCode::kPreconditionViolated;
}

TEST(ValidateInstanceTest, FillsMissingBounds) {
  Instance instance;
  instance.element_ids = {"a", "b"};
  instance.family = ExplicitFamily{{{1}, {0}}};
  instance.star = {0};
  instance.costs = {{Q(1), Q(2)}};
  instance.weights = {Q(1), Q(1)};
  ValidateInstance(instance);
  ASSERT_EQ(instance.lower.size(), 2u);
  EXPECT_TRUE(instance.lower[1].is_neg_inf());
  EXPECT_TRUE(instance.upper[0].is_pos_inf());
}

TEST(ValidateInstanceTest, ErrorCodes) {
  Instance bad_weight = Ex1();
  bad_weight.weights[1] = Q(0);
  EXPECT_EQ(CodeOf(bad_weight), ErrorCode::kNonPositiveWeight);

  Instance crossed = Ex1();
  crossed.lower[0] = Q(2);
  crossed.upper[0] = Q(1);
  EXPECT_EQ(CodeOf(crossed), ErrorCode::kBoundViolation);

  Instance wrong_infinity = Ex1();
  wrong_infinity.lower[0] = ExtendedRational::PosInf();
  EXPECT_EQ(CodeOf(wrong_infinity), ErrorCode::kMalformedDocument);

  Instance outsider = Ex1();
  outsider.star = {0, 1};
  EXPECT_EQ(CodeOf(outsider), ErrorCode::kStarNotInFamily);

  Instance short_cost = Ex1();
  short_cost.costs[0].pop_back();
  EXPECT_EQ(CodeOf(short_cost), ErrorCode::kMalformedDocument);

  Instance duplicate = Ex1();
  duplicate.element_ids = {"a", "a"};
  EXPECT_EQ(CodeOf(duplicate), ErrorCode::kMalformedDocument);

  Instance empty;
  EXPECT_EQ(CodeOf(empty), ErrorCode::kMalformedDocument);
}

TEST(ObjectiveTest, Hamming) {
  const std::vector<Rational> w = {Q(5), Q(2)};
  EXPECT_EQ(HammingObjective({Q(0), Q(0)}, w), 0);
  EXPECT_EQ(HammingObjective({Q(0), Q(-2)}, w), 2);
  EXPECT_EQ(HammingObjective({Q(1, 2), Q(-2)}, w), 5);
}

TEST(ObjectiveTest, LInf) {
  const std::vector<Rational> w = {Q(1), Q(1, 2)};
  EXPECT_EQ(LInfObjective({Q(0), Q(0)}, w), 0);
  EXPECT_EQ(LInfObjective({Q(1), Q(-3)}, w), Q(3, 2));
  EXPECT_EQ(LInfObjective({Q(-2), Q(1)}, w), 2);
}

TEST(FeasibilityTest, Ex1Vectors) {
  const Instance instance = Ex1();
  const FamilyOracle oracle(instance.family);
  EXPECT_TRUE(IsFeasibleDeviation(instance, {Q(1), Q(-1)}, oracle).feasible);

  const FeasibilityResult zero =
      IsFeasibleDeviation(instance, {Q(0), Q(0)}, oracle);
  EXPECT_FALSE(zero.feasible);
  ASSERT_TRUE(zero.cheaper_solution.has_value());
  EXPECT_EQ(*zero.cheaper_solution, (Subset{1}));
}

TEST(FeasibilityTest, BoundViolationReported) {
  Instance instance = Ex1();
  instance.upper[0] = Q(1, 2);
  const FamilyOracle oracle(instance.family);
  const FeasibilityResult result =
      IsFeasibleDeviation(instance, {Q(1), Q(-1)}, oracle);
  EXPECT_FALSE(result.feasible);
  EXPECT_EQ(result.violated_element, 0);
}

TEST(FeasibilityTest, OracleAndEnumerationAgree) {
  const Instance instance = Ex1();
  const FamilyOracle oracle(instance.family);
  const std::vector<Subset> family = {{0}, {1}};
  for (long a = -3; a <= 3; ++a) {
    for (long b = -3; b <= 3; ++b) {
      const DeviationVector p = {Q(a), Q(b)};
      EXPECT_EQ(IsFeasibleDeviation(instance, p, oracle).feasible,
                IsFeasibleAgainst(instance, p, family).feasible);
    }
  }
}

TEST(InstanceHelpersTest, CostsAndWeights) {
  const Instance instance = Ex1();
  EXPECT_EQ(CostOf(instance, 0, {0, 1}), 4);
  EXPECT_EQ(CostOf(instance, 0, {}), 0);
  EXPECT_EQ(Perturbed(instance.costs[0], {Q(1), Q(-1)}),
            (CostVector{Q(2), Q(2)}));
  EXPECT_EQ(MaxWeight(instance), 1);
  EXPECT_EQ(InverseWeightSum(instance), 2);
  EXPECT_EQ(instance.StarMask(), (std::vector<char>{1, 0}));
}

}  // namespace
}  // namespace invopt
