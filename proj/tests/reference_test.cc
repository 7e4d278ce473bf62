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

#include "invopt/reference.h"

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "fixtures.h"
#include "invopt/error.h"
#include "invopt/hamming.h"
#include "invopt/linf.h"

namespace invopt {
namespace {

using ::invopt::testing::BoundedInfeasible;
using ::invopt::testing::Ex1;
using ::invopt::testing::Ex2;
using ::invopt::testing::Q;

TEST(BruteForceHammingTest, Examples) {
  const ReferenceResult ex2 = BruteForceHamming(Ex2());
  ASSERT_TRUE(ex2.optimal());
  EXPECT_EQ(ex2.optimal_value, 2);
  EXPECT_EQ(ex2.vector, (DeviationVector{Q(0), Q(-2)}));

  Instance optimal = Ex2();
  optimal.costs = {{Q(1), Q(3)}};
  EXPECT_EQ(BruteForceHamming(optimal).optimal_value, 0);

  EXPECT_FALSE(BruteForceHamming(BoundedInfeasible(Objective::kHamming))
                   .optimal());
}

TEST(BruteForceLinfTest, Examples) {
  const ReferenceResult ex1 = BruteForceLinf(Ex1());
  ASSERT_TRUE(ex1.optimal());
  EXPECT_EQ(ex1.optimal_value, 1);

  Instance lowered = Ex1();
  lowered.lower[1] = Q(-1, 2);
  const ReferenceResult low = BruteForceLinf(lowered);
  ASSERT_TRUE(low.optimal());
  EXPECT_EQ(low.optimal_value, Q(3, 2));
  EXPECT_EQ(low.vector, (DeviationVector{Q(3, 2), Q(-1, 2)}));

  EXPECT_FALSE(BruteForceLinf(BoundedInfeasible(Objective::kLInf)).optimal());
}

TEST(CheckMinmaxTheoremTest, Examples) {
  const MinmaxCheck ex1 = CheckMinmaxTheorem(Ex1());
  EXPECT_TRUE(ex1.holds);
  EXPECT_EQ(ex1.lhs, 1);
  EXPECT_EQ(ex1.rhs, 1);

  Instance optimal = Ex1();
  optimal.costs = {{Q(1), Q(3)}, {Q(0), Q(5)}};
  const MinmaxCheck zero = CheckMinmaxTheorem(optimal);
  EXPECT_TRUE(zero.holds);
  EXPECT_EQ(zero.lhs, 0);
}

// Below the reported optimum no candidate vector of that value is feasible.
TEST(BruteForceTest, StrictMinimalitySpotCheck) {
  std::mt19937_64 rng(99);
  int checked = 0;
  for (uint64_t seed = 1; checked < 100; ++seed) {
    GeneratorParams params;
    params.seed = seed;
    params.kind = static_cast<FamilyKind>(seed % 4);
    params.n = 2 + static_cast<int>(seed % 6);
    params.bound_density = 0.3;
    const Instance instance = RandomInstance(params);
    const std::vector<Subset> family =
        EnumerateFamily(instance.family, instance.size());
    const ReferenceResult linf = BruteForceLinf(instance);
    const ReferenceResult hamming = BruteForceHamming(instance);
    if (!linf.optimal() || linf.parameter == 0) continue;
    ++checked;
    const Rational m = HammingMByEnumeration(instance, family);
    for (int i = 0; i < 20; ++i) {
      const Rational fraction(static_cast<long>(rng() % 1000), 1000);
      const Rational d = linf.parameter * fraction;
      const DeviationVector p = SpecialVectorLinf(instance, d);
      EXPECT_FALSE(LInfObjective(p, instance.weights) <= d &&
                   IsFeasibleAgainst(instance, p, family).feasible)
          << seed << " d " << ToString(d);
      if (hamming.optimal() && hamming.parameter > 0) {
        const Rational t = hamming.parameter * fraction;
        EXPECT_FALSE(IsFeasibleAgainst(
                         instance, SpecialVectorHamming(instance, t, m), family)
                         .feasible)
            << seed << " threshold " << ToString(t);
      }
    }
  }
}

TEST(RandomInstanceTest, Deterministic) {
  GeneratorParams params;
  params.seed = 1;
  params.kind = FamilyKind::kSpanningTree;
  params.n = 6;
  params.k = 2;
  EXPECT_EQ(RandomInstance(params), RandomInstance(params));
}

TEST(RandomInstanceTest, ZeroDensityIsUnconstrained) {
  GeneratorParams params;
  params.bound_density = 0;
  params.n = 7;
  for (uint64_t seed = 1; seed <= 20; ++seed) {
    params.seed = seed;
    const Instance instance = RandomInstance(params);
    for (int s = 0; s < instance.size(); ++s) {
      EXPECT_TRUE(instance.lower[s].is_neg_inf());
      EXPECT_TRUE(instance.upper[s].is_pos_inf());
    }
  }
}

TEST(RandomInstanceTest, SmallExplicitShape) {
  GeneratorParams params;
  params.n = 2;
  params.min_family_size = 2;
  params.max_family_size = 2;
  const Instance instance = RandomInstance(params);
  EXPECT_EQ(instance.size(), 2);
  EXPECT_EQ(std::get<ExplicitFamily>(instance.family).sets.size(), 2u);
}

TEST(RandomInstanceTest, Coverage) {
  std::set<FamilyKind> kinds;
  std::set<int> ks;
  bool feasible = false;
  bool infeasible = false;
  for (uint64_t seed = 1; seed <= 1000; ++seed) {
    GeneratorParams params;
    params.seed = seed;
    params.kind = static_cast<FamilyKind>(seed % 4);
    params.n = 2 + static_cast<int>(seed % 6);
    params.k = 1 + static_cast<int>((seed / 4) % 3);
    params.bound_density = 0.5;
    const Instance instance = RandomInstance(params);
    kinds.insert(KindOf(instance.family));
    ks.insert(instance.num_costs());
    (BruteForceLinf(instance).optimal() ? feasible : infeasible) = true;
  }
  EXPECT_EQ(kinds.size(), 4u);
  EXPECT_EQ(ks, (std::set<int>{1, 2, 3}));
  EXPECT_TRUE(feasible);
  EXPECT_TRUE(infeasible);
}

TEST(RandomInstanceTest, RejectsBadParams) {
  GeneratorParams params;
  params.n = 1;
  EXPECT_THROW(RandomInstance(params), Error);
  params.n = 4;
  params.k = 4;
  EXPECT_THROW(RandomInstance(params), Error);
  params.k = 1;
  params.bound_density = 1.5;
  EXPECT_THROW(RandomInstance(params), Error);
}

}  // namespace
}  // namespace invopt
