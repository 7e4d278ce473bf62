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

#include "invopt/family.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "invopt/error.h"
#include "invopt/instance.h"
#include "invopt/reference.h"

namespace invopt {
namespace {

ErrorCode CodeOf(const FamilyDescriptor& family, int n) {
  try {
    ValidateFamily(family, n);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error";
  return ErrorCode::kPreconditionViolated;
}

// K4 on vertices 0..3, edges in a fixed order.
SpanningTreeFamily CompleteGraph4() {
  SpanningTreeFamily g;
  g.vertex_names = {"0", "1", "2", "3"};
  g.edges = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  return g;
}

TEST(EnumerateFamilyTest, CayleyCount) {
  EXPECT_EQ(EnumerateFamily(CompleteGraph4(), 6).size(), 16u);
}

TEST(EnumerateFamilyTest, ParallelEdgesAndLoops) {
  SpanningTreeFamily g;
  g.vertex_names = {"x", "y"};
  g.edges = {{0, 1}, {1, 0}, {0, 0}};
  EXPECT_EQ(EnumerateFamily(g, 3), (std::vector<Subset>{{0}, {1}}));
}

TEST(EnumerateFamilyTest, DagPaths) {
  // 0 -> 1 -> 2 plus the shortcut 0 -> 2.
  DagPathFamily d;
  d.vertex_names = {"s", "m", "t"};
  d.arcs = {{0, 1}, {1, 2}, {0, 2}};
  d.source = 0;
  d.target = 2;
  std::vector<Subset> paths = EnumerateFamily(d, 3);
  std::sort(paths.begin(), paths.end());
  EXPECT_EQ(paths, (std::vector<Subset>{{0, 1}, {2}}));
}

TEST(EnumerateFamilyTest, UniformMatroidBinomial) {
  EXPECT_EQ(EnumerateFamily(UniformMatroidFamily{3}, 6).size(), 20u);
}

TEST(EnumerateFamilyTest, LimitExceeded) {
  try {
    EnumerateFamily(UniformMatroidFamily{10}, 20, 1000);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kLimitExceeded);
  }
}

TEST(ValidateFamilyTest, RejectsBadDescriptors) {
  EXPECT_EQ(CodeOf(ExplicitFamily{}, 2), ErrorCode::kEmptyFamily);
  EXPECT_EQ(CodeOf(ExplicitFamily{{{0}, {0}}}, 2), ErrorCode::kInvalidFamily);
  EXPECT_EQ(CodeOf(ExplicitFamily{{{2}}}, 2), ErrorCode::kInvalidFamily);
  EXPECT_EQ(CodeOf(UniformMatroidFamily{0}, 2), ErrorCode::kInvalidFamily);
  EXPECT_EQ(CodeOf(UniformMatroidFamily{3}, 2), ErrorCode::kInvalidFamily);

  SpanningTreeFamily disconnected;
  disconnected.vertex_names = {"a", "b", "c"};
  disconnected.edges = {{0, 1}, {1, 0}};
  EXPECT_NE(CodeOf(disconnected, 2), ErrorCode::kPreconditionViolated);

  DagPathFamily cyclic;
  cyclic.vertex_names = {"s", "t"};
  cyclic.arcs = {{0, 1}, {1, 0}};
  cyclic.target = 1;
  EXPECT_EQ(CodeOf(cyclic, 2), ErrorCode::kInvalidFamily);

  DagPathFamily unreachable;
  unreachable.vertex_names = {"s", "m", "t"};
  unreachable.arcs = {{0, 1}, {2, 1}};
  unreachable.target = 2;
  EXPECT_NE(CodeOf(unreachable, 2), ErrorCode::kPreconditionViolated);
}

TEST(ContainsTest, MatchesEnumeration) {
  const SpanningTreeFamily g = CompleteGraph4();
  const std::vector<Subset> trees = EnumerateFamily(g, 6);
  for (int bits = 0; bits < 64; ++bits) {
    Subset s;
    for (int e = 0; e < 6; ++e) {
      if (bits >> e & 1) s.push_back(e);
    }
    const bool listed = std::find(trees.begin(), trees.end(), s) != trees.end();
    EXPECT_EQ(Contains(g, 6, s), listed) << bits;
  }
}

TEST(MinCostSolutionTest, NegativeCostsOnDag) {
  DagPathFamily d;
  d.vertex_names = {"s", "m", "t"};
  d.arcs = {{0, 1}, {1, 2}, {0, 2}};
  d.target = 2;
  const std::vector<Rational> cost = {Rational(-4), Rational(1), Rational(-2)};
  EXPECT_EQ(MinCostSolution(d, cost), (Subset{0, 1}));
}

TEST(MinCostSolutionTest, TieBreakIsLexicographic) {
  const std::vector<Rational> zero(6, Rational(0));
  EXPECT_EQ(MinCostSolution(CompleteGraph4(), zero), (Subset{0, 1, 2}));
  EXPECT_EQ(MinCostSolution(UniformMatroidFamily{2}, zero), (Subset{0, 1}));
  EXPECT_EQ(MinCostSolution(ExplicitFamily{{{1}, {0, 2}}}, zero),
            (Subset{0, 2}));
}

// The oracle returns the lexicographically smallest minimizer of the
// enumerated family, on random integer costs with many ties.
class OracleAgreementTest : public ::testing::TestWithParam<FamilyKind> {};

TEST_P(OracleAgreementTest, MatchesEnumeration) {
  std::mt19937_64 rng(20261015);
  for (int round = 0; round < 200; ++round) {
    GeneratorParams params;
    params.seed = rng();
    params.kind = GetParam();
    params.n = 2 + static_cast<int>(rng() % 6);
    const Instance instance = RandomInstance(params);
    const int n = instance.size();
    const std::vector<Subset> family = EnumerateFamily(instance.family, n);

    std::vector<Rational> cost;
    for (int s = 0; s < n; ++s) {
      cost.emplace_back(static_cast<long>(rng() % 5) - 2);
    }
    Rational best = CostOf(cost, family.front());
    for (const Subset& f : family) best = std::min(best, CostOf(cost, f));
    Subset expected;
    bool found = false;
    for (const Subset& f : family) {
      if (CostOf(cost, f) == best && (!found || f < expected)) {
        expected = f;
        found = true;
      }
    }
    const Subset got = MinCostSolution(instance.family, cost);
    ASSERT_EQ(got, expected) << "round " << round;
    EXPECT_EQ(MinCostSolution(instance.family, cost), got);
  }
}

INSTANTIATE_TEST_SUITE_P(
    AllKinds, OracleAgreementTest,
    ::testing::Values(FamilyKind::kExplicit, FamilyKind::kSpanningTree,
                      FamilyKind::kDagPath, FamilyKind::kUniformMatroid),
    [](const ::testing::TestParamInfo<FamilyKind>& info) {
      return std::string(FamilyKindName(info.param));
    });

}  // namespace
}  // namespace invopt
