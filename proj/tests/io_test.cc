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

#include "invopt/io.h"

#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "fixtures.h"
#include "invopt/error.h"
#include "invopt/hamming.h"
#include "invopt/linf.h"
#include "invopt/reference.h"

namespace invopt {
namespace {

using ::invopt::testing::Ex1;
using ::invopt::testing::Q;

std::string DataPath(const std::string& name) {
  return std::string(INVOPT_TEST_DATA) + "/" + name;
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

ErrorCode LoadError(const std::string& document) {
  try {
    LoadInstance(document);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "loaded: " << document;
  return ErrorCode::kPreconditionViolated;
}

constexpr char kEx1Body[] =
    R"("elements": ["a", "b"],
       "family": {"kind": "explicit", "sets": [["a"], ["b"]]},
       "star": ["a"],
       "costs": [{"a": "3", "b": "1"}],
       "weights": {"a": "1", "b": "1"})";

std::string Ex1With(const std::string& extra) {
  return std::string("{") + kEx1Body + extra + "}";
}

TEST(LoadInstanceTest, Ex1File) {
  const Instance loaded = LoadInstanceFile(DataPath("ex1.json"));
  EXPECT_EQ(loaded, Ex1());
}

TEST(LoadInstanceTest, DefaultsToLInf) {
  EXPECT_EQ(LoadInstance(Ex1With("")).objective, Objective::kLInf);
  EXPECT_EQ(LoadInstance(Ex1With(R"(, "objective": "hamming")")).objective,
            Objective::kHamming);
}

TEST(LoadInstanceTest, IntegerRationalsAndBounds) {
  const Instance instance =
      LoadInstance(Ex1With(R"(, "lower": {"b": -2}, "upper": {"a": "+inf"})"));
  EXPECT_EQ(instance.lower[1], ExtendedRational(Q(-2)));
  EXPECT_TRUE(instance.upper[0].is_pos_inf());
}

TEST(LoadInstanceTest, StructuredFamilies) {
  const Instance tree = LoadInstance(R"({
    "elements": ["x", "y", "z"],
    "family": {"kind": "spanning_tree",
               "edges": [[1, 2, "x"], [2, 3, "y"], [3, 1, "z"]]},
    "star": ["x", "y"],
    "costs": [{"x": "1", "y": "1", "z": "1"}],
    "weights": {"x": "1", "y": "1", "z": "1"}})");
  EXPECT_EQ(EnumerateFamily(tree.family, 3).size(), 3u);

  const Instance matroid = LoadInstance(R"({
    "elements": ["x", "y", "z"],
    "family": {"kind": "uniform_matroid", "rank": 2},
    "star": ["z", "x"],
    "costs": [{"x": "1", "y": "1", "z": "1"}],
    "weights": {"x": "1", "y": "1", "z": "1"}})");
  EXPECT_EQ(matroid.star, (Subset{0, 2}));
}

TEST(LoadInstanceTest, Errors) {
  EXPECT_EQ(LoadError("{"), ErrorCode::kMalformedDocument);
  EXPECT_EQ(LoadError("[]"), ErrorCode::kMalformedDocument);
  EXPECT_EQ(LoadError(Ex1With(R"(, "objective": "span")")),
            ErrorCode::kMalformedDocument);
  EXPECT_EQ(LoadError(Ex1With(R"(, "lower": {"q": "1"})")),
            ErrorCode::kMalformedDocument);
  EXPECT_EQ(LoadError(Ex1With(R"(, "lower": {"a": "1.5"})")),
            ErrorCode::kMalformedDocument);
  EXPECT_EQ(LoadError(Ex1With(R"(, "lower": {"a": "+inf"})")),
            ErrorCode::kMalformedDocument);
  EXPECT_EQ(LoadError(Ex1With(R"(, "lower": {"a": "2"}, "upper": {"a": "1"})")),
            ErrorCode::kBoundViolation);
  EXPECT_EQ(LoadError(R"({"elements": ["a"],
      "family": {"kind": "explicit", "sets": [["a"]]}, "star": ["a"],
      "costs": [{"a": "1"}], "weights": {}})"),
            ErrorCode::kMalformedDocument);
  EXPECT_EQ(LoadError(R"({"elements": ["a"],
      "family": {"kind": "explicit", "sets": [["a"]]}, "star": ["a"],
      "costs": [{"a": "1"}], "weights": {"a": "-1"}})"),
            ErrorCode::kNonPositiveWeight);
  EXPECT_EQ(LoadError(R"({"elements": ["a", "b"],
      "family": {"kind": "explicit", "sets": [["a"]]}, "star": ["b"],
      "costs": [{"a": "1", "b": "1"}], "weights": {"a": "1", "b": "1"}})"),
            ErrorCode::kStarNotInFamily);
  EXPECT_EQ(LoadError(R"({"elements": ["a", "b"],
      "family": {"kind": "dag_path", "source": "s", "target": "t",
                 "arcs": [["s", "t", "a"], ["t", "s", "b"]]},
      "star": ["a"],
      "costs": [{"a": "1", "b": "1"}], "weights": {"a": "1", "b": "1"}})"),
            ErrorCode::kInvalidFamily);
  EXPECT_THROW(LoadInstanceFile(DataPath("missing.json")), Error);
  EXPECT_THROW(LoadInstanceFile(DataPath("malformed.json")), Error);
}

TEST(SerializeInstanceTest, RoundTripsGeneratedInstances) {
  for (uint64_t seed = 1; seed <= 200; ++seed) {
    GeneratorParams params;
    params.seed = seed;
    params.kind = static_cast<FamilyKind>(seed % 4);
    params.n = 2 + static_cast<int>(seed % 6);
    params.k = 1 + static_cast<int>(seed % 3);
    params.bound_density = 0.4;
    const Instance instance = RandomInstance(params);
    const std::string text = SerializeInstance(instance);
    const Instance loaded = LoadInstance(text);
    EXPECT_EQ(loaded, instance) << text;
    EXPECT_EQ(SerializeInstance(loaded), text);
  }
}

TEST(SerializeReportTest, GoldenFiles) {
  for (const char* name : {"ex1", "ex2", "infeasible"}) {
    const Instance instance =
        LoadInstanceFile(DataPath(std::string(name) + ".json"));
    const FamilyOracle oracle(instance.family);
    const SolveReport report = instance.objective == Objective::kHamming
                                   ? SolveHammingMulti(instance, oracle)
                                   : SolveLinfMulti(instance, oracle);
    EXPECT_EQ(SerializeReport(instance, report, false),
              ReadFile(DataPath(std::string(name) + ".report.json")))
        << name;
  }
  const Instance lowered = LoadInstanceFile(DataPath("ex1_lower.json"));
  const FamilyOracle oracle(lowered.family);
  EXPECT_EQ(SerializeReport(lowered, SolveLinf(lowered, oracle), true),
            ReadFile(DataPath("ex1_lower.trace.json")));
}

TEST(SerializeReportTest, Deterministic) {
  const Instance instance = LoadInstanceFile(DataPath("pathway_dag.json"));
  const FamilyOracle oracle(instance.family);
  const std::string first =
      SerializeReport(instance, SolveLinf(instance, oracle), true);
  const std::string second =
      SerializeReport(instance, SolveLinf(instance, oracle), true);
  EXPECT_EQ(first, second);
}

}  // namespace
}  // namespace invopt
