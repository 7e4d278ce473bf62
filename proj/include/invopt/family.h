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

#ifndef INVOPT_FAMILY_H_
#define INVOPT_FAMILY_H_

#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "invopt/rational.h"

namespace invopt {

// A subset of the ground set as strictly increasing element indices.
using Subset = std::vector<int>;

struct ExplicitFamily {
  std::vector<Subset> sets;
  friend bool operator==(const ExplicitFamily&, const ExplicitFamily&) = default;
};

// Undirected multigraph whose edges are the ground-set elements: edge i is
// element i. Vertices are dense indices; names are kept for serialization.
struct GraphEdge {
  int tail = 0;
  int head = 0;
  friend bool operator==(const GraphEdge&, const GraphEdge&) = default;
};

struct SpanningTreeFamily {
  std::vector<std::string> vertex_names;
  std::vector<GraphEdge> edges;
  friend bool operator==(const SpanningTreeFamily&,
                         const SpanningTreeFamily&) = default;
};

// Directed acyclic graph; arc i is element i and runs tail -> head.
struct DagPathFamily {
  std::vector<std::string> vertex_names;
  std::vector<GraphEdge> arcs;
  int source = 0;
  int target = 0;
  friend bool operator==(const DagPathFamily&, const DagPathFamily&) = default;
};

struct UniformMatroidFamily {
  int rank = 1;
  friend bool operator==(const UniformMatroidFamily&,
                         const UniformMatroidFamily&) = default;
};

using FamilyDescriptor = std::variant<ExplicitFamily, SpanningTreeFamily,
                                      DagPathFamily, UniformMatroidFamily>;

enum class FamilyKind { kExplicit, kSpanningTree, kDagPath, kUniformMatroid };

FamilyKind KindOf(const FamilyDescriptor& family);
std::string_view FamilyKindName(FamilyKind kind);

inline constexpr int64_t kDefaultEnumerationLimit = 100000;

// Checks the structural invariants of `family` over a ground set of
// `num_elements` elements. Throws Error(kInvalidFamily) or
// Error(kEmptyFamily).
void ValidateFamily(const FamilyDescriptor& family, int num_elements);

// Minimum-cost member under `cost`. Costs may be negative. Among minimizers
// the lexicographically smallest index vector is returned, so equal inputs
// give equal outputs.
Subset MinCostSolution(const FamilyDescriptor& family,
                       std::span<const Rational> cost);

// Every member of the family, each as a sorted index vector. Throws
// Error(kLimitExceeded) when more than `limit` members exist.
std::vector<Subset> EnumerateFamily(const FamilyDescriptor& family,
                                    int num_elements,
                                    int64_t limit = kDefaultEnumerationLimit);

// Membership test. `subset` must be sorted.
bool Contains(const FamilyDescriptor& family, int num_elements,
              const Subset& subset);

}  // namespace invopt

#endif  // INVOPT_FAMILY_H_
