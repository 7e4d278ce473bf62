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

#include <algorithm>
#include <numeric>
#include <optional>
#include <queue>
#include <string>
#include <utility>

#include "invopt/error.h"

namespace invopt {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

class DisjointSets {
 public:
  explicit DisjointSets(int size) : parent_(size) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int Find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  bool Union(int a, int b) {
    a = Find(a);
    b = Find(b);
    if (a == b) return false;
    parent_[std::max(a, b)] = std::min(a, b);
    return true;
  }

 private:
  std::vector<int> parent_;
};

[[noreturn]] void InvalidFamily(const std::string& message) {
  throw Error(ErrorCode::kInvalidFamily, message);
}

bool IsSortedUnique(const Subset& s) {
  return std::adjacent_find(s.begin(), s.end(), std::greater_equal<int>()) ==
         s.end();
}

void CheckEndpoints(const std::vector<GraphEdge>& edges, int num_vertices) {
  for (const GraphEdge& e : edges) {
    if (e.tail < 0 || e.tail >= num_vertices || e.head < 0 ||
        e.head >= num_vertices) {
      InvalidFamily("edge endpoint out of range");
    }
  }
}

// Elements sorted by (cost, index).
std::vector<int> OrderByCost(std::span<const Rational> cost) {
  std::vector<int> order(cost.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return cost[a] < cost[b]; });
  return order;
}

// ---------------------------------------------------------------------------
// Directed acyclic graphs.

class DagIndex {
 public:
  explicit DagIndex(const DagPathFamily& dag)
      : dag_(dag), out_(dag.vertex_names.size()) {
    const int num_vertices = static_cast<int>(dag.vertex_names.size());
    std::vector<int> indegree(num_vertices, 0);
    for (int a = 0; a < static_cast<int>(dag.arcs.size()); ++a) {
      out_[dag.arcs[a].tail].push_back(a);
      ++indegree[dag.arcs[a].head];
    }
    std::priority_queue<int, std::vector<int>, std::greater<int>> ready;
    for (int v = 0; v < num_vertices; ++v) {
      if (indegree[v] == 0) ready.push(v);
    }
    position_.assign(num_vertices, -1);
    while (!ready.empty()) {
      const int v = ready.top();
      ready.pop();
      position_[v] = static_cast<int>(order_.size());
      order_.push_back(v);
      for (int a : out_[v]) {
        if (--indegree[dag.arcs[a].head] == 0) ready.push(dag.arcs[a].head);
      }
    }
  }

  bool acyclic() const { return order_.size() == position_.size(); }
  const std::vector<int>& out_arcs(int v) const { return out_[v]; }

  // Cheapest path from `from` to `to` using arcs with allowed[a] set;
  // nullopt if none exists.
  std::optional<Rational> Segment(int from, int to,
                                  std::span<const Rational> cost,
                                  const std::vector<char>& allowed) const {
    if (from == to) return Rational(0);
    const int first = position_[from];
    const int last = position_[to];
    if (first > last) return std::nullopt;
    std::vector<std::optional<Rational>> dist(order_.size());
    dist[from] = Rational(0);
    for (int pos = first; pos < last; ++pos) {
      const int v = order_[pos];
      if (!dist[v]) continue;
      for (int a : out_[v]) {
        if (!allowed[a]) continue;
        const int w = dag_.arcs[a].head;
        if (position_[w] > last) continue;
        Rational candidate = *dist[v] + cost[a];
        if (!dist[w] || candidate < *dist[w]) dist[w] = std::move(candidate);
      }
    }
    return dist[to];
  }

  // Cheapest source-target path that uses every arc in `mandatory`, plus any
  // arcs in `allowed`.
  std::optional<Rational> ShortestThrough(std::vector<int> mandatory,
                                          std::span<const Rational> cost,
                                          const std::vector<char>& allowed)
      const {
    std::sort(mandatory.begin(), mandatory.end(), [&](int a, int b) {
      return position_[dag_.arcs[a].tail] < position_[dag_.arcs[b].tail];
    });
    Rational total = 0;
    int at = dag_.source;
    for (int a : mandatory) {
      auto leg = Segment(at, dag_.arcs[a].tail, cost, allowed);
      if (!leg) return std::nullopt;
      total += *leg + cost[a];
      at = dag_.arcs[a].head;
    }
    auto tail = Segment(at, dag_.target, cost, allowed);
    if (!tail) return std::nullopt;
    return total + *tail;
  }

 private:
  const DagPathFamily& dag_;
  std::vector<std::vector<int>> out_;
  std::vector<int> order_;
  std::vector<int> position_;
};

// Builds the lexicographically smallest optimal arc set one index at a time:
// after fixing prefix A with largest index t, every arc below t outside A is
// excluded. A shorter vector beats any extension of it, so "stop at A" is
// tried before any further arc.
Subset MinCostDagPath(const DagPathFamily& dag,
                      std::span<const Rational> cost) {
  const DagIndex index(dag);
  const int num_arcs = static_cast<int>(dag.arcs.size());
  std::vector<char> everything(num_arcs, 1);
  const std::optional<Rational> best =
      index.ShortestThrough({}, cost, everything);
  if (!best) throw Error(ErrorCode::kEmptyFamily, "target unreachable");

  Subset chosen;
  std::vector<char> none(num_arcs, 0);
  int last = -1;
  while (true) {
    if (auto exact = index.ShortestThrough(chosen, cost, none);
        exact && *exact == *best) {
      return chosen;
    }
    bool extended = false;
    for (int x = last + 1; x < num_arcs && !extended; ++x) {
      std::vector<char> allowed(num_arcs, 0);
      for (int a = x + 1; a < num_arcs; ++a) allowed[a] = 1;
      Subset trial = chosen;
      trial.push_back(x);
      if (auto through = index.ShortestThrough(trial, cost, allowed);
          through && *through == *best) {
        chosen = std::move(trial);
        last = x;
        extended = true;
      }
    }
    if (!extended) {
      // Unreachable: some optimal path always extends the current prefix.
      throw Error(ErrorCode::kInvalidFamily, "dag path tie-break failed");
    }
  }
}

void EnumerateDagPaths(const DagPathFamily& dag, const DagIndex& index,
                       int vertex, Subset& stack, std::vector<Subset>& out,
                       int64_t limit) {
  if (vertex == dag.target) {
    if (static_cast<int64_t>(out.size()) >= limit) {
      throw Error(ErrorCode::kLimitExceeded, "too many s-t paths");
    }
    Subset path = stack;
    std::sort(path.begin(), path.end());
    out.push_back(std::move(path));
    return;
  }
  for (int a : index.out_arcs(vertex)) {
    stack.push_back(a);
    EnumerateDagPaths(dag, index, dag.arcs[a].head, stack, out, limit);
    stack.pop_back();
  }
}

// ---------------------------------------------------------------------------
// Spanning trees.

void EnumerateTrees(const SpanningTreeFamily& graph, int edge,
                    const std::vector<int>& components, int picked,
                    Subset& stack, std::vector<Subset>& out, int64_t limit) {
  const int needed = static_cast<int>(graph.vertex_names.size()) - 1;
  if (picked == needed) {
    if (static_cast<int64_t>(out.size()) >= limit) {
      throw Error(ErrorCode::kLimitExceeded, "too many spanning trees");
    }
    out.push_back(stack);
    return;
  }
  const int num_edges = static_cast<int>(graph.edges.size());
  if (picked + (num_edges - edge) < needed) return;

  // Contract: take the edge if it joins two components.
  const int a = components[graph.edges[edge].tail];
  const int b = components[graph.edges[edge].head];
  if (a != b) {
    std::vector<int> merged = components;
    for (int& c : merged) {
      if (c == b) c = a;
    }
    stack.push_back(edge);
    EnumerateTrees(graph, edge + 1, merged, picked + 1, stack, out, limit);
    stack.pop_back();
  }
  // Delete: skip it.
  EnumerateTrees(graph, edge + 1, components, picked, stack, out, limit);
}

bool IsSpanningTree(const SpanningTreeFamily& graph, const Subset& subset) {
  const int num_vertices = static_cast<int>(graph.vertex_names.size());
  if (static_cast<int>(subset.size()) != num_vertices - 1) return false;
  DisjointSets sets(num_vertices);
  for (int e : subset) {
    if (!sets.Union(graph.edges[e].tail, graph.edges[e].head)) return false;
  }
  return true;
}

bool IsDagPath(const DagPathFamily& dag, const Subset& subset) {
  std::vector<int> next(dag.vertex_names.size(), -1);
  for (int a : subset) {
    int& slot = next[dag.arcs[a].tail];
    if (slot != -1) return false;
    slot = a;
  }
  size_t used = 0;
  int at = dag.source;
  while (at != dag.target) {
    if (next[at] == -1) return false;
    at = dag.arcs[next[at]].head;
    ++used;
    if (used > subset.size()) return false;
  }
  return used == subset.size();
}

int64_t Binomial(int n, int r, int64_t cap) {
  int64_t result = 1;
  for (int i = 1; i <= r; ++i) {
    result = result * (n - r + i) / i;
    if (result > cap) return cap + 1;
  }
  return result;
}

}  // namespace

FamilyKind KindOf(const FamilyDescriptor& family) {
  return static_cast<FamilyKind>(family.index());
}

std::string_view FamilyKindName(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::kExplicit:
      return "explicit";
    case FamilyKind::kSpanningTree:
      return "spanning_tree";
    case FamilyKind::kDagPath:
      return "dag_path";
    case FamilyKind::kUniformMatroid:
      return "uniform_matroid";
  }
  return "unknown";
}

void ValidateFamily(const FamilyDescriptor& family, int num_elements) {
  std::visit(
      Overloaded{
          [&](const ExplicitFamily& f) {
            if (f.sets.empty()) {
              throw Error(ErrorCode::kEmptyFamily, "explicit family is empty");
            }
            for (const Subset& s : f.sets) {
              if (!IsSortedUnique(s)) InvalidFamily("set repeats an element");
              if (!s.empty() && (s.front() < 0 || s.back() >= num_elements)) {
                InvalidFamily("set element out of range");
              }
            }
            std::vector<Subset> sorted = f.sets;
            std::sort(sorted.begin(), sorted.end());
            if (std::adjacent_find(sorted.begin(), sorted.end()) !=
                sorted.end()) {
              InvalidFamily("duplicate set in explicit family");
            }
          },
          [&](const SpanningTreeFamily& g) {
            const int num_vertices = static_cast<int>(g.vertex_names.size());
            if (num_vertices < 1) InvalidFamily("graph has no vertices");
            if (static_cast<int>(g.edges.size()) != num_elements) {
              InvalidFamily("edges must be exactly the elements");
            }
            CheckEndpoints(g.edges, num_vertices);
            DisjointSets sets(num_vertices);
            int merges = 0;
            for (const GraphEdge& e : g.edges) merges += sets.Union(e.tail, e.head);
            if (merges != num_vertices - 1) InvalidFamily("graph is disconnected");
          },
          [&](const DagPathFamily& d) {
            const int num_vertices = static_cast<int>(d.vertex_names.size());
            if (static_cast<int>(d.arcs.size()) != num_elements) {
              InvalidFamily("arcs must be exactly the elements");
            }
            CheckEndpoints(d.arcs, num_vertices);
            if (d.source < 0 || d.source >= num_vertices || d.target < 0 ||
                d.target >= num_vertices || d.source == d.target) {
              InvalidFamily("invalid source/target");
            }
            const DagIndex index(d);
            if (!index.acyclic()) InvalidFamily("graph has a directed cycle");
            std::vector<char> all(d.arcs.size(), 1);
            std::vector<Rational> zero(d.arcs.size(), Rational(0));
            if (!index.Segment(d.source, d.target, zero, all)) {
              InvalidFamily("target not reachable from source");
            }
          },
          [&](const UniformMatroidFamily& u) {
            if (u.rank < 1 || u.rank > num_elements) {
              InvalidFamily("rank must lie in [1, n]");
            }
          },
      },
      family);
}

Subset MinCostSolution(const FamilyDescriptor& family,
                       std::span<const Rational> cost) {
  return std::visit(
      Overloaded{
          [&](const ExplicitFamily& f) -> Subset {
            if (f.sets.empty()) {
              throw Error(ErrorCode::kEmptyFamily, "explicit family is empty");
            }
            const Subset* best = nullptr;
            Rational best_cost;
            for (const Subset& s : f.sets) {
              Rational c = 0;
              for (int e : s) c += cost[e];
              if (best == nullptr || c < best_cost ||
                  (c == best_cost && s < *best)) {
                best = &s;
                best_cost = std::move(c);
              }
            }
            return *best;
          },
          [&](const SpanningTreeFamily& g) -> Subset {
            // Kruskal; ties by index give the lexicographically smallest
            // optimal basis.
            DisjointSets sets(static_cast<int>(g.vertex_names.size()));
            Subset tree;
            for (int e : OrderByCost(cost)) {
              if (sets.Union(g.edges[e].tail, g.edges[e].head)) {
                tree.push_back(e);
              }
            }
            std::sort(tree.begin(), tree.end());
            return tree;
          },
          [&](const DagPathFamily& d) -> Subset {
            return MinCostDagPath(d, cost);
          },
          [&](const UniformMatroidFamily& u) -> Subset {
            std::vector<int> order = OrderByCost(cost);
            Subset basis(order.begin(), order.begin() + u.rank);
            std::sort(basis.begin(), basis.end());
            return basis;
          },
      },
      family);
}

std::vector<Subset> EnumerateFamily(const FamilyDescriptor& family,
                                    int num_elements, int64_t limit) {
  return std::visit(
      Overloaded{
          [&](const ExplicitFamily& f) -> std::vector<Subset> {
            if (static_cast<int64_t>(f.sets.size()) > limit) {
              throw Error(ErrorCode::kLimitExceeded, "explicit family too large");
            }
            return f.sets;
          },
          [&](const SpanningTreeFamily& g) -> std::vector<Subset> {
            std::vector<Subset> out;
            std::vector<int> components(g.vertex_names.size());
            std::iota(components.begin(), components.end(), 0);
            Subset stack;
            EnumerateTrees(g, 0, components, 0, stack, out, limit);
            return out;
          },
          [&](const DagPathFamily& d) -> std::vector<Subset> {
            std::vector<Subset> out;
            const DagIndex index(d);
            Subset stack;
            EnumerateDagPaths(d, index, d.source, stack, out, limit);
            return out;
          },
          [&](const UniformMatroidFamily& u) -> std::vector<Subset> {
            if (Binomial(num_elements, u.rank, limit) > limit) {
              throw Error(ErrorCode::kLimitExceeded, "too many bases");
            }
            std::vector<Subset> out;
            Subset pick(u.rank);
            std::iota(pick.begin(), pick.end(), 0);
            while (true) {
              out.push_back(pick);
              int i = u.rank - 1;
              while (i >= 0 && pick[i] == num_elements - u.rank + i) --i;
              if (i < 0) break;
              ++pick[i];
              for (int j = i + 1; j < u.rank; ++j) pick[j] = pick[j - 1] + 1;
            }
            return out;
          },
      },
      family);
}

bool Contains(const FamilyDescriptor& family, int num_elements,
              const Subset& subset) {
  if (!IsSortedUnique(subset)) return false;
  if (!subset.empty() && (subset.front() < 0 || subset.back() >= num_elements)) {
    return false;
  }
  return std::visit(
      Overloaded{
          [&](const ExplicitFamily& f) {
            return std::find(f.sets.begin(), f.sets.end(), subset) !=
                   f.sets.end();
          },
          [&](const SpanningTreeFamily& g) { return IsSpanningTree(g, subset); },
          [&](const DagPathFamily& d) { return IsDagPath(d, subset); },
          [&](const UniformMatroidFamily& u) {
            return static_cast<int>(subset.size()) == u.rank;
          },
      },
      family);
}

}  // namespace invopt
