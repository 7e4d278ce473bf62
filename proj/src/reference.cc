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

#include <algorithm>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>

#include "invopt/error.h"
#include "invopt/linf.h"

namespace invopt {
namespace {

std::vector<char> Mask(int n, const Subset& subset) {
  std::vector<char> mask(n, 0);
  for (int s : subset) mask[s] = 1;
  return mask;
}

// Threshold vector, written out independently of the solver module.
DeviationVector ThresholdVector(const Instance& instance, const Rational& delta,
                                const Rational& m) {
  const std::vector<char> in_star = Mask(instance.size(), instance.star);
  DeviationVector p(instance.size(), Rational(0));
  for (int s = 0; s < instance.size(); ++s) {
    if (instance.weights[s] > delta) continue;
    const ExtendedRational& l = instance.lower[s];
    const ExtendedRational& u = instance.upper[s];
    if (in_star[s]) {
      if (u.is_finite()) {
        p[s] = u.value();
      } else {
        p[s] = (l.is_finite() && l.value() > m) ? l.value() : m;
      }
    } else {
      if (l.is_finite()) {
        p[s] = l.value();
      } else {
        p[s] = (u.is_finite() && u.value() < -m) ? u.value() : Rational(-m);
      }
    }
  }
  return p;
}

// Coordinate s of the clamped L-inf vector at parameter delta.
Rational ClampedCoordinate(const Instance& instance, bool in_star, int s,
                           const Rational& delta) {
  Rational x = delta / instance.weights[s];
  if (!in_star) x = -x;
  const ExtendedRational& l = instance.lower[s];
  const ExtendedRational& u = instance.upper[s];
  if (l.is_finite() && x < l.value()) return l.value();
  if (u.is_finite() && x > u.value()) return u.value();
  return x;
}

// Smallest d >= floor with gap(d) <= 0 for one competitor F, where
// gap(d) = c(F*) - c(F) - sum_{F*\F} p^d + sum_{F\F*} p^d is
// non-increasing and piecewise linear. nullopt if it stays positive.
std::optional<Rational> SmallestRoot(const Instance& instance,
                                     const std::vector<char>& in_star,
                                     const Subset& competitor,
                                     const CostVector& cost,
                                     const Rational& floor) {
  const std::vector<char> in_f = Mask(instance.size(), competitor);
  std::vector<int> star_only;
  std::vector<int> f_only;
  for (int s = 0; s < instance.size(); ++s) {
    if (in_star[s] && !in_f[s]) star_only.push_back(s);
    if (!in_star[s] && in_f[s]) f_only.push_back(s);
  }
  const Rational base = CostOf(cost, instance.star) - CostOf(cost, competitor);
  auto gap = [&](const Rational& d) {
    Rational g = base;
    for (int s : star_only) g -= ClampedCoordinate(instance, true, s, d);
    for (int s : f_only) g += ClampedCoordinate(instance, false, s, d);
    return g;
  };

  std::set<Rational> breakpoints;
  auto add = [&](const Rational& b) {
    if (b > floor) breakpoints.insert(b);
  };
  for (const std::vector<int>* side : {&star_only, &f_only}) {
    for (int s : *side) {
      const Rational& w = instance.weights[s];
      const Rational sign = side == &star_only ? 1 : -1;
      if (instance.lower[s].is_finite()) add(sign * w * instance.lower[s].value());
      if (instance.upper[s].is_finite()) add(sign * w * instance.upper[s].value());
    }
  }

  Rational lo = floor;
  Rational g_lo = gap(lo);
  if (g_lo <= 0) return lo;
  for (const Rational& b : breakpoints) {
    const Rational g_b = gap(b);
    if (g_b <= 0) return Rational(lo + g_lo * (b - lo) / (g_lo - g_b));
    lo = b;
    g_lo = g_b;
  }
  const Rational slope = gap(lo + 1) - g_lo;
  if (slope >= 0) return std::nullopt;
  return Rational(lo - g_lo / slope);
}

}  // namespace

Rational HammingMByEnumeration(const Instance& instance,
                               std::span<const Subset> family) {
  const std::vector<char> in_star = Mask(instance.size(), instance.star);
  Rational m = 0;
  for (const Subset& f : family) {
    const std::vector<char> in_f = Mask(instance.size(), f);
    Rational shift = 0;
    for (int s = 0; s < instance.size(); ++s) {
      if (in_star[s] && !in_f[s] && instance.upper[s].is_finite() &&
          instance.upper[s].value() < 0) {
        shift -= instance.upper[s].value();
      }
      if (!in_star[s] && in_f[s] && instance.lower[s].is_finite() &&
          instance.lower[s].value() > 0) {
        shift += instance.lower[s].value();
      }
    }
    for (const CostVector& c : instance.costs) {
      Rational value = CostOf(c, instance.star) - CostOf(c, f) + shift;
      if (value > m) m = std::move(value);
    }
  }
  return m;
}

ReferenceResult BruteForceHamming(const Instance& instance, int64_t limit) {
  const std::vector<Subset> family =
      EnumerateFamily(instance.family, instance.size(), limit);
  const Rational m = HammingMByEnumeration(instance, family);
  std::set<Rational> thresholds(instance.weights.begin(),
                                instance.weights.end());
  thresholds.insert(Rational(0));

  ReferenceResult result;
  for (const Rational& delta : thresholds) {
    DeviationVector p = ThresholdVector(instance, delta, m);
    if (IsFeasibleAgainst(instance, p, family).feasible) {
      result.status = SolveStatus::kOptimal;
      result.parameter = delta;
      result.optimal_value = HammingObjective(p, instance.weights);
      result.vector = std::move(p);
      return result;
    }
  }
  return result;
}

ReferenceResult BruteForceLinf(const Instance& instance, int64_t limit) {
  const std::vector<Subset> family =
      EnumerateFamily(instance.family, instance.size(), limit);
  const std::vector<char> in_star = Mask(instance.size(), instance.star);

  // No vector within the bounds has norm below the forced magnitude d0.
  Rational floor = 0;
  for (int s = 0; s < instance.size(); ++s) {
    const Rational& w = instance.weights[s];
    if (instance.lower[s].is_finite() && instance.lower[s].value() > 0) {
      floor = std::max<Rational>(floor, w * instance.lower[s].value());
    }
    if (instance.upper[s].is_finite() && instance.upper[s].value() < 0) {
      floor = std::max<Rational>(floor, -w * instance.upper[s].value());
    }
  }

  ReferenceResult result;
  Rational d = floor;
  for (const CostVector& cost : instance.costs) {
    for (const Subset& f : family) {
      const std::optional<Rational> root =
          SmallestRoot(instance, in_star, f, cost, floor);
      if (!root) return result;
      if (*root > d) d = *root;
    }
  }
  result.status = SolveStatus::kOptimal;
  result.parameter = d;
  result.vector.resize(instance.size());
  for (int s = 0; s < instance.size(); ++s) {
    result.vector[s] = ClampedCoordinate(instance, in_star[s], s, d);
  }
  result.optimal_value = LInfObjective(result.vector, instance.weights);
  return result;
}

MinmaxCheck CheckMinmaxTheorem(const Instance& instance) {
  MinmaxCheck check;
  check.rhs = MinmaxValue(instance);
  check.lhs = 0;
  for (int j = 0; j < instance.num_costs(); ++j) {
    const ReferenceResult single = BruteForceLinf(WithSingleCost(instance, j));
    if (!single.optimal()) return check;  // unconstrained: cannot happen
    check.lhs = std::max(check.lhs, single.optimal_value);
  }
  check.holds = check.lhs == check.rhs;
  return check;
}

namespace {

class Draw {
 public:
  explicit Draw(uint64_t seed) : engine_(seed) {}
  int Int(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(engine_);
  }
  bool Chance(double p) { return std::uniform_real_distribution<>(0, 1)(engine_) < p; }
  template <class T>
  void Shuffle(std::vector<T>& v) {
    for (int i = static_cast<int>(v.size()) - 1; i > 0; --i) {
      std::swap(v[i], v[Int(0, i)]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

std::vector<std::string> Names(const char* prefix, int count) {
  std::vector<std::string> names;
  for (int i = 0; i < count; ++i) names.push_back(prefix + std::to_string(i));
  return names;
}

FamilyDescriptor RandomFamily(const GeneratorParams& params, Draw& draw) {
  const int n = params.n;
  switch (params.kind) {
    case FamilyKind::kExplicit: {
      const int64_t universe = int64_t{1} << n;
      const int wanted = static_cast<int>(std::min<int64_t>(
          universe, draw.Int(params.min_family_size, params.max_family_size)));
      std::set<Subset> sets;
      while (static_cast<int>(sets.size()) < wanted) {
        const int64_t bits = draw.Int(0, static_cast<int>(universe - 1));
        Subset s;
        for (int e = 0; e < n; ++e) {
          if (bits >> e & 1) s.push_back(e);
        }
        sets.insert(std::move(s));
      }
      ExplicitFamily family{{sets.begin(), sets.end()}};
      draw.Shuffle(family.sets);
      return family;
    }
    case FamilyKind::kSpanningTree: {
      const int num_vertices = draw.Int(2, n + 1);
      SpanningTreeFamily graph;
      graph.vertex_names = Names("v", num_vertices);
      for (int v = 1; v < num_vertices; ++v) {
        graph.edges.push_back({draw.Int(0, v - 1), v});
      }
      while (static_cast<int>(graph.edges.size()) < n) {
        const int a = draw.Int(0, num_vertices - 1);
        int b = draw.Int(0, num_vertices - 2);
        if (b >= a) ++b;
        graph.edges.push_back({a, b});
      }
      draw.Shuffle(graph.edges);
      return graph;
    }
    case FamilyKind::kDagPath: {
      const int num_vertices = draw.Int(2, std::min(n + 1, 7));
      DagPathFamily dag;
      dag.vertex_names = Names("v", num_vertices);
      dag.source = 0;
      dag.target = num_vertices - 1;
      for (int v = 0; v + 1 < num_vertices; ++v) dag.arcs.push_back({v, v + 1});
      while (static_cast<int>(dag.arcs.size()) < n) {
        const int a = draw.Int(0, num_vertices - 2);
        const int b = draw.Int(a + 1, num_vertices - 1);
        dag.arcs.push_back({a, b});
      }
      draw.Shuffle(dag.arcs);
      return dag;
    }
    case FamilyKind::kUniformMatroid:
      return UniformMatroidFamily{draw.Int(1, n)};
  }
  throw Error(ErrorCode::kPreconditionViolated, "unknown family kind");
}

}  // namespace

Instance RandomInstance(const GeneratorParams& params) {
  if (params.n < 2 || params.n > 12 || params.k < 1 || params.k > 3 ||
      params.bound_density < 0 || params.bound_density > 1 ||
      params.min_family_size < 1 ||
      params.max_family_size < params.min_family_size ||
      params.cost_min > params.cost_max || params.bound_min > params.bound_max) {
    throw Error(ErrorCode::kPreconditionViolated, "invalid generator parameters");
  }
  Draw draw(params.seed);
  Instance instance;
  instance.objective = params.objective;
  instance.element_ids = Names("e", params.n);
  instance.family = RandomFamily(params, draw);

  const std::vector<Subset> members =
      EnumerateFamily(instance.family, params.n);
  instance.star = members[draw.Int(0, static_cast<int>(members.size()) - 1)];

  static const Rational kWeights[] = {Rational(1, 3), Rational(1, 2),
                                      Rational(1), Rational(2), Rational(3)};
  for (int s = 0; s < params.n; ++s) {
    instance.weights.push_back(params.unit_weights ? Rational(1)
                                                   : kWeights[draw.Int(0, 4)]);
    ExtendedRational lower = ExtendedRational::NegInf();
    ExtendedRational upper = ExtendedRational::PosInf();
    if (draw.Chance(params.bound_density)) {
      lower = Rational(draw.Int(params.bound_min, params.bound_max));
    }
    if (draw.Chance(params.bound_density)) {
      upper = Rational(draw.Int(params.bound_min, params.bound_max));
    }
    if (lower > upper) std::swap(lower, upper);
    instance.lower.push_back(lower);
    instance.upper.push_back(upper);
  }
  for (int j = 0; j < params.k; ++j) {
    CostVector c;
    for (int s = 0; s < params.n; ++s) {
      c.push_back(Rational(draw.Int(params.cost_min, params.cost_max)));
    }
    instance.costs.push_back(std::move(c));
  }
  ValidateInstance(instance);
  return instance;
}

}  // namespace invopt
