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

#include <fstream>
#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>

#include "json.hpp"

#include "invopt/error.h"

namespace invopt {
namespace {

using Json = nlohmann::json;
using OrderedJson = nlohmann::ordered_json;

[[noreturn]] void Malformed(const std::string& message) {
  throw Error(ErrorCode::kMalformedDocument, message);
}

const Json& Field(const Json& object, const char* key) {
  if (!object.is_object() || !object.contains(key)) {
    Malformed(std::string("missing field \"") + key + "\"");
  }
  return object.at(key);
}

ExtendedRational ReadRational(const Json& value) {
  if (value.is_string()) return ParseExtendedRational(value.get<std::string>());
  if (value.is_number_integer()) return Rational(value.dump());
  Malformed("rational must be a string or an integer: " + value.dump());
}

Rational ReadFinite(const Json& value, const std::string& what) {
  const ExtendedRational r = ReadRational(value);
  if (!r.is_finite()) Malformed(what + " must be finite");
  return r.value();
}

std::string ReadName(const Json& value) {
  if (value.is_string()) return value.get<std::string>();
  if (value.is_number_integer()) return value.dump();
  Malformed("vertex name must be a string or an integer: " + value.dump());
}

class ElementTable {
 public:
  explicit ElementTable(const std::vector<std::string>& ids) {
    for (int i = 0; i < static_cast<int>(ids.size()); ++i) index_[ids[i]] = i;
  }
  int At(const Json& id) const {
    if (!id.is_string()) Malformed("element id must be a string");
    auto it = index_.find(id.get<std::string>());
    if (it == index_.end()) Malformed("unknown element \"" + id.get<std::string>() + "\"");
    return it->second;
  }
  Subset SubsetOf(const Json& ids) const {
    if (!ids.is_array()) Malformed("expected an array of element ids");
    Subset out;
    for (const Json& id : ids) out.push_back(At(id));
    std::sort(out.begin(), out.end());
    if (std::adjacent_find(out.begin(), out.end()) != out.end()) {
      Malformed("element listed twice in a set");
    }
    return out;
  }

 private:
  std::map<std::string, int> index_;
};

// Reads [[u, v, id], ...] into edges indexed by element.
std::vector<GraphEdge> ReadGraph(const Json& list, const ElementTable& table,
                                 int n, std::vector<std::string>& names,
                                 std::map<std::string, int>& vertex_index) {
  if (!list.is_array()) Malformed("edge list must be an array");
  auto vertex = [&](const Json& v) {
    const std::string name = ReadName(v);
    auto [it, inserted] =
        vertex_index.emplace(name, static_cast<int>(names.size()));
    if (inserted) names.push_back(name);
    return it->second;
  };
  std::vector<GraphEdge> edges(n);
  std::vector<char> seen(n, 0);
  for (const Json& e : list) {
    if (!e.is_array() || e.size() != 3) Malformed("edge must be [u, v, id]");
    const int tail = vertex(e[0]);
    const int head = vertex(e[1]);
    const int element = table.At(e[2]);
    if (seen[element]) Malformed("element used by two edges");
    seen[element] = 1;
    edges[element] = {tail, head};
  }
  for (int s = 0; s < n; ++s) {
    if (!seen[s]) Malformed("element without an edge");
  }
  return edges;
}

// Optional "vertices" list fixing the vertex numbering; otherwise vertices
// are numbered in order of first appearance.
void ReadVertexList(const Json& family, std::vector<std::string>& names,
                    std::map<std::string, int>& vertex_index) {
  if (!family.contains("vertices")) return;
  const Json& list = family.at("vertices");
  if (!list.is_array()) Malformed("vertices must be an array");
  for (const Json& v : list) {
    const std::string name = ReadName(v);
    if (!vertex_index.emplace(name, static_cast<int>(names.size())).second) {
      Malformed("vertex \"" + name + "\" listed twice");
    }
    names.push_back(name);
  }
}

FamilyDescriptor ReadFamily(const Json& doc, const ElementTable& table, int n) {
  const Json& family = Field(doc, "family");
  const Json& kind_json = Field(family, "kind");
  if (!kind_json.is_string()) Malformed("family kind must be a string");
  const std::string kind = kind_json.get<std::string>();
  if (kind == "explicit") {
    ExplicitFamily f;
    const Json& sets = Field(family, "sets");
    if (!sets.is_array()) Malformed("sets must be an array");
    for (const Json& s : sets) f.sets.push_back(table.SubsetOf(s));
    return f;
  }
  if (kind == "spanning_tree") {
    SpanningTreeFamily g;
    std::map<std::string, int> vertex_index;
    ReadVertexList(family, g.vertex_names, vertex_index);
    g.edges = ReadGraph(Field(family, "edges"), table, n, g.vertex_names,
                        vertex_index);
    return g;
  }
  if (kind == "dag_path") {
    DagPathFamily d;
    std::map<std::string, int> vertex_index;
    ReadVertexList(family, d.vertex_names, vertex_index);
    auto endpoint = [&](const char* key) {
      const std::string name = ReadName(Field(family, key));
      auto [it, inserted] =
          vertex_index.emplace(name, static_cast<int>(d.vertex_names.size()));
      if (inserted) d.vertex_names.push_back(name);
      return it->second;
    };
    d.source = endpoint("source");
    d.target = endpoint("target");
    d.arcs = ReadGraph(Field(family, "arcs"), table, n, d.vertex_names,
                       vertex_index);
    return d;
  }
  if (kind == "uniform_matroid") {
    const Json& rank = Field(family, "rank");
    if (!rank.is_number_integer()) Malformed("rank must be an integer");
    return UniformMatroidFamily{rank.get<int>()};
  }
  Malformed("unknown family kind \"" + kind + "\"");
}

std::vector<Rational> ReadTotalMap(const Json& map, const ElementTable& table,
                                   const std::vector<std::string>& ids,
                                   const std::string& what) {
  if (!map.is_object()) Malformed(what + " must be an object");
  std::vector<std::optional<Rational>> values(ids.size());
  for (const auto& [key, value] : map.items()) {
    values[table.At(Json(key))] = ReadFinite(value, what);
  }
  std::vector<Rational> out;
  for (size_t s = 0; s < ids.size(); ++s) {
    if (!values[s]) Malformed(what + " missing for \"" + ids[s] + "\"");
    out.push_back(*values[s]);
  }
  return out;
}

void ReadBounds(const Json& doc, const char* key, const ElementTable& table,
                std::vector<ExtendedRational>& out) {
  if (!doc.contains(key)) return;
  const Json& map = doc.at(key);
  if (!map.is_object()) Malformed(std::string(key) + " must be an object");
  for (const auto& [id, value] : map.items()) {
    out[table.At(Json(id))] = ReadRational(value);
  }
}

Instance ParseDocument(const Json& doc) {
  if (!doc.is_object()) Malformed("document must be a JSON object");
  Instance instance;
  const Json& elements = Field(doc, "elements");
  if (!elements.is_array()) Malformed("elements must be an array");
  for (const Json& e : elements) {
    if (!e.is_string()) Malformed("element id must be a string");
    instance.element_ids.push_back(e.get<std::string>());
  }
  const int n = instance.size();
  {
    std::set<std::string> unique(instance.element_ids.begin(),
                                 instance.element_ids.end());
    if (static_cast<int>(unique.size()) != n) Malformed("duplicate element id");
  }
  const ElementTable table(instance.element_ids);

  if (doc.contains("objective")) {
    const Json& objective = doc.at("objective");
    if (objective == "hamming") {
      instance.objective = Objective::kHamming;
    } else if (objective == "linf") {
      instance.objective = Objective::kLInf;
    } else {
      Malformed("objective must be \"hamming\" or \"linf\"");
    }
  }
  instance.family = ReadFamily(doc, table, n);
  instance.star = table.SubsetOf(Field(doc, "star"));

  const Json& costs = Field(doc, "costs");
  if (!costs.is_array() || costs.empty()) {
    Malformed("costs must be a nonempty array of maps");
  }
  for (const Json& c : costs) {
    instance.costs.push_back(
        ReadTotalMap(c, table, instance.element_ids, "cost"));
  }
  instance.weights =
      ReadTotalMap(Field(doc, "weights"), table, instance.element_ids, "weight");
  instance.lower.assign(n, ExtendedRational::NegInf());
  instance.upper.assign(n, ExtendedRational::PosInf());
  ReadBounds(doc, "lower", table, instance.lower);
  ReadBounds(doc, "upper", table, instance.upper);
  return instance;
}

OrderedJson Ids(const Instance& instance, const Subset& subset) {
  OrderedJson out = OrderedJson::array();
  for (int s : subset) out.push_back(instance.element_ids[s]);
  return out;
}

OrderedJson GraphJson(const Instance& instance,
                      const std::vector<std::string>& names,
                      const std::vector<GraphEdge>& edges) {
  OrderedJson out = OrderedJson::array();
  for (size_t e = 0; e < edges.size(); ++e) {
    out.push_back({names[edges[e].tail], names[edges[e].head],
                   instance.element_ids[e]});
  }
  return out;
}

OrderedJson FamilyJson(const Instance& instance) {
  OrderedJson out;
  out["kind"] = FamilyKindName(KindOf(instance.family));
  if (const auto* f = std::get_if<ExplicitFamily>(&instance.family)) {
    OrderedJson sets = OrderedJson::array();
    for (const Subset& s : f->sets) sets.push_back(Ids(instance, s));
    out["sets"] = std::move(sets);
  } else if (const auto* g = std::get_if<SpanningTreeFamily>(&instance.family)) {
    out["vertices"] = g->vertex_names;
    out["edges"] = GraphJson(instance, g->vertex_names, g->edges);
  } else if (const auto* d = std::get_if<DagPathFamily>(&instance.family)) {
    out["vertices"] = d->vertex_names;
    out["source"] = d->vertex_names[d->source];
    out["target"] = d->vertex_names[d->target];
    out["arcs"] = GraphJson(instance, d->vertex_names, d->arcs);
  } else {
    out["rank"] = std::get<UniformMatroidFamily>(instance.family).rank;
  }
  return out;
}

}  // namespace

Instance LoadInstance(std::string_view document) {
  Json doc;
  try {
    doc = Json::parse(document);
  } catch (const Json::exception& e) {
    Malformed(e.what());
  }
  Instance instance = ParseDocument(doc);
  ValidateInstance(instance);
  return instance;
}

Instance LoadInstanceFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) Malformed("cannot read \"" + path + "\"");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return LoadInstance(buffer.str());
}

std::string SerializeInstance(const Instance& instance) {
  OrderedJson doc;
  doc["elements"] = instance.element_ids;
  doc["objective"] = ObjectiveName(instance.objective);
  doc["family"] = FamilyJson(instance);
  doc["star"] = Ids(instance, instance.star);
  OrderedJson costs = OrderedJson::array();
  for (const CostVector& c : instance.costs) {
    OrderedJson map = OrderedJson::object();
    for (int s = 0; s < instance.size(); ++s) {
      map[instance.element_ids[s]] = ToString(c[s]);
    }
    costs.push_back(std::move(map));
  }
  doc["costs"] = std::move(costs);
  OrderedJson weights = OrderedJson::object();
  OrderedJson lower = OrderedJson::object();
  OrderedJson upper = OrderedJson::object();
  for (int s = 0; s < instance.size(); ++s) {
    const std::string& id = instance.element_ids[s];
    weights[id] = ToString(instance.weights[s]);
    if (!instance.lower[s].is_neg_inf()) lower[id] = ToString(instance.lower[s]);
    if (!instance.upper[s].is_pos_inf()) upper[id] = ToString(instance.upper[s]);
  }
  doc["weights"] = std::move(weights);
  doc["lower"] = std::move(lower);
  doc["upper"] = std::move(upper);
  return doc.dump(2) + "\n";
}

std::string SerializeReport(const Instance& instance, const SolveReport& report,
                            bool include_trace) {
  OrderedJson doc;
  doc["status"] = report.optimal() ? "optimal" : "infeasible";
  if (report.optimal() && report.deviation) {
    doc["objective_value"] = ToString(report.objective_value);
    OrderedJson deviation = OrderedJson::object();
    for (int s = 0; s < instance.size(); ++s) {
      deviation[instance.element_ids[s]] = ToString((*report.deviation)[s]);
    }
    doc["deviation"] = std::move(deviation);
  } else {
    doc["objective_value"] = nullptr;
    doc["deviation"] = nullptr;
  }
  doc["iterations"] = report.trace.size();
  doc["oracle_calls"] = report.oracle_calls;
  if (include_trace) {
    OrderedJson trace = OrderedJson::array();
    for (const TraceEntry& e : report.trace) {
      OrderedJson entry;
      entry["index"] = e.index;
      entry["parameter"] = ToString(e.parameter);
      entry["challenger"] = Ids(instance, e.challenger);
      entry["star_cost"] = ToString(e.star_cost);
      entry["challenger_cost"] = ToString(e.challenger_cost);
      entry["active_set_size"] = e.active_set_size;
      if (e.potential) entry["potential"] = ToString(*e.potential);
      trace.push_back(std::move(entry));
    }
    doc["trace"] = std::move(trace);
  }
  return doc.dump(2) + "\n";
}

}  // namespace invopt
