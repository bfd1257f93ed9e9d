/*
 * Copyright (c) 2026 The ftsynth authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "ftsynth/depgraph.hpp"

#include <sstream>

#include <nlohmann/json.hpp>

#include "ftsynth/query.hpp"

namespace ftsynth {

using ordered_json = nlohmann::ordered_json;

std::vector<DependencyEdge> DependencyGraph::edge_list() const {
  std::vector<DependencyEdge> out;
  out.reserve(edges.size());
  for (const auto& [key, resources] : edges) {
    out.push_back({key.first, key.second, resources});
  }
  return out;
}

std::map<Iri, std::set<Iri>> DependencyGraph::producers_by_resource(const Iri& consumer) const {
  std::map<Iri, std::set<Iri>> out;
  for (const auto& [key, resources] : edges) {
    if (key.first != consumer) continue;
    for (const auto& r : resources) out[r].insert(key.second);
  }
  return out;
}

std::set<Iri> DependencyGraph::producers_of(const Iri& consumer) const {
  std::set<Iri> out;
  for (const auto& [key, resources] : edges) {
    if (key.first == consumer) out.insert(key.second);
  }
  return out;
}

DependencyGraph extract_dependencies(const Graph& g, const Vocabulary& v,
                                     std::vector<std::string>* warnings) {
  DependencyGraph d;
  d.components = g.instances_of(v.component);

  Query q = dependency_query(v);
  Var c1{"c1"}, c2{"c2"}, resource{"resource"};
  for (const auto& b : evaluate(g, q.pattern, q.projection)) {
    // c1 produces, c2 consumes: edge consumer -> producer
    d.add_edge(as_iri(b.at(c2)), as_iri(b.at(c1)), as_iri(b.at(resource)));
  }

  if (warnings) {
    Query unfiltered = dependency_query_unfiltered(v);
    for (const auto& b : evaluate(g, unfiltered.pattern, unfiltered.projection)) {
      if (b.at(c1) == b.at(c2)) {
        warnings->push_back("self-dependency of " + as_iri(b.at(c1)).value +
                            " on resource " + as_iri(b.at(resource)).value +
                            " excluded");
      }
    }
  }
  return d;
}

std::vector<RedundancyGroup> extract_redundancy(const Graph& g, const Vocabulary& v) {
  Query q = redundancy_query(v);
  Var c1{"c1"}, c2{"c2"}, c3{"c3"}, resource{"resource"};
  std::map<std::pair<Iri, Iri>, std::set<Iri>> grouped;  // (consumer, resource) -> producers
  for (const auto& b : evaluate(g, q.pattern, q.projection)) {
    auto& producers = grouped[{as_iri(b.at(c2)), as_iri(b.at(resource))}];
    producers.insert(as_iri(b.at(c1)));
    producers.insert(as_iri(b.at(c3)));
  }
  std::vector<RedundancyGroup> out;
  for (auto& [key, producers] : grouped) {
    out.push_back({key.first, key.second, std::move(producers)});
  }
  return out;
}

std::string depgraph_to_dot(const DependencyGraph& d,
                            const std::vector<RedundancyGroup>& red) {
  auto in_redundancy = [&](const Iri& consumer, const Iri& producer,
                           const std::set<Iri>& resources) {
    for (const auto& group : red) {
      if (group.consumer == consumer && group.producers.count(producer) &&
          resources.count(group.resource)) {
        return true;
      }
    }
    return false;
  };

  std::ostringstream out;
  out << "digraph dependencies {\n";
  for (const auto& c : d.components) {
    out << "  \"" << local_name(c) << "\";\n";
  }
  for (const auto& e : d.edge_list()) {
    std::string label;
    for (const auto& r : e.resources) {
      if (!label.empty()) label += ",";
      label += local_name(r);
    }
    out << "  \"" << local_name(e.consumer) << "\" -> \"" << local_name(e.producer)
        << "\" [label=\"" << label << "\"";
    if (in_redundancy(e.consumer, e.producer, e.resources)) out << ", color=red";
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

std::string depgraph_to_json(const DependencyGraph& d) {
  ordered_json doc;
  doc["components"] = ordered_json::array();
  for (const auto& c : d.components) doc["components"].push_back(c.value);
  doc["edges"] = ordered_json::array();
  for (const auto& e : d.edge_list()) {
    ordered_json edge;
    edge["consumer"] = e.consumer.value;
    edge["producer"] = e.producer.value;
    edge["resources"] = ordered_json::array();
    for (const auto& r : e.resources) edge["resources"].push_back(r.value);
    doc["edges"].push_back(std::move(edge));
  }
  return doc.dump(2) + "\n";
}

std::string redundancy_to_json(const std::vector<RedundancyGroup>& red) {
  ordered_json doc = ordered_json::array();
  for (const auto& g : red) {
    ordered_json group;
    group["consumer"] = g.consumer.value;
    group["resource"] = g.resource.value;
    group["producers"] = ordered_json::array();
    for (const auto& p : g.producers) group["producers"].push_back(p.value);
    doc.push_back(std::move(group));
  }
  return doc.dump(2) + "\n";
}

}  // namespace ftsynth
