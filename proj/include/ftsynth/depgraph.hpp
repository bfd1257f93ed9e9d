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

#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "ftsynth/rdf.hpp"
#include "ftsynth/vocab.hpp"

namespace ftsynth {

/// consumer depends on producer for every resource in the label set.
struct DependencyEdge {
  Iri consumer;
  Iri producer;
  std::set<Iri> resources;

  auto operator<=>(const DependencyEdge&) const = default;
};

struct DependencyGraph {
  std::set<Iri> components;
  // at most one edge per (consumer, producer); map keeps edges sorted
  std::map<std::pair<Iri, Iri>, std::set<Iri>> edges;

  void add_edge(const Iri& consumer, const Iri& producer, const Iri& resource) {
    edges[{consumer, producer}].insert(resource);
  }

  std::vector<DependencyEdge> edge_list() const;
  /// resource -> producers supplying it to `consumer`.
  std::map<Iri, std::set<Iri>> producers_by_resource(const Iri& consumer) const;
  /// all producers `consumer` depends on.
  std::set<Iri> producers_of(const Iri& consumer) const;

  bool operator==(const DependencyGraph&) const = default;
};

struct RedundancyGroup {
  Iri consumer;
  Iri resource;
  std::set<Iri> producers;  // cardinality >= 2

  auto operator<=>(const RedundancyGroup&) const = default;
};

/// Runs the dependency query over an inference-closed graph and folds the
/// bindings into a DependencyGraph. Every Component-typed node is kept,
/// isolated ones included. Appends a warning per suppressed self-loop.
DependencyGraph extract_dependencies(const Graph& g, const Vocabulary& v,
                                     std::vector<std::string>* warnings = nullptr);

/// Runs the redundancy query and groups its rows by (consumer, resource).
std::vector<RedundancyGroup> extract_redundancy(const Graph& g, const Vocabulary& v);

/// DOT rendering; edges participating in a redundancy group are red.
std::string depgraph_to_dot(const DependencyGraph& d,
                            const std::vector<RedundancyGroup>& red);
std::string depgraph_to_json(const DependencyGraph& d);
std::string redundancy_to_json(const std::vector<RedundancyGroup>& red);

}  // namespace ftsynth
