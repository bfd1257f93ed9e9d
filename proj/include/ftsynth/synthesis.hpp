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
#include <optional>
#include <string>
#include <vector>

#include "ftsynth/depgraph.hpp"
#include "ftsynth/rdf.hpp"

namespace ftsynth {

enum class NodeKind { BasicEvent, OrGate, AndGate };

struct FtNode {
  std::string id;
  NodeKind kind;
  std::string label;
  std::vector<std::string> children;  // empty iff BasicEvent
  std::optional<Iri> component;
  std::optional<Iri> resource;  // AND gates only
};

/// A rooted DAG of gates over basic events. Shared suppliers show up as
/// shared subtrees; ids are stable across runs.
struct FaultTree {
  std::map<std::string, FtNode> nodes;
  std::string top;
  std::vector<std::string> warnings;

  const FtNode& node(const std::string& id) const { return nodes.at(id); }
  std::size_t count(NodeKind k) const;
  /// component -> id of its internal-fault basic event.
  std::map<Iri, std::string> basic_events_by_component() const;
};

struct SynthesisOptions {
  /// When set, back edges inside dependency cycles are dropped with a
  /// warning instead of rejecting the input. Expansion inside a strongly
  /// connected component is path-dependent, so nodes there are not shared.
  bool break_cycles = false;
};

/// Builds the fault tree rooted at `top`: per reachable component one OR
/// gate over one internal-fault basic event, one AND gate per redundancy
/// group, and a direct sub-gate per sole supplier. Unreachable components
/// are excluded and listed in warnings. Throws TopNotFoundError, or
/// CyclicDependencyError when a reachable cycle exists and break_cycles
/// is off.
FaultTree synthesize(const DependencyGraph& d, const std::vector<RedundancyGroup>& red,
                     const Iri& top, const SynthesisOptions& opts = {});

/// Canonical JSON: {"top": ..., "nodes": [...]} sorted by id, children
/// sorted; byte-deterministic for equal trees.
std::string to_json(const FaultTree& ft);
/// DOT rendering: basic events green, gates yellow, AND gates labeled
/// with their kind.
std::string to_dot(const FaultTree& ft);
/// Galileo rendering. Basic-event probabilities carry no information
/// here (the method assumes none is available); `default_prob` is a
/// placeholder written verbatim for every basic event.
std::string to_galileo(const FaultTree& ft, double default_prob = 0.5);

}  // namespace ftsynth
