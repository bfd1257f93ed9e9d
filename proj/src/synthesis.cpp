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

#include "ftsynth/synthesis.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "ftsynth/errors.hpp"

namespace ftsynth {

using ordered_json = nlohmann::ordered_json;

std::size_t FaultTree::count(NodeKind k) const {
  std::size_t n = 0;
  for (const auto& [id, node] : nodes) {
    if (node.kind == k) ++n;
  }
  return n;
}

std::map<Iri, std::string> FaultTree::basic_events_by_component() const {
  std::map<Iri, std::string> out;
  for (const auto& [id, node] : nodes) {
    if (node.kind == NodeKind::BasicEvent && node.component) {
      out[*node.component] = id;
    }
  }
  return out;
}

namespace {

class IdAllocator {
 public:
  std::string allocate(const std::string& base) {
    if (used_.insert(base).second) return base;
    for (int suffix = 2;; ++suffix) {
      std::string candidate = base + "_" + std::to_string(suffix);
      if (used_.insert(candidate).second) return candidate;
    }
  }

 private:
  std::set<std::string> used_;
};

// Tarjan over the reachable dependency subgraph; marks components that
// sit in a strongly connected component of size > 1.
class SccMarker {
 public:
  SccMarker(const DependencyGraph& d, const Iri& top) : d_(d) { visit(top); }

  bool in_cycle(const Iri& c) const { return cyclic_.count(c) > 0; }

 private:
  struct State {
    int index = -1;
    int lowlink = -1;
    bool on_stack = false;
  };

  int visit(const Iri& c) {
    State& s = states_[c];
    s.index = s.lowlink = next_index_++;
    s.on_stack = true;
    stack_.push_back(c);
    for (const auto& p : d_.producers_of(c)) {
      auto it = states_.find(p);
      if (it == states_.end()) {
        s.lowlink = std::min(s.lowlink, visit(p));
      } else if (it->second.on_stack) {
        s.lowlink = std::min(s.lowlink, it->second.index);
      }
    }
    // re-fetch: the map may have rehashed during recursion
    State& self = states_[c];
    if (self.lowlink == self.index) {
      std::vector<Iri> scc;
      while (true) {
        Iri node = stack_.back();
        stack_.pop_back();
        states_[node].on_stack = false;
        scc.push_back(node);
        if (node == c) break;
      }
      if (scc.size() > 1) cyclic_.insert(scc.begin(), scc.end());
    }
    return states_[c].lowlink;
  }

  const DependencyGraph& d_;
  std::map<Iri, State> states_;
  std::vector<Iri> stack_;
  std::set<Iri> cyclic_;
  int next_index_ = 0;
};

class Builder {
 public:
  Builder(const DependencyGraph& d, const std::vector<RedundancyGroup>& red,
          const SynthesisOptions& opts, const Iri& top)
      : d_(d), opts_(opts), scc_(d, top) {
    for (const auto& g : red) groups_[g.consumer].push_back(g);
    for (auto& [consumer, gs] : groups_) {
      std::sort(gs.begin(), gs.end(),
                [](const RedundancyGroup& a, const RedundancyGroup& b) {
                  return a.resource < b.resource;
                });
    }
  }

  FaultTree run(const Iri& top) {
    ft_.top = *build(top);
    for (const auto& c : d_.components) {
      if (!reached_.count(c)) {
        ft_.warnings.push_back("component unreachable from top event, excluded: " + c.value);
      }
    }
    return std::move(ft_);
  }

 private:
  // Returns the id of the component's OR gate, or nullopt when the edge
  // into `c` is a back edge being dropped under break_cycles.
  std::optional<std::string> build(const Iri& c) {
    if (std::find(path_.begin(), path_.end(), c) != path_.end()) {
      if (opts_.break_cycles) {
        ft_.warnings.push_back("dependency cycle back edge into " + c.value + " dropped");
        return std::nullopt;
      }
      std::vector<Iri> cycle(std::find(path_.begin(), path_.end(), c), path_.end());
      cycle.push_back(c);
      throw CyclicDependencyError(std::move(cycle));
    }
    // Inside a strongly connected component expansion depends on the path
    // taken, so memoized sharing would be unsound there.
    bool shareable = !opts_.break_cycles || !scc_.in_cycle(c);
    if (shareable) {
      auto it = or_ids_.find(c);
      if (it != or_ids_.end()) return it->second;
    }

    path_.push_back(c);
    reached_.insert(c);
    std::string local = local_name(c);
    std::string or_id = ids_.allocate(local + ".fails");

    std::vector<std::string> children;
    children.push_back(basic_event(c));

    std::set<Iri> covered;  // producers consumed only through redundancy groups
    auto git = groups_.find(c);
    if (git != groups_.end()) {
      for (const auto& group : git->second) {
        std::vector<std::string> and_children;
        for (const auto& p : group.producers) {
          if (auto child = build(p)) and_children.push_back(*child);
        }
        if (and_children.empty()) continue;  // all branches were back edges
        std::string and_id =
            ids_.allocate(local + "." + local_name(group.resource) + ".redundant");
        ft_.nodes[and_id] = FtNode{and_id,
                                   NodeKind::AndGate,
                                   "loss of all " + local_name(group.resource) +
                                       " suppliers to " + local,
                                   std::move(and_children),
                                   c,
                                   group.resource};
        children.push_back(and_id);
      }
    }

    // A producer is a direct OR child when it supplies at least one
    // resource outside every redundancy group of c.
    for (const auto& [key, resources] : d_.edges) {
      if (key.first != c) continue;
      const Iri& p = key.second;
      bool sole_supplied = false;
      for (const auto& r : resources) {
        bool in_group = false;
        if (git != groups_.end()) {
          for (const auto& group : git->second) {
            if (group.resource == r && group.producers.count(p)) {
              in_group = true;
              break;
            }
          }
        }
        if (!in_group) {
          sole_supplied = true;
          break;
        }
      }
      if (sole_supplied) {
        if (auto child = build(p)) children.push_back(*child);
      }
    }

    ft_.nodes[or_id] =
        FtNode{or_id, NodeKind::OrGate, local + " fails", std::move(children), c, {}};
    path_.pop_back();
    if (shareable) or_ids_[c] = or_id;
    return or_id;
  }

  // One internal-fault basic event per component, shared across all of
  // the component's gate instantiations.
  std::string basic_event(const Iri& c) {
    auto it = be_ids_.find(c);
    if (it != be_ids_.end()) return it->second;
    std::string id = ids_.allocate(local_name(c) + ".internal");
    ft_.nodes[id] = FtNode{id, NodeKind::BasicEvent, local_name(c) + " internal fault", {}, c, {}};
    be_ids_[c] = id;
    return id;
  }

  const DependencyGraph& d_;
  SynthesisOptions opts_;
  SccMarker scc_;
  std::map<Iri, std::vector<RedundancyGroup>> groups_;
  FaultTree ft_;
  IdAllocator ids_;
  std::map<Iri, std::string> or_ids_;
  std::map<Iri, std::string> be_ids_;
  std::vector<Iri> path_;
  std::set<Iri> reached_;
};

const char* kind_name(NodeKind k) {
  switch (k) {
    case NodeKind::BasicEvent: return "be";
    case NodeKind::OrGate: return "or";
    case NodeKind::AndGate: return "and";
  }
  return "?";
}

std::string format_prob(double p) {
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), p);
  return std::string(buf, end);
}

}  // namespace

FaultTree synthesize(const DependencyGraph& d, const std::vector<RedundancyGroup>& red,
                     const Iri& top, const SynthesisOptions& opts) {
  if (!d.components.count(top)) throw TopNotFoundError(top);
  return Builder(d, red, opts, top).run(top);
}

std::string to_json(const FaultTree& ft) {
  ordered_json doc;
  doc["top"] = ft.top;
  doc["nodes"] = ordered_json::array();
  for (const auto& [id, node] : ft.nodes) {
    ordered_json n;
    n["id"] = id;
    n["kind"] = kind_name(node.kind);
    n["label"] = node.label;
    if (node.component) n["component"] = node.component->value;
    if (node.resource) n["resource"] = node.resource->value;
    std::vector<std::string> children = node.children;
    std::sort(children.begin(), children.end());
    n["children"] = children;
    doc["nodes"].push_back(std::move(n));
  }
  return doc.dump(2) + "\n";
}

std::string to_dot(const FaultTree& ft) {
  std::ostringstream out;
  out << "digraph faulttree {\n";
  for (const auto& [id, node] : ft.nodes) {
    out << "  \"" << id << "\" [label=\"" << node.label;
    if (node.kind == NodeKind::AndGate) out << "\\n[AND]";
    if (node.kind == NodeKind::OrGate) out << "\\n[OR]";
    out << "\", style=filled, fillcolor="
        << (node.kind == NodeKind::BasicEvent ? "green" : "yellow") << "];\n";
  }
  for (const auto& [id, node] : ft.nodes) {
    for (const auto& child : node.children) {
      out << "  \"" << id << "\" -> \"" << child << "\";\n";
    }
  }
  out << "}\n";
  return out.str();
}

std::string to_galileo(const FaultTree& ft, double default_prob) {
  std::ostringstream out;
  out << "toplevel \"" << ft.top << "\";\n";
  for (const auto& [id, node] : ft.nodes) {
    if (node.kind == NodeKind::BasicEvent) continue;
    out << "\"" << id << "\" " << (node.kind == NodeKind::OrGate ? "or" : "and");
    for (const auto& child : node.children) out << " \"" << child << "\"";
    out << ";\n";
  }
  for (const auto& [id, node] : ft.nodes) {
    if (node.kind != NodeKind::BasicEvent) continue;
    out << "\"" << id << "\" prob=" << format_prob(default_prob) << ";\n";
  }
  return out.str();
}

}  // namespace ftsynth
