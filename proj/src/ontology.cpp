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

#include "ftsynth/ontology.hpp"

#include <algorithm>

#include "ftsynth/errors.hpp"

namespace ftsynth {

Graph infer(const Graph& g, const Vocabulary& v) {
  Graph closed = g;
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<Triple> fresh;

    auto part_of = closed.iri_pairs(v.part_of);
    for (const auto& [a, b] : part_of) {
      for (const auto& [b2, c] : part_of) {
        if (b == b2) fresh.push_back({a, v.part_of, Term{c}});  // R1
      }
    }
    for (const auto& t : closed) {
      if (t.predicate == v.produces) {
        fresh.push_back({t.subject, v.rdf_type, Term{v.production}});  // R2
      } else if (t.predicate == v.consumes) {
        fresh.push_back({t.subject, v.rdf_type, Term{v.consumption}});  // R3
      }
    }
    auto subclass = closed.iri_pairs(v.subclass_of);
    for (const auto& t : closed) {
      if (t.predicate != v.rdf_type || !is_iri(t.object)) continue;
      for (const auto& [sub, super] : subclass) {
        if (as_iri(t.object) == sub) {
          fresh.push_back({t.subject, v.rdf_type, Term{super}});  // R4
        }
      }
    }

    for (auto& t : fresh) {
      if (!closed.contains(t)) {
        closed.insert(std::move(t));
        changed = true;
      }
    }
  }
  return closed;
}

namespace {

bool typed(const Graph& g, const Iri& x, const Iri& cls, const Vocabulary& v) {
  return g.contains(x, v.rdf_type, Term{cls});
}

}  // namespace

ValidationReport validate(const Graph& g, const Vocabulary& v) {
  ValidationReport report;
  auto components = g.instances_of(v.component);

  if (components.empty()) {
    report.errors.push_back({kNoComponents, "no node is typed Component", {}});
  }

  for (const auto& t : g) {
    if (!is_iri(t.object)) continue;
    const Iri& obj = as_iri(t.object);
    if (t.predicate == v.part_of || t.predicate == v.input_from ||
        t.predicate == v.outputs_to) {
      if (!typed(g, t.subject, v.component, v) || !typed(g, obj, v.component, v)) {
        const char* code = (t.predicate == v.part_of) ? kPartofNotComponent : kIoNotComponent;
        report.errors.push_back(
            {code,
             "subject and object of " + local_name(t.predicate) + " must be typed Component",
             {t}});
      }
    } else if (t.predicate == v.has) {
      if (!typed(g, t.subject, v.component, v) || !typed(g, obj, v.function, v)) {
        report.errors.push_back(
            {kHasMalformed, "has must relate a Component to a Function", {t}});
      }
    } else if (t.predicate == v.produces || t.predicate == v.consumes) {
      if (!typed(g, t.subject, v.function, v) || !typed(g, obj, v.resource, v)) {
        const char* code = (t.predicate == v.produces) ? kProducesMalformed : kConsumesMalformed;
        report.errors.push_back(
            {code,
             local_name(t.predicate) + " must relate a Function to a Resource",
             {t}});
      }
    }
  }

  // A partOf cycle in the raw relation shows up as a self-loop after closure.
  for (const auto& [a, b] : g.iri_pairs(v.part_of)) {
    if (a == b) {
      report.errors.push_back(
          {kPartofCycle, "partOf cycle through " + a.value, {{a, v.part_of, Term{b}}}});
    }
  }

  auto systems = system_candidates(g, v);
  if (!components.empty() && systems.size() != 1) {
    std::string msg = systems.empty()
                          ? "no component qualifies as the system"
                          : "multiple components qualify as the system";
    for (const auto& s : systems) msg += " " + s.value;
    report.warnings.push_back({kSystemCount, msg, {}});
  }

  for (const auto& c : components) {
    if (g.iri_objects(c, v.has).empty()) {
      report.warnings.push_back(
          {kComponentWithoutFunction, "component " + c.value + " has no functions", {}});
    }
  }

  // Unsatisfied consumption: a component consumes r but no IO-connected
  // component produces r.
  auto io_connected = [&](const Iri& a, const Iri& b) {
    return g.contains(a, v.input_from, Term{b}) || g.contains(b, v.input_from, Term{a}) ||
           g.contains(a, v.outputs_to, Term{b}) || g.contains(b, v.outputs_to, Term{a});
  };
  for (const auto& consumer : components) {
    for (const auto& f : g.iri_objects(consumer, v.has)) {
      for (const auto& r : g.iri_objects(f, v.consumes)) {
        bool satisfied = false;
        for (const auto& producer : components) {
          if (producer == consumer || !io_connected(consumer, producer)) continue;
          for (const auto& pf : g.iri_objects(producer, v.has)) {
            auto produced = g.iri_objects(pf, v.produces);
            if (produced.count(r)) {
              satisfied = true;
              break;
            }
          }
          if (satisfied) break;
        }
        if (!satisfied) {
          report.warnings.push_back(
              {kUnsatisfiedConsumption,
               "component " + consumer.value + " consumes " + r.value +
                   " but no connected component produces it",
               {{f, v.consumes, Term{r}}}});
        }
      }
    }
  }

  return report;
}

std::vector<Iri> system_candidates(const Graph& g, const Vocabulary& v) {
  std::vector<Iri> out;
  for (const auto& c : g.instances_of(v.component)) {
    if (g.iri_objects(c, v.part_of).empty()) out.push_back(c);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Iri find_system(const Graph& g, const Vocabulary& v) {
  auto candidates = system_candidates(g, v);
  if (candidates.empty()) throw NoSystemError();
  if (candidates.size() > 1) throw AmbiguousSystemError(std::move(candidates));
  return candidates.front();
}

}  // namespace ftsynth
