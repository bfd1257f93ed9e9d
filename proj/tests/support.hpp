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

#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ftsynth/depgraph.hpp"
#include "ftsynth/ontology.hpp"
#include "ftsynth/query.hpp"
#include "ftsynth/rdf.hpp"
#include "ftsynth/turtle.hpp"
#include "ftsynth/vocab.hpp"

#ifndef FTSYNTH_FIXTURE
#define FTSYNTH_FIXTURE "examples/lycoming_o320.ttl"
#endif

namespace ftsynth::testing {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(static_cast<bool>(in));
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline const Vocabulary& vocab() {
  static Vocabulary v = Vocabulary::with_namespace();
  return v;
}

inline Iri nsiri(const std::string& local) {
  return Iri{std::string(kDefaultNamespace) + local};
}

/// Lycoming fixture, raw (as parsed).
inline const Graph& fixture_raw() {
  static Graph g = parse_turtle(read_file(FTSYNTH_FIXTURE));
  return g;
}

/// Lycoming fixture, inference-closed.
inline const Graph& fixture() {
  static Graph g = infer(fixture_raw(), vocab());
  return g;
}

// ---------------------------------------------------------------------
// Independent query oracle: depth-first enumeration of every variable
// assignment over the terms of the graph, pruning a branch only when a
// fully ground triple pattern in conjunctive position is absent. Shares
// no machinery with the binding-join engine it checks.
// ---------------------------------------------------------------------

namespace oracle_detail {

inline std::vector<Term> term_universe(const Graph& g) {
  std::set<Term> terms;
  for (const auto& t : g) {
    terms.insert(Term{t.subject});
    terms.insert(Term{t.predicate});
    terms.insert(t.object);
  }
  return {terms.begin(), terms.end()};
}

inline bool ground(const PatternTerm& pt, const Binding& b, Term& out) {
  if (!is_var(pt)) {
    out = as_term(pt);
    return true;
  }
  auto it = b.find(as_var(pt));
  if (it == b.end()) return false;
  out = it->second;
  return true;
}

inline int ground_check(const Graph& g, const TriplePattern& tp, const Binding& b) {
  Term s, p, o;
  if (!ground(tp.subject, b, s) || !ground(tp.predicate, b, p) || !ground(tp.object, b, o)) {
    return -1;  // not yet ground
  }
  if (!is_iri(s) || !is_iri(p)) return 0;
  return g.contains(as_iri(s), as_iri(p), o) ? 1 : 0;
}

/// conjunctive triple patterns: safe to prune on as soon as ground
inline void conjunctive(const GraphPattern& p, std::vector<const TriplePattern*>& out) {
  switch (p.kind) {
    case GraphPattern::Kind::Bgp:
      for (const auto& tp : p.patterns) out.push_back(&tp);
      break;
    case GraphPattern::Kind::Join:
      for (const auto& c : p.children) conjunctive(c, out);
      break;
    case GraphPattern::Kind::Filter:
      conjunctive(p.children[0], out);
      break;
    case GraphPattern::Kind::Union:
      break;  // disjunctive; checked only on full assignments
  }
}

inline bool filter_holds(const FilterCondition& c, const Binding& b) {
  const Term& a = b.at(c.a);
  if (c.kind == FilterCondition::Kind::In) {
    if (!is_iri(a)) return false;
    for (const auto& iri : c.allowed) {
      if (as_iri(a) == iri) return true;
    }
    return false;
  }
  return a != b.at(c.b);
}

inline bool satisfied(const Graph& g, const GraphPattern& p, const Binding& b) {
  switch (p.kind) {
    case GraphPattern::Kind::Bgp:
      for (const auto& tp : p.patterns) {
        if (ground_check(g, tp, b) != 1) return false;
      }
      return true;
    case GraphPattern::Kind::Join:
      for (const auto& c : p.children) {
        if (!satisfied(g, c, b)) return false;
      }
      return true;
    case GraphPattern::Kind::Union:
      return satisfied(g, p.children[0], b) || satisfied(g, p.children[1], b);
    case GraphPattern::Kind::Filter:
      return filter_holds(*p.condition, b) && satisfied(g, p.children[0], b);
  }
  return false;
}

}  // namespace oracle_detail

inline std::set<Binding> oracle_evaluate(const Graph& g, const GraphPattern& pattern,
                                         const std::vector<Var>& projection) {
  using namespace oracle_detail;
  std::vector<Var> vars;
  for (const auto& v : pattern.all_vars()) vars.push_back(v);
  std::vector<Term> universe = term_universe(g);
  std::vector<const TriplePattern*> prunable;
  conjunctive(pattern, prunable);

  std::set<Binding> results;
  Binding b;

  auto assign = [&](auto&& self, std::size_t depth) -> void {
    if (depth == vars.size()) {
      if (satisfied(g, pattern, b)) {
        Binding projected;
        for (const auto& v : projection) projected.emplace(v, b.at(v));
        results.insert(std::move(projected));
      }
      return;
    }
    for (const auto& t : universe) {
      b[vars[depth]] = t;
      bool viable = true;
      for (const TriplePattern* tp : prunable) {
        if (ground_check(g, *tp, b) == 0) {
          viable = false;
          break;
        }
      }
      if (viable) self(self, depth + 1);
    }
    b.erase(vars[depth]);
  };
  assign(assign, 0);
  return results;
}

// ---------------------------------------------------------------------
// Random knowledge-graph generators.
// ---------------------------------------------------------------------

/// Random graph over a small pool of IRIs and literals; exercises the
/// Turtle round trip. Prefix map left empty half the time.
inline Graph random_plain_graph(std::mt19937_64& rng) {
  Graph g;
  auto iri = [&](const char* stem) {
    return Iri{"http://rt.example/" + std::string(stem) + std::to_string(rng() % 6)};
  };
  std::size_t triples = rng() % 30;
  for (std::size_t i = 0; i < triples; ++i) {
    Term object = (rng() % 3 == 0)
                      ? Term{Literal{"lit " + std::to_string(rng() % 5),
                                     (rng() % 2) ? std::optional<Iri>(iri("dt"))
                                                 : std::nullopt}}
                      : Term{iri("o")};
    g.insert({iri("s"), iri("p"), object});
  }
  if (rng() % 2) g.set_prefix("rt", Iri{"http://rt.example/"});
  return g;
}

/// Random vocabulary-shaped graph for query testing: components with
/// functions producing/consuming from a small resource pool, random IO
/// wiring. Small term universe keeps the enumeration oracle fast.
inline Graph random_kg(std::mt19937_64& rng) {
  const Vocabulary& v = vocab();
  Graph g;
  g.insert({v.production, v.subclass_of, Term{v.function}});
  g.insert({v.consumption, v.subclass_of, Term{v.function}});
  int ncomp = 2 + static_cast<int>(rng() % 3);
  int nres = 1 + static_cast<int>(rng() % 2);
  std::vector<Iri> comps, resources;
  for (int i = 0; i < ncomp; ++i) {
    comps.push_back(nsiri("C" + std::to_string(i)));
    g.insert({comps.back(), v.rdf_type, Term{v.component}});
  }
  for (int r = 0; r < nres; ++r) {
    resources.push_back(nsiri("R" + std::to_string(r)));
    g.insert({resources.back(), v.rdf_type, Term{v.resource}});
  }
  for (int i = 0; i < ncomp; ++i) {
    Iri f = nsiri("F" + std::to_string(i));
    bool any = false;
    for (const auto& r : resources) {
      if (rng() % 2) {
        g.insert({f, v.produces, Term{r}});
        any = true;
      }
      if (rng() % 2) {
        g.insert({f, v.consumes, Term{r}});
        any = true;
      }
    }
    if (any) g.insert({comps[i], v.has, Term{f}});
  }
  for (int i = 0; i < ncomp; ++i) {
    for (int j = 0; j < ncomp; ++j) {
      if (i != j && rng() % 3 == 0) {
        g.insert({comps[i], (rng() % 2) ? v.input_from : v.outputs_to, Term{comps[j]}});
      }
    }
  }
  return infer(g, v);
}

/// Acyclic layered KG with designed dependencies: component i consumes
/// only from components with smaller index, redundant supply with the
/// given probability. Returns the inference-closed graph and the intended
/// top component (the last layer).
inline Graph random_acyclic_kg(std::mt19937_64& rng, int max_components,
                               double redundancy_prob, Iri& top_out) {
  const Vocabulary& v = vocab();
  Graph g;
  g.insert({v.production, v.subclass_of, Term{v.function}});
  g.insert({v.consumption, v.subclass_of, Term{v.function}});
  int n = 1 + static_cast<int>(rng() % max_components);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::vector<Iri> comps;
  for (int i = 0; i < n; ++i) {
    comps.push_back(nsiri("K" + std::to_string(i)));
    g.insert({comps[i], v.rdf_type, Term{v.component}});
  }
  std::vector<Iri> resources;
  for (int r = 0; r < 3; ++r) {
    resources.push_back(nsiri("Res" + std::to_string(r)));
    g.insert({resources[r], v.rdf_type, Term{v.resource}});
  }
  int function_serial = 0;
  auto give_production = [&](const Iri& c, const Iri& r) {
    Iri f = nsiri("P" + std::to_string(function_serial++));
    g.insert({c, v.has, Term{f}});
    g.insert({f, v.produces, Term{r}});
  };
  auto give_consumption = [&](const Iri& c, const Iri& r) {
    Iri f = nsiri("Q" + std::to_string(function_serial++));
    g.insert({c, v.has, Term{f}});
    g.insert({f, v.consumes, Term{r}});
  };
  for (int i = 1; i < n; ++i) {
    int wants = 1 + static_cast<int>(rng() % 2);
    for (int w = 0; w < wants; ++w) {
      const Iri& r = resources[rng() % resources.size()];
      std::set<int> producers{static_cast<int>(rng() % i)};
      if (i >= 2 && coin(rng) < redundancy_prob) {
        producers.insert(static_cast<int>(rng() % i));
        producers.insert(static_cast<int>(rng() % i));
      }
      give_consumption(comps[i], r);
      for (int p : producers) {
        give_production(comps[p], r);
        g.insert({comps[i], (rng() % 2) ? v.input_from : v.outputs_to, Term{comps[p]}});
      }
    }
  }
  top_out = comps[n - 1];
  return infer(g, v);
}

}  // namespace ftsynth::testing
