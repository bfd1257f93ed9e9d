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

#include "ftsynth/query.hpp"

#include <algorithm>
#include <stdexcept>

namespace ftsynth {

GraphPattern GraphPattern::bgp(std::vector<TriplePattern> patterns) {
  GraphPattern p;
  p.kind = Kind::Bgp;
  p.patterns = std::move(patterns);
  return p;
}

GraphPattern GraphPattern::join(std::vector<GraphPattern> parts) {
  GraphPattern p;
  p.kind = Kind::Join;
  p.children = std::move(parts);
  return p;
}

GraphPattern GraphPattern::union_of(GraphPattern left, GraphPattern right) {
  GraphPattern p;
  p.kind = Kind::Union;
  p.children.push_back(std::move(left));
  p.children.push_back(std::move(right));
  return p;
}

GraphPattern GraphPattern::filter(FilterCondition condition, GraphPattern inner) {
  GraphPattern p;
  p.kind = Kind::Filter;
  p.condition = std::move(condition);
  p.children.push_back(std::move(inner));
  return p;
}

namespace {

void collect_vars(const TriplePattern& tp, std::set<Var>& out) {
  for (const PatternTerm* t : {&tp.subject, &tp.predicate, &tp.object}) {
    if (is_var(*t)) out.insert(as_var(*t));
  }
}

}  // namespace

std::set<Var> GraphPattern::bound_vars() const {
  switch (kind) {
    case Kind::Bgp: {
      std::set<Var> out;
      for (const auto& tp : patterns) collect_vars(tp, out);
      return out;
    }
    case Kind::Join: {
      std::set<Var> out;
      for (const auto& c : children) {
        auto sub = c.bound_vars();
        out.insert(sub.begin(), sub.end());
      }
      return out;
    }
    case Kind::Union: {
      auto left = children[0].bound_vars();
      auto right = children[1].bound_vars();
      std::set<Var> out;
      std::set_intersection(left.begin(), left.end(), right.begin(), right.end(),
                            std::inserter(out, out.begin()));
      return out;
    }
    case Kind::Filter:
      return children[0].bound_vars();
  }
  return {};
}

std::set<Var> GraphPattern::all_vars() const {
  std::set<Var> out;
  for (const auto& tp : patterns) collect_vars(tp, out);
  for (const auto& c : children) {
    auto sub = c.all_vars();
    out.insert(sub.begin(), sub.end());
  }
  if (condition) {
    out.insert(condition->a);
    if (condition->kind == FilterCondition::Kind::NotEquals) out.insert(condition->b);
  }
  return out;
}

std::size_t GraphPattern::triple_pattern_count() const {
  std::size_t n = patterns.size();
  for (const auto& c : children) n += c.triple_pattern_count();
  return n;
}

std::size_t GraphPattern::count_kind(Kind k) const {
  std::size_t n = (kind == k) ? 1 : 0;
  for (const auto& c : children) n += c.count_kind(k);
  return n;
}

namespace {

void check_filters(const GraphPattern& p) {
  if (p.kind == GraphPattern::Kind::Filter) {
    auto bound = p.children[0].bound_vars();
    const FilterCondition& c = *p.condition;
    if (!bound.count(c.a) ||
        (c.kind == FilterCondition::Kind::NotEquals && !bound.count(c.b))) {
      throw std::invalid_argument("filter references a variable not bound by its inner pattern");
    }
  }
  for (const auto& c : p.children) check_filters(c);
}

bool unify_position(const PatternTerm& pt, const Term& actual, Binding& b) {
  if (!is_var(pt)) return as_term(pt) == actual;
  auto [it, inserted] = b.emplace(as_var(pt), actual);
  return inserted || it->second == actual;
}

/// cheap rejection before the binding is copied: ground and already-bound
/// positions must agree with the triple
bool position_viable(const PatternTerm& pt, const Term& actual, const Binding& b) {
  if (!is_var(pt)) return as_term(pt) == actual;
  auto it = b.find(as_var(pt));
  return it == b.end() || it->second == actual;
}

bool filter_passes(const FilterCondition& c, const Binding& b) {
  const Term& a = b.at(c.a);
  if (c.kind == FilterCondition::Kind::In) {
    if (!is_iri(a)) return false;
    return std::find(c.allowed.begin(), c.allowed.end(), as_iri(a)) != c.allowed.end();
  }
  return a != b.at(c.b);
}

bool compatible(const Binding& a, const Binding& b) {
  for (const auto& [v, t] : a) {
    auto it = b.find(v);
    if (it != b.end() && it->second != t) return false;
  }
  return true;
}

Binding merged(const Binding& a, const Binding& b) {
  Binding out = a;
  out.insert(b.begin(), b.end());
  return out;
}

/// number of variables in tp not bound in `bound`
std::size_t unbound_count(const TriplePattern& tp, const std::set<Var>& bound) {
  std::set<Var> vars;
  collect_vars(tp, vars);
  std::size_t n = 0;
  for (const auto& v : vars) {
    if (!bound.count(v)) ++n;
  }
  return n;
}

/// true if tp mentions at least one variable from `bound`
bool shares_bound_var(const TriplePattern& tp, const std::set<Var>& bound) {
  std::set<Var> vars;
  collect_vars(tp, vars);
  for (const auto& v : vars) {
    if (bound.count(v)) return true;
  }
  return false;
}

/// Join order for a BGP: repeatedly pick the pattern with the fewest
/// still-unbound variables, preferring patterns connected to the already
/// bound ones, so selective patterns run before unconstrained ones and
/// intermediate results never cross-product. Pure reordering; conjunction
/// semantics are order-independent.
std::vector<const TriplePattern*> join_order(const std::vector<TriplePattern>& patterns) {
  std::vector<const TriplePattern*> order;
  std::vector<bool> used(patterns.size(), false);
  std::set<Var> bound;
  for (std::size_t step = 0; step < patterns.size(); ++step) {
    std::size_t best = patterns.size();
    std::size_t best_cost = SIZE_MAX;
    for (std::size_t i = 0; i < patterns.size(); ++i) {
      if (used[i]) continue;
      std::size_t cost = 2 * unbound_count(patterns[i], bound);
      if (!bound.empty() && !shares_bound_var(patterns[i], bound)) ++cost;
      if (cost < best_cost) {
        best_cost = cost;
        best = i;
      }
    }
    used[best] = true;
    order.push_back(&patterns[best]);
    collect_vars(patterns[best], bound);
  }
  return order;
}

std::vector<Binding> eval(const Graph& g, const GraphPattern& p) {
  switch (p.kind) {
    case GraphPattern::Kind::Bgp: {
      std::vector<Binding> acc{Binding{}};
      for (const TriplePattern* tp : join_order(p.patterns)) {
        std::vector<Binding> next;
        for (const auto& partial : acc) {
          for (const auto& t : g) {
            if (!position_viable(tp->subject, Term{t.subject}, partial) ||
                !position_viable(tp->predicate, Term{t.predicate}, partial) ||
                !position_viable(tp->object, t.object, partial)) {
              continue;
            }
            Binding b = partial;
            if (unify_position(tp->subject, Term{t.subject}, b) &&
                unify_position(tp->predicate, Term{t.predicate}, b) &&
                unify_position(tp->object, t.object, b)) {
              next.push_back(std::move(b));
            }
          }
        }
        acc = std::move(next);
        if (acc.empty()) break;
      }
      return acc;
    }
    case GraphPattern::Kind::Join: {
      std::vector<Binding> acc{Binding{}};
      for (const auto& child : p.children) {
        std::vector<Binding> rhs = eval(g, child);
        std::vector<Binding> next;
        for (const auto& a : acc) {
          for (const auto& b : rhs) {
            if (compatible(a, b)) next.push_back(merged(a, b));
          }
        }
        acc = std::move(next);
        if (acc.empty()) break;
      }
      return acc;
    }
    case GraphPattern::Kind::Union: {
      std::vector<Binding> out = eval(g, p.children[0]);
      std::vector<Binding> right = eval(g, p.children[1]);
      out.insert(out.end(), right.begin(), right.end());
      return out;
    }
    case GraphPattern::Kind::Filter: {
      std::vector<Binding> inner = eval(g, p.children[0]);
      std::vector<Binding> out;
      for (auto& b : inner) {
        if (filter_passes(*p.condition, b)) out.push_back(std::move(b));
      }
      return out;
    }
  }
  return {};
}

}  // namespace

std::set<Binding> evaluate(const Graph& g, const GraphPattern& pattern,
                           const std::vector<Var>& projection) {
  check_filters(pattern);
  auto bound = pattern.bound_vars();
  for (const auto& v : projection) {
    if (!bound.count(v)) {
      throw std::invalid_argument("projection variable ?" + v.name +
                                  " is not bound by the pattern");
    }
  }
  std::set<Binding> out;
  for (const auto& full : eval(g, pattern)) {
    Binding projected;
    for (const auto& v : projection) projected.emplace(v, full.at(v));
    out.insert(std::move(projected));
  }
  return out;
}

namespace {

// Shared body of the dependency query: producer ?c1, consumer ?c2,
// matching ?resource, IO connection in either direction.
GraphPattern dependency_body(const Vocabulary& v) {
  Var c1{"c1"}, c2{"c2"}, f1{"f1"}, f2{"f2"}, resource{"resource"}, io{"io"};
  GraphPattern body = GraphPattern::bgp({
      {c1, Term{v.rdf_type}, Term{v.component}},
      {c2, Term{v.rdf_type}, Term{v.component}},
      {c1, Term{v.has}, f1},
      {f1, Term{v.rdf_type}, Term{v.production}},
      {f1, Term{v.produces}, resource},
      {c2, Term{v.has}, f2},
      {f2, Term{v.rdf_type}, Term{v.consumption}},
      {f2, Term{v.consumes}, resource},
  });
  GraphPattern exchange = GraphPattern::union_of(
      GraphPattern::bgp({{c1, io, c2}}), GraphPattern::bgp({{c2, io, c1}}));
  GraphPattern joined = GraphPattern::join({std::move(body), std::move(exchange)});
  return GraphPattern::filter(
      FilterCondition::in(io, {v.input_from, v.outputs_to}), std::move(joined));
}

}  // namespace

Query dependency_query_unfiltered(const Vocabulary& v) {
  return {dependency_body(v), {Var{"c1"}, Var{"io"}, Var{"c2"}, Var{"resource"}}};
}

Query dependency_query(const Vocabulary& v) {
  GraphPattern p = GraphPattern::filter(
      FilterCondition::not_equals(Var{"c1"}, Var{"c2"}), dependency_body(v));
  return {std::move(p), {Var{"c1"}, Var{"io"}, Var{"c2"}, Var{"resource"}}};
}

Query redundancy_query(const Vocabulary& v) {
  Var c1{"c1"}, c2{"c2"}, c3{"c3"}, f1{"f1"}, f2{"f2"}, f3{"f3"},
      io1{"io1"}, io2{"io2"}, resource{"resource"};
  GraphPattern types_and_functions = GraphPattern::bgp({
      {c1, Term{v.rdf_type}, Term{v.component}},
      {c3, Term{v.rdf_type}, Term{v.component}},
      {c2, Term{v.rdf_type}, Term{v.component}},
      {c1, Term{v.has}, f1},
      {f1, Term{v.rdf_type}, Term{v.production}},
      {f1, Term{v.produces}, resource},
      {c3, Term{v.has}, f2},
      {f2, Term{v.rdf_type}, Term{v.production}},
      {f2, Term{v.produces}, resource},
      {c2, Term{v.has}, f3},
      {f3, Term{v.rdf_type}, Term{v.consumption}},
      {f3, Term{v.consumes}, resource},
  });
  GraphPattern exchange1 = GraphPattern::union_of(
      GraphPattern::bgp({{c1, io1, c2}}), GraphPattern::bgp({{c2, io1, c1}}));
  GraphPattern exchange2 = GraphPattern::union_of(
      GraphPattern::bgp({{c3, io2, c2}}), GraphPattern::bgp({{c2, io2, c3}}));
  GraphPattern joined = GraphPattern::join(
      {std::move(types_and_functions), std::move(exchange1), std::move(exchange2)});
  GraphPattern p = GraphPattern::filter(
      FilterCondition::not_equals(c1, c3),
      GraphPattern::filter(
          FilterCondition::in(io2, {v.input_from, v.outputs_to}),
          GraphPattern::filter(FilterCondition::in(io1, {v.input_from, v.outputs_to}),
                               std::move(joined))));
  return {std::move(p), {c1, c3, resource, c2}};
}

}  // namespace ftsynth
