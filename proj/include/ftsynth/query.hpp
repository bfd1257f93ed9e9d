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
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "ftsynth/rdf.hpp"
#include "ftsynth/vocab.hpp"

namespace ftsynth {

struct Var {
  std::string name;

  auto operator<=>(const Var&) const = default;
};

using PatternTerm = std::variant<Var, Term>;

inline bool is_var(const PatternTerm& p) { return std::holds_alternative<Var>(p); }
inline const Var& as_var(const PatternTerm& p) { return std::get<Var>(p); }
inline const Term& as_term(const PatternTerm& p) { return std::get<Term>(p); }

struct TriplePattern {
  PatternTerm subject;
  PatternTerm predicate;
  PatternTerm object;
};

struct FilterCondition {
  enum class Kind { In, NotEquals };

  static FilterCondition in(Var v, std::vector<Iri> allowed) {
    return {Kind::In, std::move(v), {}, std::move(allowed)};
  }
  static FilterCondition not_equals(Var a, Var b) {
    return {Kind::NotEquals, std::move(a), std::move(b), {}};
  }

  Kind kind;
  Var a;
  Var b;                     // NotEquals only
  std::vector<Iri> allowed;  // In only
};

/// Basic graph patterns composed with Join, Union and Filter — the
/// fragment needed by the two embedded extraction queries.
struct GraphPattern {
  enum class Kind { Bgp, Join, Union, Filter };

  static GraphPattern bgp(std::vector<TriplePattern> patterns);
  static GraphPattern join(std::vector<GraphPattern> parts);
  static GraphPattern union_of(GraphPattern left, GraphPattern right);
  static GraphPattern filter(FilterCondition condition, GraphPattern inner);

  /// Variables guaranteed to be bound in every solution: all variables of
  /// a Bgp, union over Join parts, intersection over Union branches.
  std::set<Var> bound_vars() const;
  /// All variables mentioned anywhere in the pattern.
  std::set<Var> all_vars() const;
  /// Total number of TriplePattern leaves.
  std::size_t triple_pattern_count() const;
  std::size_t count_kind(Kind k) const;

  Kind kind = Kind::Bgp;
  std::vector<TriplePattern> patterns;     // Bgp
  std::vector<GraphPattern> children;      // Join (n), Union (2), Filter (1)
  std::optional<FilterCondition> condition;  // Filter
};

using Binding = std::map<Var, Term>;

/// Evaluates the pattern over g and projects to `projection`, with set
/// (DISTINCT) semantics and deterministic iteration order. Throws
/// std::invalid_argument if a filter references a variable not bound by
/// its inner pattern, or a projection variable does not occur in the
/// pattern.
std::set<Binding> evaluate(const Graph& g, const GraphPattern& pattern,
                           const std::vector<Var>& projection);

struct Query {
  GraphPattern pattern;
  std::vector<Var> projection;
};

/// The functional-dependency extraction query. ?c1 is the producer, ?c2
/// the consumer. Projects (?c1, ?io, ?c2, ?resource) and filters out
/// ?c1 == ?c2 self-dependencies.
Query dependency_query(const Vocabulary& v);

/// dependency_query without the self-dependency filter; used only to
/// detect and warn about self-loops the filtered query suppresses.
Query dependency_query_unfiltered(const Vocabulary& v);

/// The redundancy-structure extraction query: two producers ?c1 != ?c3 of
/// the same ?resource, both IO-connected to consumer ?c2. Projects
/// (?c1, ?c3, ?resource, ?c2).
Query redundancy_query(const Vocabulary& v);

}  // namespace ftsynth
