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

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace ftsynth {

/// An absolute IRI. Prefixed names are expanded before an Iri is built,
/// so equality is plain string equality.
struct Iri {
  std::string value;

  auto operator<=>(const Iri&) const = default;
};

struct Literal {
  std::string lexical;
  std::optional<Iri> datatype;

  auto operator<=>(const Literal&) const = default;
};

using Term = std::variant<Iri, Literal>;

inline bool is_iri(const Term& t) { return std::holds_alternative<Iri>(t); }
inline const Iri& as_iri(const Term& t) { return std::get<Iri>(t); }
inline const Literal& as_literal(const Term& t) { return std::get<Literal>(t); }

struct Triple {
  Iri subject;
  Iri predicate;
  Term object;

  auto operator<=>(const Triple&) const = default;
};

inline const Iri kRdfType{"http://www.w3.org/1999/02/22-rdf-syntax-ns#type"};

/// A set of triples plus the prefix map of the document it came from.
/// Triples are kept sorted by (subject, predicate, object), so iteration
/// is deterministic. Two graphs compare equal iff their triple sets do;
/// the prefix map is serialization metadata only.
class Graph {
 public:
  using const_iterator = std::set<Triple>::const_iterator;

  void insert(Triple t) { triples_.insert(std::move(t)); }
  bool contains(const Triple& t) const { return triples_.count(t) > 0; }
  bool contains(const Iri& s, const Iri& p, const Term& o) const {
    return contains(Triple{s, p, o});
  }
  std::size_t size() const { return triples_.size(); }
  bool empty() const { return triples_.empty(); }

  const_iterator begin() const { return triples_.begin(); }
  const_iterator end() const { return triples_.end(); }

  void set_prefix(std::string name, Iri ns) {
    prefixes_[std::move(name)] = std::move(ns);
  }
  const std::map<std::string, Iri>& prefixes() const { return prefixes_; }

  /// All subjects s with (s, p, o) in the graph.
  std::set<Iri> subjects(const Iri& p, const Term& o) const;
  /// All IRI objects o with (s, p, o) in the graph.
  std::set<Iri> iri_objects(const Iri& s, const Iri& p) const;
  /// All (s, o) IRI pairs related by predicate p.
  std::vector<std::pair<Iri, Iri>> iri_pairs(const Iri& p) const;
  /// All instances typed (x, rdf:type, cls).
  std::set<Iri> instances_of(const Iri& cls) const;

  bool operator==(const Graph& o) const { return triples_ == o.triples_; }

 private:
  std::set<Triple> triples_;
  std::map<std::string, Iri> prefixes_;
};

/// Last path segment or fragment of an IRI, sanitized to [A-Za-z0-9_].
std::string local_name(const Iri& iri);

}  // namespace ftsynth
