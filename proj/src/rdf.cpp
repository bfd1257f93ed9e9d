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

#include "ftsynth/rdf.hpp"

#include <cctype>

namespace ftsynth {

std::set<Iri> Graph::subjects(const Iri& p, const Term& o) const {
  std::set<Iri> out;
  for (const auto& t : triples_) {
    if (t.predicate == p && t.object == o) out.insert(t.subject);
  }
  return out;
}

std::set<Iri> Graph::iri_objects(const Iri& s, const Iri& p) const {
  std::set<Iri> out;
  for (const auto& t : triples_) {
    if (t.subject == s && t.predicate == p && is_iri(t.object)) {
      out.insert(as_iri(t.object));
    }
  }
  return out;
}

std::vector<std::pair<Iri, Iri>> Graph::iri_pairs(const Iri& p) const {
  std::vector<std::pair<Iri, Iri>> out;
  for (const auto& t : triples_) {
    if (t.predicate == p && is_iri(t.object)) {
      out.emplace_back(t.subject, as_iri(t.object));
    }
  }
  return out;
}

std::set<Iri> Graph::instances_of(const Iri& cls) const {
  return subjects(kRdfType, Term{cls});
}

std::string local_name(const Iri& iri) {
  const std::string& v = iri.value;
  std::size_t cut = v.find_last_of("#/");
  std::string tail = (cut == std::string::npos) ? v : v.substr(cut + 1);
  std::string out;
  out.reserve(tail.size());
  for (char c : tail) {
    out.push_back(std::isalnum(static_cast<unsigned char>(c)) ? c : '_');
  }
  if (out.empty()) out = "n";
  return out;
}

}  // namespace ftsynth
