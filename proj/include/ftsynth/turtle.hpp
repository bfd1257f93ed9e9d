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

#include <string>
#include <string_view>

#include "ftsynth/rdf.hpp"

namespace ftsynth {

/// Parse a Turtle document (UTF-8). Supported subset: @prefix directives,
/// prefixed names, <IRI> references, "string" literals with optional
/// ^^datatype, the keyword "a", predicate lists (";"), object lists (","),
/// and "#" comments. Blank nodes, collections, numeric shorthand and
/// language tags are rejected with a ParseError carrying line/column.
Graph parse_turtle(std::string_view document);

/// Deterministic Turtle serialization: prefix directives sorted by name,
/// statements sorted by (subject, predicate, object), grouped with ";"
/// and ",". parse_turtle(serialize_turtle(g)) == g as a triple set, and
/// equal graphs serialize to identical bytes.
std::string serialize_turtle(const Graph& g);

}  // namespace ftsynth
