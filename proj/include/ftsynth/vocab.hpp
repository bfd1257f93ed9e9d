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

#include <string_view>

#include "ftsynth/rdf.hpp"

namespace ftsynth {

inline constexpr std::string_view kDefaultNamespace = "http://ftsynth.example/vocab#";

/// The conceptual-model vocabulary: five classes, seven relations, rdf:type.
/// The namespace is configurable; rdf:type is fixed.
struct Vocabulary {
  Iri ns;

  // classes
  Iri component;
  Iri function;
  Iri production;
  Iri consumption;
  Iri resource;

  // relations
  Iri part_of;
  Iri has;
  Iri produces;
  Iri consumes;
  Iri input_from;
  Iri outputs_to;
  Iri subclass_of;

  Iri rdf_type = kRdfType;

  /// Builds the 13-IRI vocabulary in the given namespace; throws
  /// std::invalid_argument if the IRIs are not pairwise distinct.
  static Vocabulary with_namespace(std::string_view ns = kDefaultNamespace);
};

}  // namespace ftsynth
