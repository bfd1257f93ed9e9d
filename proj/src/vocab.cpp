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

#include "ftsynth/vocab.hpp"

#include <set>
#include <stdexcept>

namespace ftsynth {

Vocabulary Vocabulary::with_namespace(std::string_view ns) {
  if (ns.empty()) throw std::invalid_argument("vocabulary namespace must not be empty");
  std::string base(ns);
  Vocabulary v{
      .ns = Iri{base},
      .component = Iri{base + "Component"},
      .function = Iri{base + "Function"},
      .production = Iri{base + "Production"},
      .consumption = Iri{base + "Consumption"},
      .resource = Iri{base + "Resource"},
      .part_of = Iri{base + "partOf"},
      .has = Iri{base + "has"},
      .produces = Iri{base + "produces"},
      .consumes = Iri{base + "consumes"},
      .input_from = Iri{base + "inputFrom"},
      .outputs_to = Iri{base + "outputsTo"},
      .subclass_of = Iri{base + "subclassOf"},
  };
  std::set<Iri> all{v.component, v.function,   v.production, v.consumption,
                    v.resource,  v.part_of,    v.has,        v.produces,
                    v.consumes,  v.input_from, v.outputs_to, v.subclass_of,
                    v.rdf_type};
  if (all.size() != 13) {
    throw std::invalid_argument("vocabulary IRIs are not pairwise distinct for namespace " + base);
  }
  return v;
}

}  // namespace ftsynth
