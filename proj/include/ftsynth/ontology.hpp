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
#include <vector>

#include "ftsynth/rdf.hpp"
#include "ftsynth/vocab.hpp"

namespace ftsynth {

struct Issue {
  std::string code;
  std::string message;
  std::vector<Triple> offending;
};

struct ValidationReport {
  std::vector<Issue> errors;
  std::vector<Issue> warnings;

  bool ok() const { return errors.empty(); }
};

// error codes
inline constexpr const char* kPartofCycle = "PARTOF_CYCLE";
inline constexpr const char* kPartofNotComponent = "PARTOF_NOT_COMPONENT";
inline constexpr const char* kIoNotComponent = "IO_NOT_COMPONENT";
inline constexpr const char* kHasMalformed = "HAS_MALFORMED";
inline constexpr const char* kProducesMalformed = "PRODUCES_MALFORMED";
inline constexpr const char* kConsumesMalformed = "CONSUMES_MALFORMED";
inline constexpr const char* kNoComponents = "NO_COMPONENTS";
// warning codes
inline constexpr const char* kSystemCount = "SYSTEM_COUNT";
inline constexpr const char* kUnsatisfiedConsumption = "UNSATISFIED_CONSUMPTION";
inline constexpr const char* kComponentWithoutFunction = "COMPONENT_WITHOUT_FUNCTION";

/// Forward-chaining closure under four rules, applied to fixpoint:
///   R1  (a, partOf, b), (b, partOf, c)   => (a, partOf, c)
///   R2  (f, produces, r)                 => (f, rdf:type, Production)
///   R3  (f, consumes, r)                 => (f, rdf:type, Consumption)
///   R4  (x, rdf:type, C), (C, subclassOf, D) => (x, rdf:type, D)
/// Idempotent and monotone.
Graph infer(const Graph& g, const Vocabulary& v);

/// Checks an inference-closed graph against the conceptual model. Errors
/// make downstream stages refuse the graph; warnings do not.
ValidationReport validate(const Graph& g, const Vocabulary& v);

/// Components typed Component with no outgoing partOf triple, sorted.
std::vector<Iri> system_candidates(const Graph& g, const Vocabulary& v);

/// The unique system component. Throws NoSystemError or
/// AmbiguousSystemError when there is no unique candidate.
Iri find_system(const Graph& g, const Vocabulary& v);

}  // namespace ftsynth
