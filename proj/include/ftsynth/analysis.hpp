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

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "ftsynth/depgraph.hpp"
#include "ftsynth/synthesis.hpp"

namespace ftsynth {

struct FailureScenario {
  std::set<std::string> failed_bes;
};

struct CutSet {
  std::set<std::string> bes;

  auto operator<=>(const CutSet&) const = default;
};

/// Boolean value of the top event under the scenario: a basic event is
/// true iff it failed, OR/AND gates combine children, each node evaluated
/// once over the DAG. Throws std::invalid_argument for an id that does
/// not name a basic event.
bool evaluate(const FaultTree& ft, const FailureScenario& s);

/// Exact minimal cut sets by top-down expansion (OR = union of families,
/// AND = pairwise set unions) with absorption. Throws ResourceLimitError
/// when an intermediate family exceeds `family_cap`. Result is canonical:
/// sorted by size, then lexicographically.
std::vector<CutSet> minimal_cut_sets(const FaultTree& ft,
                                     std::size_t family_cap = 1'000'000);

/// Independent oracle: enumerate every basic-event subset, keep the ones
/// that fail the top event and are minimal. Requires <= 20 basic events.
std::vector<CutSet> brute_force_cut_sets(const FaultTree& ft);

/// Least fixpoint of failure propagation: starting from the internally
/// failed components, a component fails when for some consumed resource
/// every supplying producer has failed. `red` is consulted for the
/// multi-producer supplier sets; by construction these coincide with the
/// per-resource producer sets of `d`.
std::set<Iri> propagate(const DependencyGraph& d, const std::vector<RedundancyGroup>& red,
                        const std::set<Iri>& internal);

struct Counterexample {
  std::set<Iri> failed_components;
  bool ft_failed;
  bool propagation_failed;
};

struct EquivalenceReport {
  bool exhaustive = true;
  std::uint64_t subsets_checked = 0;
  std::uint64_t seed = 0;
  std::vector<Counterexample> counterexamples;

  bool ok() const { return counterexamples.empty(); }
  std::string to_string() const;
};

struct EquivalenceOptions {
  std::uint64_t seed = 42;
  /// sample count when the reachable component set is too large to sweep
  /// exhaustively (> 16 components)
  std::uint64_t random_samples = 10'000;
  /// evaluate subsets with OpenMP when available; the report is identical
  /// either way
  bool parallel = true;
};

/// Cross-validates the synthesized tree against the propagation fixpoint:
/// for every subset S of reachable components, top fails in the tree
/// under the internal faults of S iff propagation from S reaches the top
/// component. Exhaustive up to 16 reachable components, seeded uniform
/// sampling beyond that.
EquivalenceReport check_equivalence(const DependencyGraph& d,
                                    const std::vector<RedundancyGroup>& red,
                                    const FaultTree& ft, const Iri& top,
                                    const EquivalenceOptions& opts = {});

}  // namespace ftsynth
