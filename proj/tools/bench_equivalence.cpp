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

// Times the subset sweep of check_equivalence, serial vs OpenMP, on a
// random layered dependency graph, and verifies both produce the same
// report.

#include <chrono>
#include <cstdint>
#include <iostream>
#include <random>
#include <string>

#include "ftsynth/analysis.hpp"
#include "ftsynth/synthesis.hpp"

using namespace ftsynth;

namespace {

Iri comp(int i) { return Iri{"http://bench/c" + std::to_string(i)}; }
Iri res(int i) { return Iri{"http://bench/r" + std::to_string(i)}; }

// Layered DAG: component i depends only on components with smaller index,
// with a redundancy group per consumed resource at probability 0.3.
void build_model(int n, std::uint64_t seed, DependencyGraph& d,
                 std::vector<RedundancyGroup>& red) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  for (int i = 0; i < n; ++i) d.components.insert(comp(i));
  // backbone chain keeps every component reachable from the top
  for (int i = 1; i < n; ++i) d.add_edge(comp(i), comp(i - 1), res(9 + i));
  for (int i = 1; i < n; ++i) {
    int resources = 1 + static_cast<int>(rng() % 3);
    for (int r = 0; r < resources; ++r) {
      Iri resource = res(static_cast<int>(rng() % 3) + 3 * r);
      std::set<Iri> producers;
      producers.insert(comp(static_cast<int>(rng() % i)));
      if (coin(rng) < 0.3 && i >= 2) {
        while (producers.size() < 2) {
          producers.insert(comp(static_cast<int>(rng() % i)));
        }
      }
      for (const auto& p : producers) d.add_edge(comp(i), p, resource);
      if (producers.size() >= 2) red.push_back({comp(i), resource, producers});
    }
  }
}

double run(const DependencyGraph& d, const std::vector<RedundancyGroup>& red,
           const FaultTree& ft, const Iri& top, const EquivalenceOptions& opts,
           EquivalenceReport& report) {
  auto start = std::chrono::steady_clock::now();
  report = check_equivalence(d, red, ft, top, opts);
  auto stop = std::chrono::steady_clock::now();
  return std::chrono::duration<double>(stop - start).count();
}

}  // namespace

int main(int argc, char** argv) {
  int n = argc > 1 ? std::stoi(argv[1]) : 24;
  std::uint64_t samples = argc > 2 ? std::stoull(argv[2]) : 2'000'000;

  DependencyGraph d;
  std::vector<RedundancyGroup> red;
  build_model(n, 7, d, red);
  Iri top = comp(n - 1);
  FaultTree ft = synthesize(d, red, top);

  EquivalenceOptions serial{.seed = 42, .random_samples = samples, .parallel = false};
  EquivalenceOptions parallel = serial;
  parallel.parallel = true;

  EquivalenceReport rs, rp;
  double ts = run(d, red, ft, top, serial, rs);
  double tp = run(d, red, ft, top, parallel, rp);

  std::cout << "components: " << n << ", subsets: " << rs.subsets_checked
            << (rs.exhaustive ? " (exhaustive)" : " (sampled)") << "\n"
            << "serial:   " << ts << " s\n"
            << "parallel: " << tp << " s (speedup " << ts / tp << "x)\n";

  bool same = rs.exhaustive == rp.exhaustive && rs.subsets_checked == rp.subsets_checked &&
              rs.counterexamples.size() == rp.counterexamples.size() &&
              rs.to_string() == rp.to_string();
  std::cout << "reports identical: " << (same ? "yes" : "NO") << ", counterexamples: "
            << rs.counterexamples.size() << "\n";
  return same ? 0 : 1;
}
