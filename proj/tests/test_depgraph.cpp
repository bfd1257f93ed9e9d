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

#include <doctest.h>

#include "ftsynth/depgraph.hpp"
#include "support.hpp"

using namespace ftsynth;
namespace tst = ftsynth::testing;

namespace {

const Vocabulary& v() { return tst::vocab(); }

std::set<Iri> edge_resources(const DependencyGraph& d, const std::string& consumer,
                             const std::string& producer) {
  auto it = d.edges.find({tst::nsiri(consumer), tst::nsiri(producer)});
  REQUIRE(it != d.edges.end());
  return it->second;
}

/// groups derived directly from the dependency graph: every (consumer,
/// resource) with two or more producers
std::vector<RedundancyGroup> groups_from_depgraph(const DependencyGraph& d) {
  std::vector<RedundancyGroup> out;
  for (const auto& c : d.components) {
    for (const auto& [r, producers] : d.producers_by_resource(c)) {
      if (producers.size() >= 2) out.push_back({c, r, producers});
    }
  }
  return out;
}

}  // namespace

TEST_CASE("fixture dependency graph has the seven expected edges") {
  auto d = extract_dependencies(tst::fixture(), v());
  CHECK(d.components.size() == 9);
  REQUIRE(d.edges.size() == 7);
  CHECK(edge_resources(d, "Magnetto1", "Crankshaft") ==
        std::set<Iri>{tst::nsiri("MechanicalEnergy")});
  CHECK(edge_resources(d, "Magnetto2", "Crankshaft") ==
        std::set<Iri>{tst::nsiri("MechanicalEnergy")});
  CHECK(edge_resources(d, "SparkPlug1", "Magnetto1") ==
        std::set<Iri>{tst::nsiri("Electricity")});
  CHECK(edge_resources(d, "SparkPlug2", "Magnetto2") ==
        std::set<Iri>{tst::nsiri("Electricity")});
  CHECK(edge_resources(d, "Cylinder", "SparkPlug1") == std::set<Iri>{tst::nsiri("Spark")});
  CHECK(edge_resources(d, "Cylinder", "SparkPlug2") == std::set<Iri>{tst::nsiri("Spark")});
  CHECK(edge_resources(d, "LycomingO320", "Cylinder") ==
        std::set<Iri>{tst::nsiri("MechanicalPower")});
}

TEST_CASE("no edge without an IO connection") {
  const Vocabulary& voc = v();
  Graph g;
  g.insert({voc.production, voc.subclass_of, Term{voc.function}});
  g.insert({voc.consumption, voc.subclass_of, Term{voc.function}});
  Iri p = tst::nsiri("P"), c = tst::nsiri("C"), r = tst::nsiri("R");
  g.insert({p, voc.rdf_type, Term{voc.component}});
  g.insert({c, voc.rdf_type, Term{voc.component}});
  g.insert({p, voc.has, Term{tst::nsiri("pf")}});
  g.insert({tst::nsiri("pf"), voc.produces, Term{r}});
  g.insert({c, voc.has, Term{tst::nsiri("cf")}});
  g.insert({tst::nsiri("cf"), voc.consumes, Term{r}});

  auto d = extract_dependencies(infer(g, voc), voc);
  CHECK(d.edges.empty());
  CHECK(d.components.size() == 2);  // isolated components are retained

  SUBCASE("an IO connection with mismatched resources still yields no edge") {
    Graph h = g;
    Iri r2 = tst::nsiri("R2");
    h.insert({c, voc.input_from, Term{p}});
    // rewire the consumption to a different resource
    Graph mismatched;
    for (const auto& t : h) {
      if (t.subject == tst::nsiri("cf") && t.predicate == voc.consumes) {
        mismatched.insert({t.subject, t.predicate, Term{r2}});
      } else {
        mismatched.insert(t);
      }
    }
    CHECK(extract_dependencies(infer(mismatched, voc), voc).edges.empty());
  }

  SUBCASE("the IO connection completes the edge") {
    g.insert({c, voc.input_from, Term{p}});
    auto d2 = extract_dependencies(infer(g, voc), voc);
    REQUIRE(d2.edges.size() == 1);
    CHECK(d2.edges.begin()->first == std::make_pair(c, p));
  }
}

TEST_CASE("self-dependency is excluded with a warning") {
  const Vocabulary& voc = v();
  Graph g;
  g.insert({voc.production, voc.subclass_of, Term{voc.function}});
  g.insert({voc.consumption, voc.subclass_of, Term{voc.function}});
  Iri c = tst::nsiri("Selfie"), r = tst::nsiri("R"), f = tst::nsiri("f");
  g.insert({c, voc.rdf_type, Term{voc.component}});
  g.insert({c, voc.has, Term{f}});
  g.insert({f, voc.produces, Term{r}});
  g.insert({f, voc.consumes, Term{r}});
  g.insert({c, voc.outputs_to, Term{c}});
  std::vector<std::string> warnings;
  auto d = extract_dependencies(infer(g, voc), voc, &warnings);
  CHECK(d.edges.empty());
  REQUIRE(warnings.size() == 1);
  CHECK(warnings[0].find("Selfie") != std::string::npos);
}

TEST_CASE("fixture redundancy: the two spark plugs") {
  auto groups = extract_redundancy(tst::fixture(), v());
  REQUIRE(groups.size() == 1);
  CHECK(groups[0].consumer == tst::nsiri("Cylinder"));
  CHECK(groups[0].resource == tst::nsiri("Spark"));
  CHECK(groups[0].producers ==
        std::set<Iri>{tst::nsiri("SparkPlug1"), tst::nsiri("SparkPlug2")});
}

TEST_CASE("three producers collapse into one group") {
  const Vocabulary& voc = v();
  Graph g;
  g.insert({voc.production, voc.subclass_of, Term{voc.function}});
  g.insert({voc.consumption, voc.subclass_of, Term{voc.function}});
  Iri c = tst::nsiri("C"), r = tst::nsiri("R"), cf = tst::nsiri("cf");
  g.insert({c, voc.rdf_type, Term{voc.component}});
  g.insert({c, voc.has, Term{cf}});
  g.insert({cf, voc.consumes, Term{r}});
  for (int i = 0; i < 3; ++i) {
    Iri p = tst::nsiri("P" + std::to_string(i)), pf = tst::nsiri("pf" + std::to_string(i));
    g.insert({p, voc.rdf_type, Term{voc.component}});
    g.insert({p, voc.has, Term{pf}});
    g.insert({pf, voc.produces, Term{r}});
    g.insert({c, voc.input_from, Term{p}});
  }
  auto groups = extract_redundancy(infer(g, voc), voc);
  REQUIRE(groups.size() == 1);
  CHECK(groups[0].producers.size() == 3);
}

TEST_CASE("grouped redundancy rows are derivable from the dependency graph") {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 50; ++i) {
    Graph g = tst::random_kg(rng);
    auto d = extract_dependencies(g, v());
    auto groups = extract_redundancy(g, v());
    CAPTURE(i);
    CHECK(groups == groups_from_depgraph(d));
    for (const auto& group : groups) {
      for (const auto& p : group.producers) {
        auto it = d.edges.find({group.consumer, p});
        REQUIRE(it != d.edges.end());
        CHECK(it->second.count(group.resource) == 1);
      }
    }
  }
}

TEST_CASE("extraction is deterministic") {
  auto a = extract_dependencies(tst::fixture(), v());
  auto b = extract_dependencies(tst::fixture(), v());
  CHECK(a == b);
  CHECK(depgraph_to_dot(a, extract_redundancy(tst::fixture(), v())) ==
        depgraph_to_dot(b, extract_redundancy(tst::fixture(), v())));
}
