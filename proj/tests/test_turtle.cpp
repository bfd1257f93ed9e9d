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

#include "ftsynth/errors.hpp"
#include "ftsynth/turtle.hpp"
#include "support.hpp"

using namespace ftsynth;
namespace tst = ftsynth::testing;

TEST_CASE("graph has set semantics and deterministic order") {
  Graph g;
  Triple t{Iri{"http://ex/s"}, Iri{"http://ex/p"}, Term{Iri{"http://ex/o"}}};
  g.insert(t);
  g.insert(t);
  CHECK(g.size() == 1);

  Graph h;
  h.insert({Iri{"http://ex/b"}, Iri{"http://ex/p"}, Term{Iri{"http://ex/o"}}});
  h.insert({Iri{"http://ex/a"}, Iri{"http://ex/p"}, Term{Iri{"http://ex/o"}}});
  CHECK(h.begin()->subject == Iri{"http://ex/a"});
}

TEST_CASE("parses a prefixed partOf statement") {
  Graph g = parse_turtle("@prefix : <http://ex/>. :IgnitionSystem1 :partOf :LycomingO320.");
  REQUIRE(g.size() == 1);
  CHECK(g.begin()->subject == Iri{"http://ex/IgnitionSystem1"});
  CHECK(g.begin()->predicate == Iri{"http://ex/partOf"});
  CHECK(g.begin()->object == Term{Iri{"http://ex/LycomingO320"}});
}

TEST_CASE("empty document parses to the empty graph") {
  CHECK(parse_turtle("").empty());
  CHECK(parse_turtle("  # just a comment\n").empty());
}

TEST_CASE("the keyword a expands to rdf:type") {
  Graph g = parse_turtle("@prefix : <http://ex/>. :Magnetto1 a :Component.");
  REQUIRE(g.size() == 1);
  CHECK(g.begin()->predicate == kRdfType);
  CHECK(g.begin()->object == Term{Iri{"http://ex/Component"}});
}

TEST_CASE("predicate and object lists") {
  Graph g = parse_turtle(
      "@prefix : <http://ex/>.\n"
      ":f :produces :r1, :r2 ;\n"
      "   :consumes :r3 .\n");
  CHECK(g.size() == 3);
  CHECK(g.contains(Iri{"http://ex/f"}, Iri{"http://ex/produces"}, Term{Iri{"http://ex/r2"}}));
  CHECK(g.contains(Iri{"http://ex/f"}, Iri{"http://ex/consumes"}, Term{Iri{"http://ex/r3"}}));
}

TEST_CASE("literals with optional datatype") {
  Graph g = parse_turtle(
      "@prefix : <http://ex/>. @prefix xsd: <http://www.w3.org/2001/XMLSchema#>.\n"
      ":x :label \"engine \\\"V2\\\"\" . :x :name \"m1\"^^xsd:string .");
  CHECK(g.size() == 2);
  CHECK(g.contains(Iri{"http://ex/x"}, Iri{"http://ex/label"},
                   Term{Literal{"engine \"V2\"", std::nullopt}}));
  CHECK(g.contains(Iri{"http://ex/x"}, Iri{"http://ex/name"},
                   Term{Literal{"m1", Iri{"http://www.w3.org/2001/XMLSchema#string"}}}));
}

TEST_CASE("rejections carry line and column") {
  CHECK_THROWS_AS(parse_turtle(":x :p :o ."), ParseError);  // undefined prefix
  CHECK_THROWS_AS(parse_turtle("@prefix : <http://ex/>. [] :p :o ."), ParseError);
  CHECK_THROWS_AS(parse_turtle("@prefix : <http://ex/>. _:b :p :o ."), ParseError);
  CHECK_THROWS_AS(parse_turtle("@prefix : <http://ex/>. \"lit\" :p :o ."), ParseError);
  CHECK_THROWS_AS(parse_turtle("@prefix : <http://ex/>. :x :p 42 ."), ParseError);
  CHECK_THROWS_AS(parse_turtle("@prefix : <http://ex/>. :x :p \"s\"@en ."), ParseError);
  CHECK_THROWS_AS(parse_turtle("@prefix : <http://ex/>. :x :p (:a :b) ."), ParseError);
  CHECK_THROWS_AS(parse_turtle("@prefix : <http://ex/>. :x :p :o"), ParseError);

  try {
    parse_turtle("@prefix : <http://ex/>.\n:x :p\n  _:blank .");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(std::string(e.what()).find("blank") != std::string::npos);
  }
}

TEST_CASE("serialization is deterministic and round-trips") {
  const Graph& g = tst::fixture_raw();
  std::string once = serialize_turtle(g);
  std::string twice = serialize_turtle(g);
  CHECK(once == twice);
  CHECK(parse_turtle(once) == g);
}

TEST_CASE("empty graph serializes to prefix directives only") {
  Graph g;
  CHECK(serialize_turtle(g).empty());
  g.set_prefix("ex", Iri{"http://ex/"});
  CHECK(serialize_turtle(g) == "@prefix ex: <http://ex/> .\n");
}

TEST_CASE("single-triple graph serializes to one statement line") {
  Graph g;
  g.set_prefix("", Iri{"http://ex/"});
  g.insert({Iri{"http://ex/a"}, Iri{"http://ex/p"}, Term{Iri{"http://ex/b"}}});
  CHECK(serialize_turtle(g) == "@prefix : <http://ex/> .\n\n:a :p :b .\n");
}

TEST_CASE("round trip holds on random graphs") {
  std::mt19937_64 rng(1234);
  for (int i = 0; i < 100; ++i) {
    Graph g = tst::random_plain_graph(rng);
    CAPTURE(i);
    CHECK(parse_turtle(serialize_turtle(g)) == g);
  }
}

TEST_CASE("iri local names are sanitized") {
  CHECK(local_name(Iri{"http://ex/vocab#LycomingO320"}) == "LycomingO320");
  CHECK(local_name(Iri{"http://ex/path/Spark"}) == "Spark");
  CHECK(local_name(Iri{"http://ex/odd%20name"}) == "odd_20name");
}
