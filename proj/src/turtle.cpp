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

#include "ftsynth/turtle.hpp"

#include <cctype>
#include <sstream>

#include "ftsynth/errors.hpp"

namespace ftsynth {

namespace {

bool pname_local_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-';
}

class Parser {
 public:
  explicit Parser(std::string_view doc) : doc_(doc) {}

  Graph parse() {
    skip_ws();
    while (!eof()) {
      if (peek() == '@') {
        parse_prefix_directive();
      } else {
        parse_statement();
      }
      skip_ws();
    }
    return std::move(graph_);
  }

 private:
  bool eof() const { return pos_ >= doc_.size(); }
  char peek() const { return doc_[pos_]; }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(line_, col_, msg);
  }

  void advance() {
    if (doc_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip_ws() {
    while (!eof()) {
      char c = peek();
      if (c == '#') {
        while (!eof() && peek() != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        return;
      }
    }
  }

  void expect(char c, const char* what) {
    skip_ws();
    if (eof() || peek() != c) fail(std::string("expected '") + c + "' " + what);
    advance();
  }

  void parse_prefix_directive() {
    for (const char* kw = "@prefix"; *kw; ++kw) {
      if (eof() || peek() != *kw) fail("unknown directive (only @prefix is supported)");
      advance();
    }
    skip_ws();
    // prefix name up to ':'
    std::string name;
    while (!eof() && pname_local_char(peek())) {
      name.push_back(peek());
      advance();
    }
    if (eof() || peek() != ':') fail("expected ':' in @prefix");
    advance();
    skip_ws();
    Iri ns = parse_iriref();
    expect('.', "after @prefix directive");
    graph_.set_prefix(name, ns);
  }

  Iri parse_iriref() {
    if (eof() || peek() != '<') fail("expected IRI reference");
    advance();
    std::string value;
    while (!eof() && peek() != '>') {
      char c = peek();
      if (std::isspace(static_cast<unsigned char>(c))) {
        fail("whitespace inside IRI reference");
      }
      value.push_back(c);
      advance();
    }
    if (eof()) fail("unterminated IRI reference");
    advance();  // '>'
    if (value.empty()) fail("empty IRI reference");
    return Iri{value};
  }

  Iri parse_prefixed_name() {
    std::string prefix;
    while (!eof() && pname_local_char(peek())) {
      prefix.push_back(peek());
      advance();
    }
    if (eof() || peek() != ':') fail("expected prefixed name");
    advance();
    std::string local;
    while (!eof() && pname_local_char(peek())) {
      local.push_back(peek());
      advance();
    }
    auto it = graph_.prefixes().find(prefix);
    if (it == graph_.prefixes().end()) {
      fail("undefined prefix '" + prefix + ":'");
    }
    return Iri{it->second.value + local};
  }

  // IRI in subject/predicate position: IRIREF or prefixed name.
  Iri parse_iri() {
    skip_ws();
    if (eof()) fail("unexpected end of input, expected IRI");
    char c = peek();
    if (c == '<') return parse_iriref();
    if (c == '[' || (c == '_' && pos_ + 1 < doc_.size() && doc_[pos_ + 1] == ':')) {
      fail("blank nodes are not supported");
    }
    if (c == '"') fail("literal not allowed here");
    if (std::isdigit(static_cast<unsigned char>(c)) && !looks_like_pname()) {
      fail("numeric literals are not supported");
    }
    if (pname_local_char(c) || c == ':') return parse_prefixed_name();
    fail(std::string("unexpected character '") + c + "'");
  }

  // A digit may legitimately start a prefixed-name local part only after a
  // ':' somewhere in the token; scan ahead to disambiguate from numbers.
  bool looks_like_pname() const {
    std::size_t p = pos_;
    while (p < doc_.size() && pname_local_char(doc_[p])) ++p;
    return p < doc_.size() && doc_[p] == ':';
  }

  Iri parse_verb() {
    skip_ws();
    if (!eof() && peek() == 'a') {
      // "a" is rdf:type only when not the start of a longer token.
      std::size_t next = pos_ + 1;
      bool standalone = next >= doc_.size() ||
                        (!pname_local_char(doc_[next]) && doc_[next] != ':');
      if (standalone) {
        advance();
        return kRdfType;
      }
    }
    return parse_iri();
  }

  std::string parse_quoted_string() {
    advance();  // opening '"'
    std::string out;
    while (true) {
      if (eof()) fail("unterminated string literal");
      char c = peek();
      if (c == '"') {
        advance();
        return out;
      }
      if (c == '\\') {
        advance();
        if (eof()) fail("unterminated escape sequence");
        char e = peek();
        switch (e) {
          case 't': out.push_back('\t'); break;
          case 'n': out.push_back('\n'); break;
          case 'r': out.push_back('\r'); break;
          case '"': out.push_back('"'); break;
          case '\\': out.push_back('\\'); break;
          default: fail(std::string("unsupported escape '\\") + e + "'");
        }
        advance();
      } else {
        out.push_back(c);
        advance();
      }
    }
  }

  Term parse_object() {
    skip_ws();
    if (eof()) fail("unexpected end of input, expected object");
    char c = peek();
    if (c == '"') {
      std::string lexical = parse_quoted_string();
      if (!eof() && peek() == '@') {
        fail("language tags are not supported");
      }
      std::optional<Iri> datatype;
      if (pos_ + 1 < doc_.size() && peek() == '^' && doc_[pos_ + 1] == '^') {
        advance();
        advance();
        datatype = parse_iri();
      }
      return Literal{std::move(lexical), std::move(datatype)};
    }
    if (c == '(') fail("collections are not supported");
    if (c == '+' || c == '-' ||
        (std::isdigit(static_cast<unsigned char>(c)) && !looks_like_pname())) {
      fail("numeric shorthand literals are not supported");
    }
    if ((c == 't' || c == 'f') && !looks_like_pname()) {
      // 'true'/'false' shorthand would land here; so would a bare word.
      std::size_t p = pos_;
      std::string word;
      while (p < doc_.size() && pname_local_char(doc_[p])) word.push_back(doc_[p++]);
      if (word == "true" || word == "false") fail("boolean shorthand literals are not supported");
    }
    return Term{parse_iri()};
  }

  void parse_statement() {
    Iri subject = parse_iri();
    while (true) {
      Iri predicate = parse_verb();
      while (true) {
        Term object = parse_object();
        graph_.insert(Triple{subject, predicate, std::move(object)});
        skip_ws();
        if (!eof() && peek() == ',') {
          advance();
          continue;
        }
        break;
      }
      skip_ws();
      if (!eof() && peek() == ';') {
        advance();
        skip_ws();
        if (!eof() && peek() == '.') break;  // trailing ';'
        continue;
      }
      break;
    }
    expect('.', "at end of statement");
  }

  std::string_view doc_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
  Graph graph_;
};

// Longest-namespace prefix compression; falls back to <iri>.
std::string render_iri(const Iri& iri, const std::map<std::string, Iri>& prefixes) {
  const std::string* best_name = nullptr;
  std::size_t best_len = 0;
  for (const auto& [name, ns] : prefixes) {
    if (ns.value.size() <= best_len) continue;
    if (iri.value.rfind(ns.value, 0) != 0) continue;
    std::string_view local(iri.value.c_str() + ns.value.size());
    bool ok = true;
    for (char c : local) {
      if (!pname_local_char(c)) {
        ok = false;
        break;
      }
    }
    if (ok) {
      best_name = &name;
      best_len = ns.value.size();
    }
  }
  if (best_name) {
    return *best_name + ":" + iri.value.substr(best_len);
  }
  return "<" + iri.value + ">";
}

std::string render_term(const Term& t, const std::map<std::string, Iri>& prefixes) {
  if (is_iri(t)) return render_iri(as_iri(t), prefixes);
  const Literal& lit = as_literal(t);
  std::string out = "\"";
  for (char c : lit.lexical) {
    switch (c) {
      case '\t': out += "\\t"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      default: out.push_back(c);
    }
  }
  out += "\"";
  if (lit.datatype) out += "^^" + render_iri(*lit.datatype, prefixes);
  return out;
}

}  // namespace

Graph parse_turtle(std::string_view document) { return Parser(document).parse(); }

std::string serialize_turtle(const Graph& g) {
  std::ostringstream out;
  for (const auto& [name, ns] : g.prefixes()) {
    out << "@prefix " << name << ": <" << ns.value << "> .\n";
  }
  if (!g.prefixes().empty() && g.size() > 0) out << "\n";

  auto it = g.begin();
  while (it != g.end()) {
    const Iri& subject = it->subject;
    out << render_iri(subject, g.prefixes());
    bool first_predicate = true;
    while (it != g.end() && it->subject == subject) {
      const Iri& predicate = it->predicate;
      if (!first_predicate) out << " ;\n   ";
      first_predicate = false;
      out << " "
          << (predicate == kRdfType ? "a" : render_iri(predicate, g.prefixes()));
      bool first_object = true;
      while (it != g.end() && it->subject == subject && it->predicate == predicate) {
        out << (first_object ? " " : ", ") << render_term(it->object, g.prefixes());
        first_object = false;
        ++it;
      }
    }
    out << " .\n";
  }
  return out.str();
}

}  // namespace ftsynth
