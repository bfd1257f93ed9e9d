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

#include <stdexcept>
#include <string>
#include <vector>

#include "ftsynth/rdf.hpp"

namespace ftsynth {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

class NoSystemError : public std::runtime_error {
 public:
  NoSystemError() : std::runtime_error("no component qualifies as the system") {}
};

class AmbiguousSystemError : public std::runtime_error {
 public:
  explicit AmbiguousSystemError(std::vector<Iri> candidates)
      : std::runtime_error(describe(candidates)),
        candidates_(std::move(candidates)) {}

  const std::vector<Iri>& candidates() const { return candidates_; }

 private:
  static std::string describe(const std::vector<Iri>& cs) {
    std::string msg = "multiple components qualify as the system:";
    for (const auto& c : cs) msg += " " + c.value;
    return msg;
  }
  std::vector<Iri> candidates_;
};

class TopNotFoundError : public std::runtime_error {
 public:
  explicit TopNotFoundError(const Iri& top)
      : std::runtime_error("top component not in dependency graph: " +
                           top.value) {}
};

class CyclicDependencyError : public std::runtime_error {
 public:
  explicit CyclicDependencyError(std::vector<Iri> cycle)
      : std::runtime_error(describe(cycle)), cycle_(std::move(cycle)) {}

  const std::vector<Iri>& cycle() const { return cycle_; }

 private:
  static std::string describe(const std::vector<Iri>& cycle) {
    std::string msg = "cyclic dependency:";
    for (const auto& c : cycle) msg += " " + c.value;
    return msg;
  }
  std::vector<Iri> cycle_;
};

class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ftsynth
