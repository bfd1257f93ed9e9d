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

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "ftsynth/analysis.hpp"
#include "ftsynth/depgraph.hpp"
#include "ftsynth/errors.hpp"
#include "ftsynth/ontology.hpp"
#include "ftsynth/query.hpp"
#include "ftsynth/synthesis.hpp"
#include "ftsynth/turtle.hpp"

namespace {

// exit codes
constexpr int kOk = 0;
constexpr int kParseOrIoError = 1;
constexpr int kValidationError = 2;
constexpr int kCounterexamples = 3;
constexpr int kCycleRejected = 4;
constexpr int kBadFlags = 5;

struct Options {
  std::string input;
  std::string format;
  std::string ns;
  std::string top;
  std::string output;
  double default_prob = 0.5;
  bool break_cycles = false;
  std::uint64_t seed = 42;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const Options& opts, const std::string& content) {
  if (opts.output.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(opts.output, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + opts.output + " for writing");
  out << content;
}

ftsynth::Vocabulary vocabulary(const Options& opts) {
  if (!opts.ns.empty()) return ftsynth::Vocabulary::with_namespace(opts.ns);
  if (const char* env = std::getenv("FTSYNTH_NS"); env && *env) {
    return ftsynth::Vocabulary::with_namespace(env);
  }
  return ftsynth::Vocabulary::with_namespace();
}

// parse + inference; inference is idempotent, so pre-closed inputs are fine
ftsynth::Graph load_closed(const Options& opts, const ftsynth::Vocabulary& v) {
  return ftsynth::infer(ftsynth::parse_turtle(read_file(opts.input)), v);
}

void print_report(const ftsynth::ValidationReport& report) {
  for (const auto& e : report.errors) {
    std::cerr << "error [" << e.code << "] " << e.message << "\n";
  }
  for (const auto& w : report.warnings) {
    std::cerr << "warning [" << w.code << "] " << w.message << "\n";
  }
}

// validates and reports; returns false when the graph must be rejected
bool validated(const ftsynth::Graph& g, const ftsynth::Vocabulary& v) {
  auto report = ftsynth::validate(g, v);
  print_report(report);
  return report.ok();
}

ftsynth::Iri pick_top(const Options& opts, const ftsynth::Graph& g,
                      const ftsynth::Vocabulary& v) {
  if (!opts.top.empty()) return ftsynth::Iri{opts.top};
  return ftsynth::find_system(g, v);
}

struct Pipeline {
  ftsynth::DependencyGraph deps;
  std::vector<ftsynth::RedundancyGroup> redundancy;
  ftsynth::FaultTree ft;
};

Pipeline synthesize_pipeline(const Options& opts, const ftsynth::Graph& g,
                             const ftsynth::Vocabulary& v) {
  Pipeline p;
  std::vector<std::string> warnings;
  p.deps = ftsynth::extract_dependencies(g, v, &warnings);
  p.redundancy = ftsynth::extract_redundancy(g, v);
  for (const auto& w : warnings) std::cerr << "warning " << w << "\n";
  p.ft = ftsynth::synthesize(p.deps, p.redundancy, pick_top(opts, g, v),
                             {.break_cycles = opts.break_cycles});
  for (const auto& w : p.ft.warnings) std::cerr << "warning " << w << "\n";
  return p;
}

int cmd_validate(const Options& opts) {
  auto v = vocabulary(opts);
  auto g = load_closed(opts, v);
  auto report = ftsynth::validate(g, v);
  print_report(report);
  std::ostringstream summary;
  summary << report.errors.size() << " error(s), " << report.warnings.size()
          << " warning(s)\n";
  write_output(opts, summary.str());
  return report.ok() ? kOk : kValidationError;
}

int cmd_infer(const Options& opts) {
  auto v = vocabulary(opts);
  auto g = load_closed(opts, v);
  write_output(opts, ftsynth::serialize_turtle(g));
  return kOk;
}

int cmd_deps(const Options& opts) {
  auto v = vocabulary(opts);
  auto g = load_closed(opts, v);
  if (!validated(g, v)) return kValidationError;
  std::vector<std::string> warnings;
  auto d = ftsynth::extract_dependencies(g, v, &warnings);
  for (const auto& w : warnings) std::cerr << "warning " << w << "\n";
  auto red = ftsynth::extract_redundancy(g, v);
  write_output(opts, opts.format == "json" ? ftsynth::depgraph_to_json(d)
                                           : ftsynth::depgraph_to_dot(d, red));
  return kOk;
}

int cmd_redundancy(const Options& opts) {
  auto v = vocabulary(opts);
  auto g = load_closed(opts, v);
  if (!validated(g, v)) return kValidationError;
  write_output(opts, ftsynth::redundancy_to_json(ftsynth::extract_redundancy(g, v)));
  return kOk;
}

int cmd_synth(const Options& opts) {
  auto v = vocabulary(opts);
  auto g = load_closed(opts, v);
  if (!validated(g, v)) return kValidationError;
  auto p = synthesize_pipeline(opts, g, v);
  if (opts.format == "dot") {
    write_output(opts, ftsynth::to_dot(p.ft));
  } else if (opts.format == "galileo") {
    write_output(opts, ftsynth::to_galileo(p.ft, opts.default_prob));
  } else {
    write_output(opts, ftsynth::to_json(p.ft));
  }
  return kOk;
}

int cmd_mcs(const Options& opts) {
  auto v = vocabulary(opts);
  auto g = load_closed(opts, v);
  if (!validated(g, v)) return kValidationError;
  auto p = synthesize_pipeline(opts, g, v);
  std::ostringstream out;
  for (const auto& cs : ftsynth::minimal_cut_sets(p.ft)) {
    bool first = true;
    for (const auto& be : cs.bes) {
      if (!first) out << " ";
      first = false;
      out << be;
    }
    out << "\n";
  }
  write_output(opts, out.str());
  return kOk;
}

int cmd_check(const Options& opts) {
  auto v = vocabulary(opts);
  auto g = load_closed(opts, v);
  if (!validated(g, v)) return kValidationError;
  auto p = synthesize_pipeline(opts, g, v);
  auto report = ftsynth::check_equivalence(p.deps, p.redundancy, p.ft,
                                           pick_top(opts, g, v), {.seed = opts.seed});
  write_output(opts, report.to_string());
  return report.ok() ? kOk : kCounterexamples;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fault tree synthesis from knowledge graphs"};
  app.require_subcommand(1);

  Options opts;
  int (*handler)(const Options&) = nullptr;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("input", opts.input, "Turtle input file")->required();
    cmd->add_option("--ns", opts.ns, "vocabulary namespace IRI (or env FTSYNTH_NS)");
    cmd->add_option("-o,--output", opts.output, "output file (default: stdout)");
  };
  auto add_synth_flags = [&](CLI::App* cmd) {
    cmd->add_option("--top", opts.top, "top event component IRI override");
    cmd->add_flag("--break-cycles", opts.break_cycles,
                  "drop back edges in cyclic dependency graphs instead of rejecting");
  };

  add_common(app.add_subcommand("validate", "parse, infer and validate a knowledge graph"));
  add_common(app.add_subcommand("infer", "emit the inference-closed graph as Turtle"));

  auto* deps = app.add_subcommand("deps", "emit the functional dependency graph");
  add_common(deps);
  deps->add_option("--format", opts.format, "dot|json")
      ->default_val("dot")
      ->check(CLI::IsMember({"dot", "json"}));

  add_common(app.add_subcommand("redundancy", "emit redundancy groups as JSON"));

  auto* synth = app.add_subcommand("synth", "synthesize a fault tree");
  add_common(synth);
  add_synth_flags(synth);
  synth->add_option("--format", opts.format, "json|dot|galileo")
      ->default_val("json")
      ->check(CLI::IsMember({"json", "dot", "galileo"}));
  synth->add_option("--default-prob", opts.default_prob,
                    "placeholder basic-event probability for galileo output")
      ->check(CLI::Range(std::nextafter(0.0, 1.0), std::nextafter(1.0, 0.0)));

  auto* mcs = app.add_subcommand("mcs", "synthesize and print minimal cut sets");
  add_common(mcs);
  add_synth_flags(mcs);

  auto* check = app.add_subcommand("check",
                                   "cross-validate the fault tree against failure propagation");
  add_common(check);
  add_synth_flags(check);
  check->add_option("--seed", opts.seed, "seed for sampled equivalence checking");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kBadFlags;
  }

  if (app.got_subcommand("validate")) handler = cmd_validate;
  else if (app.got_subcommand("infer")) handler = cmd_infer;
  else if (app.got_subcommand("deps")) handler = cmd_deps;
  else if (app.got_subcommand("redundancy")) handler = cmd_redundancy;
  else if (app.got_subcommand("synth")) handler = cmd_synth;
  else if (app.got_subcommand("mcs")) handler = cmd_mcs;
  else if (app.got_subcommand("check")) handler = cmd_check;

  try {
    return handler(opts);
  } catch (const ftsynth::ParseError& e) {
    std::cerr << "error: " << opts.input << ": " << e.what() << "\n";
    return kParseOrIoError;
  } catch (const ftsynth::CyclicDependencyError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kCycleRejected;
  } catch (const ftsynth::NoSystemError& e) {
    std::cerr << "error: " << e.what() << " (use --top to override)\n";
    return kValidationError;
  } catch (const ftsynth::AmbiguousSystemError& e) {
    std::cerr << "error: " << e.what() << " (use --top to override)\n";
    return kValidationError;
  } catch (const ftsynth::TopNotFoundError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kValidationError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParseOrIoError;
  }
}
