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

#include "ftsynth/analysis.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

#include "ftsynth/errors.hpp"

namespace ftsynth {

namespace {

/// Topologically ordered evaluator: children are computed before parents,
/// each node exactly once per scenario.
class FtEvaluator {
 public:
  explicit FtEvaluator(const FaultTree& ft) {
    for (const auto& [id, node] : ft.nodes) {
      if (node.kind == NodeKind::BasicEvent) {
        be_index_.emplace(id, be_index_.size());
      }
    }
    if (be_index_.size() > 64) {
      throw ResourceLimitError("scenario evaluation limited to 64 basic events");
    }
    topo_sort(ft, ft.top);
  }

  std::size_t be_count() const { return be_index_.size(); }

  /// index of a basic event id; throws for unknown or non-BE ids.
  std::size_t be_bit(const std::string& id) const {
    auto it = be_index_.find(id);
    if (it == be_index_.end()) {
      throw std::invalid_argument("unknown basic event id: " + id);
    }
    return it->second;
  }

  bool eval(std::uint64_t failed_mask) const {
    std::vector<char> scratch(order_.size());
    return eval(failed_mask, scratch);
  }

  bool eval(std::uint64_t failed_mask, std::vector<char>& scratch) const {
    scratch.resize(order_.size());
    for (std::size_t i = 0; i < order_.size(); ++i) {
      const Step& s = order_[i];
      if (s.kind == NodeKind::BasicEvent) {
        scratch[i] = (failed_mask >> s.be_bit) & 1;
      } else {
        bool is_and = s.kind == NodeKind::AndGate;
        bool value = is_and;
        for (std::size_t child : s.children) {
          if (is_and) {
            value = value && scratch[child];
          } else {
            value = value || scratch[child];
          }
        }
        scratch[i] = value;
      }
    }
    return scratch.back() != 0;
  }

 private:
  struct Step {
    NodeKind kind;
    std::size_t be_bit = 0;
    std::vector<std::size_t> children;
  };

  std::size_t topo_sort(const FaultTree& ft, const std::string& id) {
    auto it = slot_.find(id);
    if (it != slot_.end()) return it->second;
    const FtNode& node = ft.node(id);
    Step step;
    step.kind = node.kind;
    if (node.kind == NodeKind::BasicEvent) {
      step.be_bit = be_index_.at(id);
    } else {
      for (const auto& child : node.children) {
        step.children.push_back(topo_sort(ft, child));
      }
    }
    order_.push_back(std::move(step));
    slot_[id] = order_.size() - 1;
    return order_.size() - 1;
  }

  std::map<std::string, std::size_t> be_index_;
  std::map<std::string, std::size_t> slot_;
  std::vector<Step> order_;
};

std::uint64_t scenario_mask(const FaultTree& ft, const FtEvaluator& ev,
                            const FailureScenario& s) {
  std::uint64_t mask = 0;
  for (const auto& id : s.failed_bes) {
    auto it = ft.nodes.find(id);
    if (it == ft.nodes.end() || it->second.kind != NodeKind::BasicEvent) {
      throw std::invalid_argument("scenario names no basic event: " + id);
    }
    mask |= std::uint64_t{1} << ev.be_bit(id);
  }
  return mask;
}

using Family = std::vector<std::vector<std::uint32_t>>;  // each set sorted

bool subset_of(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

// Absorption: drop every set that contains another set of the family.
Family minimize(Family f) {
  std::sort(f.begin(), f.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  f.erase(std::unique(f.begin(), f.end()), f.end());
  Family out;
  for (auto& s : f) {
    bool absorbed = false;
    for (const auto& kept : out) {
      if (subset_of(kept, s)) {
        absorbed = true;
        break;
      }
    }
    if (!absorbed) out.push_back(std::move(s));
  }
  return out;
}

std::vector<std::uint32_t> set_union(const std::vector<std::uint32_t>& a,
                                     const std::vector<std::uint32_t>& b) {
  std::vector<std::uint32_t> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

class McsBuilder {
 public:
  McsBuilder(const FaultTree& ft, std::size_t cap) : ft_(ft), cap_(cap) {
    for (const auto& [id, node] : ft.nodes) {
      if (node.kind == NodeKind::BasicEvent) {
        be_ids_.push_back(id);
      }
    }
    for (std::size_t i = 0; i < be_ids_.size(); ++i) be_bit_[be_ids_[i]] = i;
  }

  std::vector<CutSet> run() {
    Family top = family(ft_.top);
    std::vector<CutSet> out;
    for (const auto& s : top) {
      CutSet cs;
      for (auto bit : s) cs.bes.insert(be_ids_[bit]);
      out.push_back(std::move(cs));
    }
    std::sort(out.begin(), out.end(), [](const CutSet& a, const CutSet& b) {
      if (a.bes.size() != b.bes.size()) return a.bes.size() < b.bes.size();
      return a.bes < b.bes;
    });
    return out;
  }

 private:
  const Family& family(const std::string& id) {
    auto it = memo_.find(id);
    if (it != memo_.end()) return it->second;
    const FtNode& node = ft_.node(id);
    Family out;
    if (node.kind == NodeKind::BasicEvent) {
      out.push_back({static_cast<std::uint32_t>(be_bit_.at(id))});
    } else if (node.kind == NodeKind::OrGate) {
      for (const auto& child : node.children) {
        const Family& f = family(child);
        out.insert(out.end(), f.begin(), f.end());
        check_cap(out.size());
      }
      out = minimize(std::move(out));
    } else {
      out.push_back({});
      for (const auto& child : node.children) {
        const Family& f = family(child);
        check_cap(out.size() * f.size());
        Family next;
        next.reserve(out.size() * f.size());
        for (const auto& a : out) {
          for (const auto& b : f) next.push_back(set_union(a, b));
        }
        out = minimize(std::move(next));
      }
    }
    return memo_[id] = std::move(out);
  }

  void check_cap(std::size_t size) const {
    if (size > cap_) {
      throw ResourceLimitError("cut-set family exceeds cap of " + std::to_string(cap_));
    }
  }

  const FaultTree& ft_;
  std::size_t cap_;
  std::vector<std::string> be_ids_;
  std::map<std::string, std::size_t> be_bit_;
  std::map<std::string, Family> memo_;
};

}  // namespace

bool evaluate(const FaultTree& ft, const FailureScenario& s) {
  FtEvaluator ev(ft);
  return ev.eval(scenario_mask(ft, ev, s));
}

std::vector<CutSet> minimal_cut_sets(const FaultTree& ft, std::size_t family_cap) {
  return McsBuilder(ft, family_cap).run();
}

std::vector<CutSet> brute_force_cut_sets(const FaultTree& ft) {
  std::vector<std::string> be_ids;
  for (const auto& [id, node] : ft.nodes) {
    if (node.kind == NodeKind::BasicEvent) be_ids.push_back(id);
  }
  std::size_t n = be_ids.size();
  if (n > 20) {
    throw ResourceLimitError("brute-force cut sets limited to 20 basic events, got " +
                             std::to_string(n));
  }
  FtEvaluator ev(ft);
  std::vector<std::size_t> bit(n);
  for (std::size_t i = 0; i < n; ++i) bit[i] = ev.be_bit(be_ids[i]);

  std::uint64_t total = std::uint64_t{1} << n;
  std::vector<char> value(total);
  std::vector<char> scratch;
  for (std::uint64_t m = 0; m < total; ++m) {
    std::uint64_t mask = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if ((m >> i) & 1) mask |= std::uint64_t{1} << bit[i];
    }
    value[m] = ev.eval(mask, scratch);
  }

  std::vector<CutSet> out;
  for (std::uint64_t m = 1; m < total; ++m) {
    if (!value[m]) continue;
    bool minimal = true;
    for (std::size_t i = 0; i < n && minimal; ++i) {
      if (((m >> i) & 1) && value[m & ~(std::uint64_t{1} << i)]) minimal = false;
    }
    if (!minimal) continue;
    CutSet cs;
    for (std::size_t i = 0; i < n; ++i) {
      if ((m >> i) & 1) cs.bes.insert(be_ids[i]);
    }
    out.push_back(std::move(cs));
  }
  std::sort(out.begin(), out.end(), [](const CutSet& a, const CutSet& b) {
    if (a.bes.size() != b.bes.size()) return a.bes.size() < b.bes.size();
    return a.bes < b.bes;
  });
  return out;
}

std::set<Iri> propagate(const DependencyGraph& d, const std::vector<RedundancyGroup>& red,
                        const std::set<Iri>& internal) {
  // Supplier sets per (consumer, resource); redundancy groups carry the
  // multi-producer ones, the dependency graph the rest.
  std::map<std::pair<Iri, Iri>, std::set<Iri>> suppliers;
  for (const auto& c : d.components) {
    for (const auto& [r, producers] : d.producers_by_resource(c)) {
      suppliers[{c, r}] = producers;
    }
  }
  for (const auto& g : red) {
    suppliers[{g.consumer, g.resource}] = g.producers;
  }

  std::set<Iri> failed = internal;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& [key, producers] : suppliers) {
      const Iri& consumer = key.first;
      if (failed.count(consumer) || producers.empty()) continue;
      bool all_failed = std::all_of(producers.begin(), producers.end(),
                                    [&](const Iri& p) { return failed.count(p) > 0; });
      if (all_failed) {
        failed.insert(consumer);
        changed = true;
      }
    }
  }
  return failed;
}

std::string EquivalenceReport::to_string() const {
  std::ostringstream out;
  out << "equivalence check: " << subsets_checked << " subsets ("
      << (exhaustive ? "exhaustive" : "sampled") << ", seed " << seed << "), "
      << counterexamples.size() << " counterexample(s)\n";
  for (const auto& cex : counterexamples) {
    out << "  fault tree says " << (cex.ft_failed ? "failed" : "ok")
        << ", propagation says " << (cex.propagation_failed ? "failed" : "ok")
        << " for internal faults {";
    bool first = true;
    for (const auto& c : cex.failed_components) {
      if (!first) out << ", ";
      first = false;
      out << c.value;
    }
    out << "}\n";
  }
  return out.str();
}

EquivalenceReport check_equivalence(const DependencyGraph& d,
                                    [[maybe_unused]] const std::vector<RedundancyGroup>& red,
                                    const FaultTree& ft, const Iri& top,
                                    const EquivalenceOptions& opts) {
  // `red` mirrors the multi-producer sets of `d`, so the bitmask
  // propagation below reads the supplier sets straight from the graph.
  // Reachable subgraph from the top event; everything outside it cannot
  // influence the top component in either semantics.
  std::set<Iri> reachable;
  std::vector<Iri> frontier{top};
  while (!frontier.empty()) {
    Iri c = frontier.back();
    frontier.pop_back();
    if (!reachable.insert(c).second) continue;
    for (const auto& p : d.producers_of(c)) frontier.push_back(p);
  }
  std::vector<Iri> comps(reachable.begin(), reachable.end());
  std::size_t n = comps.size();
  if (n > 63) throw ResourceLimitError("equivalence check limited to 63 reachable components");

  FtEvaluator ev(ft);
  auto be_by_comp = ft.basic_events_by_component();
  std::vector<std::size_t> be_bit(n);
  std::size_t top_index = 0;
  std::map<Iri, std::size_t> comp_index;
  for (std::size_t i = 0; i < n; ++i) {
    auto it = be_by_comp.find(comps[i]);
    if (it == be_by_comp.end()) {
      throw std::invalid_argument("fault tree has no basic event for component " +
                                  comps[i].value);
    }
    be_bit[i] = ev.be_bit(it->second);
    comp_index[comps[i]] = i;
    if (comps[i] == top) top_index = i;
  }

  // Supplier sets of the reachable subgraph as bitmasks over comp indices.
  std::vector<std::vector<std::uint64_t>> supplier_masks(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& [r, producers] : d.producers_by_resource(comps[i])) {
      std::uint64_t mask = 0;
      for (const auto& p : producers) mask |= std::uint64_t{1} << comp_index.at(p);
      supplier_masks[i].push_back(mask);
    }
  }

  EquivalenceReport report;
  report.seed = opts.seed;

  std::vector<std::uint64_t> subsets;
  if (n <= 16) {
    report.exhaustive = true;
    subsets.resize(std::size_t{1} << n);
    for (std::size_t m = 0; m < subsets.size(); ++m) subsets[m] = m;
  } else {
    report.exhaustive = false;
    std::mt19937_64 rng(opts.seed);
    std::uint64_t all = (n == 63) ? ~std::uint64_t{0} >> 1 : (std::uint64_t{1} << n) - 1;
    subsets.resize(opts.random_samples);
    for (auto& m : subsets) m = rng() & all;
  }
  report.subsets_checked = subsets.size();

  auto propagate_mask = [&](std::uint64_t internal) {
    std::uint64_t failed = internal;
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t i = 0; i < n; ++i) {
        if ((failed >> i) & 1) continue;
        for (std::uint64_t suppliers : supplier_masks[i]) {
          if ((suppliers & ~failed) == 0) {
            failed |= std::uint64_t{1} << i;
            changed = true;
            break;
          }
        }
      }
    }
    return failed;
  };

  // 0 = agree, otherwise bit0 = propagation verdict, bit1 = FT verdict,
  // bit2 = disagreement marker. Collected per subset, reported in subset
  // order, so the result is independent of the parallel schedule.
  std::vector<std::uint8_t> verdicts(subsets.size(), 0);

  auto evaluate_one = [&](std::size_t k, std::vector<char>& scratch) {
    std::uint64_t comp_mask = subsets[k];
    std::uint64_t be_mask = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if ((comp_mask >> i) & 1) be_mask |= std::uint64_t{1} << be_bit[i];
    }
    bool ft_failed = ev.eval(be_mask, scratch);
    bool prop_failed = (propagate_mask(comp_mask) >> top_index) & 1;
    if (ft_failed != prop_failed) {
      verdicts[k] = static_cast<std::uint8_t>(4 | (ft_failed << 1) | prop_failed);
    }
  };

#if defined(_OPENMP)
  if (opts.parallel) {
#pragma omp parallel
    {
      std::vector<char> scratch;
#pragma omp for schedule(static)
      for (std::int64_t k = 0; k < static_cast<std::int64_t>(subsets.size()); ++k) {
        evaluate_one(static_cast<std::size_t>(k), scratch);
      }
    }
  } else {
    std::vector<char> scratch;
    for (std::size_t k = 0; k < subsets.size(); ++k) evaluate_one(k, scratch);
  }
#else
  std::vector<char> scratch;
  for (std::size_t k = 0; k < subsets.size(); ++k) evaluate_one(k, scratch);
#endif

  for (std::size_t k = 0; k < subsets.size(); ++k) {
    if (!(verdicts[k] & 4)) continue;
    Counterexample cex;
    cex.ft_failed = (verdicts[k] >> 1) & 1;
    cex.propagation_failed = verdicts[k] & 1;
    for (std::size_t i = 0; i < n; ++i) {
      if ((subsets[k] >> i) & 1) cex.failed_components.insert(comps[i]);
    }
    report.counterexamples.push_back(std::move(cex));
  }
  return report;
}

}  // namespace ftsynth
