// Copyright 2026 The shaperec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "shaperec/semantics.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <sstream>

#include "shaperec/analysis.hpp"
#include "shaperec/errors.hpp"
#include "shaperec/vocab.hpp"

namespace shaperec {

std::string to_string(SemanticsMode mode) {
  switch (mode) {
    case SemanticsMode::Standard: return "standard";
    case SemanticsMode::BravePartial: return "brave-partial";
    case SemanticsMode::BraveTotal: return "brave-total";
    case SemanticsMode::CautiousPartial: return "cautious-partial";
    case SemanticsMode::CautiousTotal: return "cautious-total";
  }
  return "standard";
}

std::optional<SemanticsMode> semantics_mode_from_string(const std::string& name) {
  if (name == "standard") return SemanticsMode::Standard;
  if (name == "brave-partial") return SemanticsMode::BravePartial;
  if (name == "brave-total") return SemanticsMode::BraveTotal;
  if (name == "cautious-partial") return SemanticsMode::CautiousPartial;
  if (name == "cautious-total") return SemanticsMode::CautiousTotal;
  return std::nullopt;
}

namespace {

bool is_total_mode(SemanticsMode mode) {
  return mode == SemanticsMode::BraveTotal || mode == SemanticsMode::CautiousTotal ||
         mode == SemanticsMode::Standard;
}
bool is_cautious_mode(SemanticsMode mode) {
  return mode == SemanticsMode::CautiousPartial || mode == SemanticsMode::CautiousTotal;
}

using PairKey = std::pair<Term, ShapeName>;

std::vector<PairKey> collect_target_pairs(const Graph& g, const Document& d) {
  std::set<PairKey> pairs;
  for (const Shape& s : d.shapes()) {
    for (const TargetDecl& t : s.targets) {
      for (const Term& n : target_nodes(g, t)) pairs.insert(PairKey{n, s.name});
    }
  }
  return {pairs.begin(), pairs.end()};
}

/// Shared outcome of a complete enumeration (engine or oracle).
struct SearchOutcome {
  bool found_faithful = false;
  Assignment witness;
  bool found_counterexample = false;  // condition-1 consistent but target-violating
  Assignment counterexample;
  std::set<PairKey> target_ever_pos;
  std::size_t leaves = 0;
};

/// First faithful assignment wins; the first target-violating consistent
/// assignment becomes the cautious counterexample. Returns true when the
/// search may stop early for the given mode.
bool record_leaf(SearchOutcome& out, const Assignment& sigma,
                 const std::vector<PairKey>& target_pairs, SemanticsMode mode) {
  ++out.leaves;
  bool targets_ok = true;
  for (const PairKey& p : target_pairs) {
    if (sigma.lookup(p.first, p.second) == TruthValue::True) {
      out.target_ever_pos.insert(p);
    } else {
      targets_ok = false;
    }
  }
  if (targets_ok) {
    if (!out.found_faithful) {
      out.found_faithful = true;
      out.witness = sigma;
    }
  } else if (!out.found_counterexample) {
    out.found_counterexample = true;
    out.counterexample = sigma;
  }
  if (is_cautious_mode(mode)) return out.found_faithful && out.found_counterexample;
  return out.found_faithful;
}

std::string assignment_digest(const Assignment& sigma) {
  // FNV-1a over the signed pairs; enough to identify a counterexample in a
  // report.
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](const std::string& s) {
    for (unsigned char c : s) {
      h ^= c;
      h *= 1099511628211ull;
    }
  };
  for (const auto& [pair, sign] : sigma.entries()) {
    mix(pair.first.to_string());
    mix(pair.second.to_string());
    mix(sign == Sign::Pos ? "+" : "-");
  }
  std::ostringstream os;
  os << std::hex << (h & 0xffffffffull);
  return os.str();
}

ValidationResult assemble_result(SemanticsMode mode, const SearchOutcome& out,
                                 const std::vector<PairKey>& target_pairs) {
  ValidationResult result;
  result.mode = mode;
  bool cautious = is_cautious_mode(mode);
  result.valid = cautious ? out.found_faithful && !out.found_counterexample : out.found_faithful;
  if (out.found_faithful) result.witness = out.witness;

  if (!result.valid) {
    if (!out.found_faithful) {
      std::string detail = mode == SemanticsMode::Standard
                               ? "focus node does not conform to the shape"
                               : "no constraint-consistent assignment marks this target node "
                                 "conformant";
      for (const PairKey& p : target_pairs) {
        if (!out.target_ever_pos.contains(p)) {
          result.violations.push_back(Violation{p.first, p.second, detail});
        }
      }
    } else {
      std::string digest = assignment_digest(out.counterexample);
      for (const PairKey& p : target_pairs) {
        if (out.counterexample.lookup(p.first, p.second) != TruthValue::True) {
          result.violations.push_back(Violation{
              p.first, p.second,
              "constraint-consistent assignment " + digest +
                  " leaves this target node non-conformant"});
        }
      }
    }
  }
  return result;
}

// ---------------------------------------------------------------------------
// Engine: SCC-blocked search over cycle-resident pairs.

class Engine {
 public:
  Engine(const Graph& g, const Document& d, SemanticsMode mode)
      : g_(g), d_(d), mode_(mode), components_(condensation(d)) {
    std::set<Term> u = node_universe(g, d);
    universe_.assign(u.begin(), u.end());
    target_pairs_ = collect_target_pairs(g, d);
  }

  std::size_t guessable_pairs() const {
    std::size_t cyclic_shapes = 0;
    for (const Component& c : components_) {
      if (c.cyclic) cyclic_shapes += c.shapes.size();
    }
    return cyclic_shapes * universe_.size();
  }

  ValidationResult run() {
    search(0);
    ValidationResult result = assemble_result(mode_, outcome_, target_pairs_);
    result.stats.nodes = universe_.size();
    result.stats.shapes = d_.size();
    result.stats.guessable_pairs = guessable_pairs();
    result.stats.assignments_tried = outcome_.leaves;
    return result;
  }

 private:
  void search(std::size_t component_index) {
    if (stop_) return;
    if (component_index == components_.size()) {
      stop_ = record_leaf(outcome_, sigma_, target_pairs_, mode_);
      return;
    }
    const Component& comp = components_[component_index];
    if (!comp.cyclic) {
      derive_and_descend(comp, component_index);
    } else {
      enumerate_component(comp, component_index);
    }
  }

  // Values of an acyclic shape are functionally determined by the components
  // before it; evaluate and descend.
  void derive_and_descend(const Component& comp, std::size_t component_index) {
    const Shape& shape = d_.shape(comp.shapes.front());
    for (const Term& n : universe_) {
      switch (eval_constraint(g_, sigma_, *shape.constraint, n)) {
        case TruthValue::True: sigma_.set(n, shape.name, Sign::Pos); break;
        case TruthValue::False: sigma_.set(n, shape.name, Sign::Neg); break;
        case TruthValue::Undefined: break;  // stays unsigned
      }
    }
    search(component_index + 1);
    for (const Term& n : universe_) sigma_.clear(n, shape.name);
  }

  // Enumerates sign vectors over this component's (node, shape) pairs in
  // lexicographic order (Undefined < Neg < Pos; Neg < Pos when total),
  // pruning vectors that contradict condition (1) on the component.
  void enumerate_component(const Component& comp, std::size_t component_index) {
    std::vector<PairKey> pairs;
    for (const Term& n : universe_) {
      for (const ShapeName& s : comp.shapes) pairs.push_back(PairKey{n, s});
    }
    const int radix = is_total_mode(mode_) ? 2 : 3;
    std::vector<int> digits(pairs.size(), 0);

    auto apply = [&](std::size_t i) {
      int digit = digits[i];
      if (radix == 2) digit += 1;  // 0 -> Neg, 1 -> Pos
      switch (digit) {
        case 0: sigma_.clear(pairs[i].first, pairs[i].second); break;
        case 1: sigma_.set(pairs[i].first, pairs[i].second, Sign::Neg); break;
        default: sigma_.set(pairs[i].first, pairs[i].second, Sign::Pos); break;
      }
    };

    for (std::size_t i = 0; i < pairs.size(); ++i) apply(i);
    while (true) {
      if (component_consistent(comp)) search(component_index + 1);
      if (stop_) break;
      // Odometer step: the last digit varies fastest, so vectors ascend
      // lexicographically with the first pair most significant.
      bool wrapped = true;
      std::size_t i = pairs.size();
      while (i > 0) {
        --i;
        if (++digits[i] < radix) {
          apply(i);
          wrapped = false;
          break;
        }
        digits[i] = 0;
        apply(i);
      }
      if (wrapped) break;
    }
    cleanup(pairs);
  }

  void cleanup(const std::vector<PairKey>& pairs) {
    for (const PairKey& p : pairs) sigma_.clear(p.first, p.second);
  }

  bool component_consistent(const Component& comp) {
    for (const ShapeName& name : comp.shapes) {
      const Shape& shape = d_.shape(name);
      for (const Term& n : universe_) {
        if (eval_constraint(g_, sigma_, *shape.constraint, n) != sigma_.lookup(n, name))
          return false;
      }
    }
    return true;
  }

  const Graph& g_;
  const Document& d_;
  SemanticsMode mode_;
  std::vector<Component> components_;
  std::vector<Term> universe_;
  std::vector<PairKey> target_pairs_;
  Assignment sigma_;
  SearchOutcome outcome_;
  bool stop_ = false;
};

}  // namespace

ValidationResult validate(const Graph& g, const Document& d, SemanticsMode mode,
                          const SearchOptions& options) {
  auto start = std::chrono::steady_clock::now();
  if (mode == SemanticsMode::Standard && is_recursive(d).document)
    throw RecursionError("standard semantics rejects recursive documents");

  Engine engine(g, d, mode);
  if (engine.guessable_pairs() > options.max_guessable_pairs)
    throw SearchBudgetExceeded(engine.guessable_pairs(), options.max_guessable_pairs);

  ValidationResult result = engine.run();
  result.stats.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return result;
}

ValidationResult validate_standard(const Graph& g, const Document& d,
                                   const SearchOptions& options) {
  return validate(g, d, SemanticsMode::Standard, options);
}

// ---------------------------------------------------------------------------
// Oracle

ValidationResult brute_force_validate(const Graph& g, const Document& d, SemanticsMode mode,
                                      const OracleOptions& options) {
  auto start = std::chrono::steady_clock::now();
  if (mode == SemanticsMode::Standard && is_recursive(d).document)
    throw RecursionError("standard semantics rejects recursive documents");

  std::set<Term> universe_set = node_universe(g, d);
  std::vector<Term> universe(universe_set.begin(), universe_set.end());
  std::vector<ShapeName> names;
  for (const Shape& s : d.shapes()) names.push_back(s.name);
  std::sort(names.begin(), names.end());

  std::vector<PairKey> pairs;
  for (const Term& n : universe) {
    for (const ShapeName& s : names) pairs.push_back(PairKey{n, s});
  }
  if (pairs.size() > options.max_pairs)
    throw OracleBudgetExceeded(pairs.size(), options.max_pairs);

  std::vector<PairKey> target_pairs = collect_target_pairs(g, d);
  // Standard validity is the existence of any faithful assignment; partial
  // enumeration applies the definition literally.
  const int radix = is_total_mode(mode) && mode != SemanticsMode::Standard ? 2 : 3;

  Assignment sigma;
  std::vector<int> digits(pairs.size(), 0);
  auto apply = [&](std::size_t i) {
    int digit = digits[i];
    if (radix == 2) digit += 1;
    switch (digit) {
      case 0: sigma.clear(pairs[i].first, pairs[i].second); break;
      case 1: sigma.set(pairs[i].first, pairs[i].second, Sign::Neg); break;
      default: sigma.set(pairs[i].first, pairs[i].second, Sign::Pos); break;
    }
  };
  for (std::size_t i = 0; i < pairs.size(); ++i) apply(i);

  SearchOutcome outcome;
  std::size_t enumerated = 0;
  bool done = false;
  while (!done) {
    ++enumerated;
    if (check_condition1(g, sigma, d)) {
      if (record_leaf(outcome, sigma, target_pairs, mode)) break;
    }
    if (pairs.empty()) break;
    std::size_t i = pairs.size();
    while (i > 0) {
      --i;
      if (++digits[i] < radix) {
        apply(i);
        break;
      }
      digits[i] = 0;
      apply(i);
      if (i == 0) done = true;
    }
  }

  ValidationResult result = assemble_result(mode, outcome, target_pairs);
  result.stats.nodes = universe.size();
  result.stats.shapes = d.size();
  result.stats.guessable_pairs = pairs.size();
  result.stats.assignments_tried = enumerated;
  result.stats.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return result;
}

// ---------------------------------------------------------------------------
// Monotone-extension precondition

namespace {

void collect_path_predicates(const Path& q, std::set<Term>& out) {
  switch (q.kind()) {
    case Path::Kind::Pred:
      out.insert(q.predicate());
      return;
    case Path::Kind::Seq:
    case Path::Kind::Alt:
      collect_path_predicates(*q.left(), out);
      collect_path_predicates(*q.right(), out);
      return;
    default:
      collect_path_predicates(*q.left(), out);
      return;
  }
}

// Gathers every predicate the document can inspect; sets has_closed when a
// closedness constraint occurs anywhere.
void collect_constraint_predicates(const Constraint& c, std::set<Term>& out, bool& has_closed) {
  switch (c.kind()) {
    case Constraint::Kind::Not:
      collect_constraint_predicates(*c.left(), out, has_closed);
      return;
    case Constraint::Kind::And:
      collect_constraint_predicates(*c.left(), out, has_closed);
      collect_constraint_predicates(*c.right(), out, has_closed);
      return;
    case Constraint::Kind::GEq:
      collect_path_predicates(*c.path(), out);
      collect_constraint_predicates(*c.left(), out, has_closed);
      return;
    case Constraint::Kind::Equals:
    case Constraint::Kind::Disjoint:
    case Constraint::Kind::LessThan:
      collect_path_predicates(*c.path(), out);
      out.insert(c.term());
      return;
    case Constraint::Kind::Closed:
      has_closed = true;
      return;
    default:
      return;
  }
}

}  // namespace

bool monotone_extension_check(const Graph& g, const Document& d, const Triple& t) {
  if (g.empty()) return false;
  std::set<Term> predicates;
  bool has_closed = false;
  for (const Shape& s : d.shapes()) {
    collect_constraint_predicates(*s.constraint, predicates, has_closed);
    if (has_closed) return false;
    for (const TargetDecl& decl : s.targets) {
      switch (decl.kind) {
        case TargetDecl::Kind::Class:
          predicates.insert(vocab::rdf_type());
          break;
        case TargetDecl::Kind::SubjectsOf:
        case TargetDecl::Kind::ObjectsOf:
          predicates.insert(decl.param);
          break;
        case TargetDecl::Kind::Node:
          break;
      }
    }
  }
  return !predicates.contains(t.predicate);
}

}  // namespace shaperec
