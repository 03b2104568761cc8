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

#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>

#include "shaperec/ast.hpp"
#include "shaperec/graph.hpp"

namespace shaperec {

// ---------------------------------------------------------------------------
// Kleene three-valued logic. Ordering: False < Undefined < True; conjunction
// is min, disjunction is max, negation swaps True/False and fixes Undefined.

enum class TruthValue { False, Undefined, True };

inline TruthValue kleene_not(TruthValue v) {
  switch (v) {
    case TruthValue::True: return TruthValue::False;
    case TruthValue::False: return TruthValue::True;
    default: return TruthValue::Undefined;
  }
}
inline TruthValue kleene_and(TruthValue a, TruthValue b) { return std::min(a, b); }
inline TruthValue kleene_or(TruthValue a, TruthValue b) { return std::max(a, b); }

inline TruthValue truth_of(bool b) { return b ? TruthValue::True : TruthValue::False; }

// ---------------------------------------------------------------------------
// Assignments

enum class Sign { Neg, Pos };

/// Partial map from (node, shape) to a conformance sign; an absent pair
/// means Undefined. The invariant "never both s and not-s" is structural:
/// a pair holds at most one sign.
class Assignment {
 public:
  using PairKey = std::pair<Term, ShapeName>;

  TruthValue lookup(const Term& node, const ShapeName& shape) const {
    auto it = signs_.find(PairKey{node, shape});
    if (it == signs_.end()) return TruthValue::Undefined;
    return it->second == Sign::Pos ? TruthValue::True : TruthValue::False;
  }

  void set(const Term& node, const ShapeName& shape, Sign sign) {
    signs_[PairKey{node, shape}] = sign;
  }
  void clear(const Term& node, const ShapeName& shape) { signs_.erase(PairKey{node, shape}); }

  std::size_t signed_pairs() const { return signs_.size(); }
  const std::map<PairKey, Sign>& entries() const { return signs_; }

  friend bool operator==(const Assignment&, const Assignment&) = default;

 private:
  std::map<PairKey, Sign> signs_;
};

/// nodes(G, M): terms in subject or object position of G plus the node-target
/// constants of M.
std::set<Term> node_universe(const Graph& g, const Document& d);

// ---------------------------------------------------------------------------
// Paths and targets

/// All nodes reachable from `start` through path q. Closure operators
/// terminate on cyclic graphs; zero-or-more always contains `start`.
std::set<Term> path_eval(const Graph& g, const Path& q, const Term& start);
inline std::set<Term> path_eval(const Graph& g, const PathPtr& q, const Term& start) {
  return path_eval(g, *q, start);
}

/// Nodes in the target of t w.r.t. g. A node target contributes its constant
/// whether or not it occurs in the graph.
std::set<Term> target_nodes(const Graph& g, const TargetDecl& t);

// ---------------------------------------------------------------------------
// Interpreted relations shared by the evaluator (and, by definition, by the
// SCL filter atoms).

/// Two-valued filter semantics: node-kind tests check the term variant;
/// datatype requires a literal; length and pattern read the lexical form of
/// literals and the string form of IRIs (blank nodes fail them); length
/// counts Unicode code points.
bool filter_matches(const Filter& f, const Term& t);

/// Literal ordering: numeric comparison when both datatypes are xsd:integer
/// or xsd:decimal, code-point comparison when both are xsd:string; every
/// other pair (including non-literals) is incomparable and compares false.
bool literal_less(const Term& a, const Term& b, bool or_equals);

// ---------------------------------------------------------------------------
// Constraint evaluation

/// Evaluates c on focus node n under assignment sigma. Shape references are
/// resolved through sigma alone (True when Pos, False when Neg, otherwise
/// Undefined); everything else is a function of the graph. The counting
/// quantifier geq(n0, q, c) is True when at least n0 path values evaluate
/// True, False when fewer than n0 evaluate non-False, and Undefined in
/// between.
TruthValue eval_constraint(const Graph& g, const Assignment& sigma, const Constraint& c,
                           const Term& n);
inline TruthValue eval_constraint(const Graph& g, const Assignment& sigma, const ConstraintPtr& c,
                                  const Term& n) {
  return eval_constraint(g, sigma, *c, n);
}

// ---------------------------------------------------------------------------
// Faithfulness. sigma's domain is expected to be node_universe(g, d); pairs
// outside it are ignored.

/// Condition (1): for every shape <s,t,c> and universe node n, sigma signs
/// (n,s) Pos iff the constraint evaluates True and Neg iff it evaluates
/// False (hence Undefined iff Undefined).
bool check_condition1(const Graph& g, const Assignment& sigma, const Document& d);

/// Condition (2): every target node of every shape is signed Pos.
bool check_targets(const Graph& g, const Assignment& sigma, const Document& d);

inline bool is_faithful(const Graph& g, const Assignment& sigma, const Document& d) {
  return check_condition1(g, sigma, d) && check_targets(g, sigma, d);
}

/// True iff no (universe node, shape) pair is Undefined.
bool is_total(const Assignment& sigma, const Graph& g, const Document& d);

}  // namespace shaperec
