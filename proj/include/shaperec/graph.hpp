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

#include <map>
#include <set>

#include "shaperec/term.hpp"

namespace shaperec {

/// A set of triples with subject/predicate and predicate/object indexes so
/// forward and backward lookups are sublinear in the triple count. Build it
/// up with insert(), then treat it as immutable: all readers are const and
/// any number of concurrent readers is safe.
class Graph {
 public:
  Graph() = default;

  void insert(Triple t);
  void insert(Term s, Term p, Term o) { insert(Triple{std::move(s), std::move(p), std::move(o)}); }

  bool contains(const Triple& t) const { return triples_.contains(t); }
  bool empty() const { return triples_.empty(); }
  std::size_t size() const { return triples_.size(); }
  const std::set<Triple>& triples() const { return triples_; }

  /// { o | (s,p,o) in G }
  const std::set<Term>& objects(const Term& s, const Term& p) const;
  /// { s | (s,p,o) in G }
  const std::set<Term>& subjects(const Term& p, const Term& o) const;

  /// All subjects (resp. objects) of triples with predicate p.
  std::set<Term> subjects_with_predicate(const Term& p) const;
  std::set<Term> objects_with_predicate(const Term& p) const;

  /// predicate -> objects map for one subject, or nullptr if s has no
  /// outgoing triples. Used by closedness checks.
  const std::map<Term, std::set<Term>>* outgoing(const Term& s) const;

  /// Terms occurring in subject or object position.
  const std::set<Term>& nodes() const { return nodes_; }

  friend bool operator==(const Graph& a, const Graph& b) { return a.triples_ == b.triples_; }

 private:
  std::set<Triple> triples_;
  std::set<Term> nodes_;
  std::map<Term, std::map<Term, std::set<Term>>> spo_;  // subject -> predicate -> objects
  std::map<Term, std::map<Term, std::set<Term>>> pos_;  // predicate -> object -> subjects
};

}  // namespace shaperec
