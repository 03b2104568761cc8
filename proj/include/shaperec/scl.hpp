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

#include <memory>
#include <set>
#include <string>
#include <vector>

#include "shaperec/ast.hpp"

namespace shaperec::scl {

// ---------------------------------------------------------------------------
// Path expressions. Inversion lives only on atomic relations; the translator
// pushes inverse operators down. Plus is the one-or-more closure and renders
// as `pi ; (pi)*`; it is kept distinct from an explicit sequence-with-star so
// fragment classification can tell the two apart.

class SclPath;
using SclPathPtr = std::shared_ptr<const SclPath>;

class SclPath {
 public:
  enum class Kind { Rel, Seq, Alt, ZeroOrOne, Star, Plus };

  static SclPathPtr rel(Term p, bool inverted = false);
  static SclPathPtr seq(SclPathPtr a, SclPathPtr b);
  static SclPathPtr alt(SclPathPtr a, SclPathPtr b);
  static SclPathPtr zero_or_one(SclPathPtr q);
  static SclPathPtr star(SclPathPtr q);
  static SclPathPtr plus(SclPathPtr q);

  Kind kind() const { return kind_; }
  const Term& relation() const { return relation_; }
  bool inverted() const { return inverted_; }
  const SclPathPtr& left() const { return left_; }
  const SclPathPtr& right() const { return right_; }

 private:
  SclPath(Kind kind, Term relation, bool inverted, SclPathPtr left, SclPathPtr right)
      : kind_(kind), relation_(std::move(relation)), inverted_(inverted),
        left_(std::move(left)), right_(std::move(right)) {}

  Kind kind_;
  Term relation_;
  bool inverted_;
  SclPathPtr left_;
  SclPathPtr right_;
};

bool equal(const SclPathPtr& a, const SclPathPtr& b);

// ---------------------------------------------------------------------------
// Formulas (the constraint subgrammar). ClosedForm is a documented extension
// of the grammar: it renders with a reified triple(x, p, y) atom.

class SclFormula;
using SclFormulaPtr = std::shared_ptr<const SclFormula>;

class SclFormula {
 public:
  enum class Kind {
    Top,
    Neg,
    Conj,
    EqConst,     // x = c
    FilterAtom,  // F_kind(x)
    ShapeAtom,   // S_name(x)
    Exists,      // exists y . pi(x,y) & psi(y)
    CountGeq,    // exists>=n y . pi(x,y) & psi(y)
    DisjointAtom,  // !(exists y . pi(x,y) & R(x,y))
    EqualsAtom,    // forall y . pi(x,y) <-> R(x,y)
    OrderAll,      // forall y, z . pi(x,y) & R(x,z) -> y < z (or <=, or inverted)
    ClosedForm,    // forall y, p . triple(x,p,y) -> p in allowed
  };

  static SclFormulaPtr top();
  static SclFormulaPtr neg(SclFormulaPtr f);
  static SclFormulaPtr conj(SclFormulaPtr a, SclFormulaPtr b);
  static SclFormulaPtr eq_const(Term c);
  static SclFormulaPtr filter_atom(Filter f);
  static SclFormulaPtr shape_atom(ShapeName s);
  static SclFormulaPtr exists(SclPathPtr pi, SclFormulaPtr body);
  static SclFormulaPtr count_geq(unsigned n, SclPathPtr pi, SclFormulaPtr body);
  static SclFormulaPtr disjoint_atom(SclPathPtr pi, Term relation);
  static SclFormulaPtr equals_atom(SclPathPtr pi, Term relation);
  static SclFormulaPtr order_all(SclPathPtr pi, Term relation, bool or_equals,
                                 bool inverted = false);
  static SclFormulaPtr closed_form(std::set<Term> allowed);

  Kind kind() const { return kind_; }
  const SclFormulaPtr& left() const { return left_; }
  const SclFormulaPtr& right() const { return right_; }
  const Term& constant() const { return constant_; }
  const Filter& filter() const { return *filter_; }
  const ShapeName& shape() const { return shape_; }
  unsigned count() const { return count_; }
  const SclPathPtr& path() const { return path_; }
  const Term& relation() const { return constant_; }
  bool or_equals() const { return or_equals_; }
  bool inverted() const { return inverted_; }
  const std::set<Term>& allowed() const { return allowed_; }

 private:
  explicit SclFormula(Kind kind) : kind_(kind) {}

  Kind kind_;
  SclFormulaPtr left_;
  SclFormulaPtr right_;
  Term constant_ = Term::iri("urn:shaperec:unset");
  std::shared_ptr<const Filter> filter_;
  ShapeName shape_{Term::iri("urn:shaperec:unset")};
  unsigned count_ = 0;
  SclPathPtr path_;
  bool or_equals_ = false;
  bool inverted_ = false;
  std::set<Term> allowed_;
};

bool equal(const SclFormulaPtr& a, const SclFormulaPtr& b);

// ---------------------------------------------------------------------------
// Axioms and sentences

struct TargetAxiom {
  enum class Form { Node, Class, SubjectsOf, ObjectsOf };
  Form form;
  ShapeName shape;
  Term param;

  friend bool operator==(const TargetAxiom&, const TargetAxiom&) = default;
};

struct ConstraintAxiom {
  ShapeName shape;
  SclFormulaPtr body;
};

inline bool equal(const ConstraintAxiom& a, const ConstraintAxiom& b) {
  return a.shape == b.shape && equal(a.body, b.body);
}

struct SclAxiom {
  enum class Kind { Target, Constraint };
  Kind kind;
  TargetAxiom target{TargetAxiom::Form::Node, ShapeName{Term::iri("urn:shaperec:unset")},
                     Term::iri("urn:shaperec:unset")};
  ConstraintAxiom constraint{ShapeName{Term::iri("urn:shaperec:unset")}, nullptr};

  static SclAxiom make_target(TargetAxiom t) {
    SclAxiom a;
    a.kind = Kind::Target;
    a.target = std::move(t);
    return a;
  }
  static SclAxiom make_constraint(ConstraintAxiom c) {
    SclAxiom a;
    a.kind = Kind::Constraint;
    a.constraint = std::move(c);
    return a;
  }
};

bool equal(const SclAxiom& a, const SclAxiom& b);

struct SclSentence {
  std::vector<SclAxiom> conjuncts;
};

/// Structural equality as axiom multisets (order-insensitive).
bool equivalent_sentences(const SclSentence& a, const SclSentence& b);

// ---------------------------------------------------------------------------
// Operations

/// Translates a document into an SCL sentence: per shape, one target axiom
/// per target declaration followed by exactly one constraint axiom defining
/// the shape relation. The empty document translates to the empty conjunction
/// (rendered `true`).
SclSentence translate(const Document& d);

/// Deterministic ASCII rendering; one axiom per line, lines joined by `&`.
std::string render(const SclSentence& s);
std::string render(const SclAxiom& a);
std::string render(const SclFormulaPtr& f);

/// A sentence is well-formed iff every shape relation that occurs anywhere
/// (in a shape atom, target axiom, or constraint axiom head) has exactly one
/// constraint axiom defining it.
bool well_formed(const SclSentence& s);

/// Feature letters of the sentence per the component table; for a translated
/// document this equals fragment_letters of the source.
std::set<char> fragment_of(const SclSentence& s);

}  // namespace shaperec::scl
