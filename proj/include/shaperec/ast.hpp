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
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "shaperec/term.hpp"

namespace shaperec {

/// Name of a shape: an IRI or a blank node. Unique within a Document.
struct ShapeName {
  Term id;

  friend auto operator<=>(const ShapeName&, const ShapeName&) = default;
  friend bool operator==(const ShapeName&, const ShapeName&) = default;

  std::string to_string() const { return id.to_string(); }
};

struct TargetDecl {
  enum class Kind { Node, Class, SubjectsOf, ObjectsOf };
  Kind kind;
  Term param;

  friend auto operator<=>(const TargetDecl&, const TargetDecl&) = default;
  friend bool operator==(const TargetDecl&, const TargetDecl&) = default;
};

// ---------------------------------------------------------------------------
// Property paths

class Path;
using PathPtr = std::shared_ptr<const Path>;

class Path {
 public:
  enum class Kind { Pred, Inverse, Seq, Alt, ZeroOrOne, ZeroOrMore, OneOrMore };

  static PathPtr pred(Term p);
  static PathPtr inverse(PathPtr q);
  static PathPtr seq(PathPtr a, PathPtr b);
  static PathPtr alt(PathPtr a, PathPtr b);
  static PathPtr zero_or_one(PathPtr q);
  static PathPtr zero_or_more(PathPtr q);
  static PathPtr one_or_more(PathPtr q);

  Kind kind() const { return kind_; }
  const Term& predicate() const { return predicate_; }
  const PathPtr& left() const { return left_; }
  const PathPtr& right() const { return right_; }

 private:
  Path(Kind kind, Term predicate, PathPtr left, PathPtr right)
      : kind_(kind), predicate_(std::move(predicate)), left_(std::move(left)), right_(std::move(right)) {}

  Kind kind_;
  Term predicate_;  // Pred only
  PathPtr left_;    // unary child or first of two
  PathPtr right_;   // second of two
};

bool equal(const Path& a, const Path& b);
inline bool equal(const PathPtr& a, const PathPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return equal(*a, *b);
}

// ---------------------------------------------------------------------------
// Filters

/// Node-level tests that never consult the graph or an assignment.
/// Two-valued by construction.
class Filter {
 public:
  enum class Kind {
    NodeKindIri,
    NodeKindBlank,
    NodeKindLiteral,
    Datatype,
    MinLength,
    MaxLength,
    Pattern,
    InSet,
  };

  static Filter node_kind_iri() { return Filter(Kind::NodeKindIri); }
  static Filter node_kind_blank() { return Filter(Kind::NodeKindBlank); }
  static Filter node_kind_literal() { return Filter(Kind::NodeKindLiteral); }
  static Filter datatype(Term d);
  static Filter min_length(unsigned k);
  static Filter max_length(unsigned k);
  /// Throws std::invalid_argument if the pattern does not compile in the
  /// supported regex dialect.
  static Filter pattern(std::string regex);
  static Filter in_set(std::set<Term> terms);

  Kind kind() const { return kind_; }
  const Term& datatype_iri() const { return datatype_; }
  unsigned length() const { return length_; }
  const std::string& pattern_text() const { return pattern_; }
  /// Compiled form of pattern_text(); non-null only for Pattern filters.
  const std::shared_ptr<const void>& compiled_pattern() const { return compiled_; }
  const std::set<Term>& terms() const { return terms_; }

  friend bool operator==(const Filter& a, const Filter& b) {
    return a.kind_ == b.kind_ && a.datatype_ == b.datatype_ && a.length_ == b.length_ &&
           a.pattern_ == b.pattern_ && a.terms_ == b.terms_;
  }

 private:
  explicit Filter(Kind kind) : kind_(kind) {}

  Kind kind_;
  Term datatype_ = Term::iri("urn:shaperec:unset");
  unsigned length_ = 0;
  std::string pattern_;
  std::shared_ptr<const void> compiled_;  // std::regex, type-erased
  std::set<Term> terms_;
};

// ---------------------------------------------------------------------------
// Constraints

class Constraint;
using ConstraintPtr = std::shared_ptr<const Constraint>;

/// Core constraint grammar. Surface sugar (or, maxCount, universal path
/// quantification, ...) is desugared by the reader into this minimal form:
///
///   or(a, b)          = not(and(not a, not b))
///   maxCount(k, q)    = not(geq(k + 1, q, true))
///   all q-values c    = not(geq(1, q, not c))
class Constraint {
 public:
  enum class Kind {
    True,
    Not,
    And,
    HasValue,
    Filter,
    Ref,
    GEq,
    Equals,
    Disjoint,
    LessThan,
    Closed,
  };

  static ConstraintPtr true_c();
  static ConstraintPtr not_c(ConstraintPtr c);
  static ConstraintPtr and_c(ConstraintPtr a, ConstraintPtr b);
  /// Right-fold of and_c; empty list is true_c.
  static ConstraintPtr and_all(std::vector<ConstraintPtr> cs);
  static ConstraintPtr or_c(ConstraintPtr a, ConstraintPtr b);
  static ConstraintPtr has_value(Term t);
  static ConstraintPtr filter(Filter f);
  static ConstraintPtr ref(ShapeName s);
  /// "at least n q-values satisfy c"; n must be >= 1 (n = 0 would be the
  /// trivially true constraint and is rejected to keep a unique normal form).
  static ConstraintPtr geq(unsigned n, PathPtr q, ConstraintPtr c);
  /// "all q-values satisfy c", encoded as not(geq(1, q, not c)).
  static ConstraintPtr forall(PathPtr q, ConstraintPtr c);
  static ConstraintPtr equals(PathPtr q, Term p);
  static ConstraintPtr disjoint(PathPtr q, Term p);
  static ConstraintPtr less_than(PathPtr q, Term p, bool or_equals, bool inverted = false);
  static ConstraintPtr closed(std::set<Term> allowed);

  Kind kind() const { return kind_; }
  const ConstraintPtr& left() const { return left_; }
  const ConstraintPtr& right() const { return right_; }
  const Term& term() const { return term_; }
  const class Filter& filter_value() const { return *filter_; }
  const ShapeName& ref_name() const { return ref_; }
  unsigned count() const { return count_; }
  const PathPtr& path() const { return path_; }
  bool or_equals() const { return or_equals_; }
  bool inverted() const { return inverted_; }
  const std::set<Term>& allowed() const { return allowed_; }

 private:
  explicit Constraint(Kind kind) : kind_(kind) {}

  Kind kind_;
  ConstraintPtr left_;
  ConstraintPtr right_;
  Term term_ = Term::iri("urn:shaperec:unset");
  std::shared_ptr<const Filter> filter_;
  ShapeName ref_{Term::iri("urn:shaperec:unset")};
  unsigned count_ = 0;
  PathPtr path_;
  bool or_equals_ = false;
  bool inverted_ = false;
  std::set<Term> allowed_;
};

bool equal(const Constraint& a, const Constraint& b);
inline bool equal(const ConstraintPtr& a, const ConstraintPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return equal(*a, *b);
}

// ---------------------------------------------------------------------------
// Shapes and documents

struct Shape {
  ShapeName name;
  std::set<TargetDecl> targets;
  ConstraintPtr constraint;  // never null; empty constraint is true_c
};

/// A set of shapes with pairwise distinct names where every shape reference
/// resolves to a shape of the document. Construction validates both
/// invariants; shape order is preserved for deterministic translation.
class Document {
 public:
  Document() = default;
  explicit Document(std::vector<Shape> shapes);

  const std::vector<Shape>& shapes() const { return shapes_; }
  bool empty() const { return shapes_.empty(); }
  std::size_t size() const { return shapes_.size(); }

  bool has_shape(const ShapeName& name) const { return index_.contains(name); }
  const Shape& shape(const ShapeName& name) const;

 private:
  std::vector<Shape> shapes_;
  std::map<ShapeName, std::size_t> index_;
};

}  // namespace shaperec
