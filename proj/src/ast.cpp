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

#include "shaperec/ast.hpp"

#include <regex>
#include <stdexcept>

#include "shaperec/analysis.hpp"

namespace shaperec {

// --------------------------------------------------------------------------
// Paths

PathPtr Path::pred(Term p) {
  return PathPtr(new Path(Kind::Pred, std::move(p), nullptr, nullptr));
}
PathPtr Path::inverse(PathPtr q) {
  if (!q) throw std::invalid_argument("null path");
  return PathPtr(new Path(Kind::Inverse, Term::iri("urn:shaperec:unset"), std::move(q), nullptr));
}
PathPtr Path::seq(PathPtr a, PathPtr b) {
  if (!a || !b) throw std::invalid_argument("null path");
  return PathPtr(new Path(Kind::Seq, Term::iri("urn:shaperec:unset"), std::move(a), std::move(b)));
}
PathPtr Path::alt(PathPtr a, PathPtr b) {
  if (!a || !b) throw std::invalid_argument("null path");
  return PathPtr(new Path(Kind::Alt, Term::iri("urn:shaperec:unset"), std::move(a), std::move(b)));
}
PathPtr Path::zero_or_one(PathPtr q) {
  if (!q) throw std::invalid_argument("null path");
  return PathPtr(new Path(Kind::ZeroOrOne, Term::iri("urn:shaperec:unset"), std::move(q), nullptr));
}
PathPtr Path::zero_or_more(PathPtr q) {
  if (!q) throw std::invalid_argument("null path");
  return PathPtr(new Path(Kind::ZeroOrMore, Term::iri("urn:shaperec:unset"), std::move(q), nullptr));
}
PathPtr Path::one_or_more(PathPtr q) {
  if (!q) throw std::invalid_argument("null path");
  return PathPtr(new Path(Kind::OneOrMore, Term::iri("urn:shaperec:unset"), std::move(q), nullptr));
}

bool equal(const Path& a, const Path& b) {
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Path::Kind::Pred:
      return a.predicate() == b.predicate();
    case Path::Kind::Seq:
    case Path::Kind::Alt:
      return equal(a.left(), b.left()) && equal(a.right(), b.right());
    default:
      return equal(a.left(), b.left());
  }
}

// --------------------------------------------------------------------------
// Filters

Filter Filter::datatype(Term d) {
  Filter f(Kind::Datatype);
  f.datatype_ = std::move(d);
  return f;
}
Filter Filter::min_length(unsigned k) {
  Filter f(Kind::MinLength);
  f.length_ = k;
  return f;
}
Filter Filter::max_length(unsigned k) {
  Filter f(Kind::MaxLength);
  f.length_ = k;
  return f;
}
Filter Filter::pattern(std::string regex) {
  std::shared_ptr<const std::regex> compiled;
  try {
    compiled = std::make_shared<const std::regex>(regex, std::regex::ECMAScript);
  } catch (const std::regex_error& e) {
    throw std::invalid_argument("regex does not compile: " + std::string(e.what()));
  }
  Filter f(Kind::Pattern);
  f.pattern_ = std::move(regex);
  f.compiled_ = std::move(compiled);
  return f;
}
Filter Filter::in_set(std::set<Term> terms) {
  Filter f(Kind::InSet);
  f.terms_ = std::move(terms);
  return f;
}

// --------------------------------------------------------------------------
// Constraints

ConstraintPtr Constraint::true_c() {
  static const ConstraintPtr instance(new Constraint(Kind::True));
  return instance;
}
ConstraintPtr Constraint::not_c(ConstraintPtr c) {
  if (!c) throw std::invalid_argument("null constraint");
  auto r = new Constraint(Kind::Not);
  r->left_ = std::move(c);
  return ConstraintPtr(r);
}
ConstraintPtr Constraint::and_c(ConstraintPtr a, ConstraintPtr b) {
  if (!a || !b) throw std::invalid_argument("null constraint");
  auto r = new Constraint(Kind::And);
  r->left_ = std::move(a);
  r->right_ = std::move(b);
  return ConstraintPtr(r);
}
ConstraintPtr Constraint::and_all(std::vector<ConstraintPtr> cs) {
  if (cs.empty()) return true_c();
  ConstraintPtr acc = cs.back();
  for (auto it = cs.rbegin() + 1; it != cs.rend(); ++it) acc = and_c(*it, std::move(acc));
  return acc;
}
ConstraintPtr Constraint::or_c(ConstraintPtr a, ConstraintPtr b) {
  return not_c(and_c(not_c(std::move(a)), not_c(std::move(b))));
}
ConstraintPtr Constraint::has_value(Term t) {
  auto r = new Constraint(Kind::HasValue);
  r->term_ = std::move(t);
  return ConstraintPtr(r);
}
ConstraintPtr Constraint::filter(Filter f) {
  auto r = new Constraint(Kind::Filter);
  r->filter_ = std::make_shared<const Filter>(std::move(f));
  return ConstraintPtr(r);
}
ConstraintPtr Constraint::ref(ShapeName s) {
  auto r = new Constraint(Kind::Ref);
  r->ref_ = std::move(s);
  return ConstraintPtr(r);
}
ConstraintPtr Constraint::geq(unsigned n, PathPtr q, ConstraintPtr c) {
  if (n < 1) throw std::invalid_argument("counting quantifier requires n >= 1");
  if (!q || !c) throw std::invalid_argument("null path or constraint");
  auto r = new Constraint(Kind::GEq);
  r->count_ = n;
  r->path_ = std::move(q);
  r->left_ = std::move(c);
  return ConstraintPtr(r);
}
ConstraintPtr Constraint::forall(PathPtr q, ConstraintPtr c) {
  return not_c(geq(1, std::move(q), not_c(std::move(c))));
}
ConstraintPtr Constraint::equals(PathPtr q, Term p) {
  if (!q) throw std::invalid_argument("null path");
  auto r = new Constraint(Kind::Equals);
  r->path_ = std::move(q);
  r->term_ = std::move(p);
  return ConstraintPtr(r);
}
ConstraintPtr Constraint::disjoint(PathPtr q, Term p) {
  if (!q) throw std::invalid_argument("null path");
  auto r = new Constraint(Kind::Disjoint);
  r->path_ = std::move(q);
  r->term_ = std::move(p);
  return ConstraintPtr(r);
}
ConstraintPtr Constraint::less_than(PathPtr q, Term p, bool or_equals, bool inverted) {
  if (!q) throw std::invalid_argument("null path");
  auto r = new Constraint(Kind::LessThan);
  r->path_ = std::move(q);
  r->term_ = std::move(p);
  r->or_equals_ = or_equals;
  r->inverted_ = inverted;
  return ConstraintPtr(r);
}
ConstraintPtr Constraint::closed(std::set<Term> allowed) {
  auto r = new Constraint(Kind::Closed);
  r->allowed_ = std::move(allowed);
  return ConstraintPtr(r);
}

bool equal(const Constraint& a, const Constraint& b) {
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Constraint::Kind::True:
      return true;
    case Constraint::Kind::Not:
      return equal(a.left(), b.left());
    case Constraint::Kind::And:
      return equal(a.left(), b.left()) && equal(a.right(), b.right());
    case Constraint::Kind::HasValue:
      return a.term() == b.term();
    case Constraint::Kind::Filter:
      return a.filter_value() == b.filter_value();
    case Constraint::Kind::Ref:
      return a.ref_name() == b.ref_name();
    case Constraint::Kind::GEq:
      return a.count() == b.count() && equal(a.path(), b.path()) && equal(a.left(), b.left());
    case Constraint::Kind::Equals:
    case Constraint::Kind::Disjoint:
      return a.term() == b.term() && equal(a.path(), b.path());
    case Constraint::Kind::LessThan:
      return a.term() == b.term() && a.or_equals() == b.or_equals() &&
             a.inverted() == b.inverted() && equal(a.path(), b.path());
    case Constraint::Kind::Closed:
    default:
      return a.allowed() == b.allowed();
  }
}

// --------------------------------------------------------------------------
// Documents

Document::Document(std::vector<Shape> shapes) : shapes_(std::move(shapes)) {
  for (std::size_t i = 0; i < shapes_.size(); ++i) {
    if (!shapes_[i].constraint) throw std::invalid_argument("shape without constraint");
    auto [it, inserted] = index_.emplace(shapes_[i].name, i);
    if (!inserted)
      throw std::invalid_argument("duplicate shape name " + shapes_[i].name.to_string());
  }
  for (const Shape& s : shapes_) {
    for (const ShapeName& r : direct_refs(*s.constraint)) {
      if (!index_.contains(r))
        throw std::invalid_argument("reference to unknown shape " + r.to_string());
    }
  }
}

const Shape& Document::shape(const ShapeName& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) throw std::out_of_range("unknown shape " + name.to_string());
  return shapes_[it->second];
}

}  // namespace shaperec
