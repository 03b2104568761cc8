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

#include "shaperec/scl.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

namespace shaperec::scl {

// ---------------------------------------------------------------------------
// Factories

SclPathPtr SclPath::rel(Term p, bool inverted) {
  return SclPathPtr(new SclPath(Kind::Rel, std::move(p), inverted, nullptr, nullptr));
}
SclPathPtr SclPath::seq(SclPathPtr a, SclPathPtr b) {
  return SclPathPtr(new SclPath(Kind::Seq, Term::iri("urn:shaperec:unset"), false, std::move(a),
                                std::move(b)));
}
SclPathPtr SclPath::alt(SclPathPtr a, SclPathPtr b) {
  return SclPathPtr(new SclPath(Kind::Alt, Term::iri("urn:shaperec:unset"), false, std::move(a),
                                std::move(b)));
}
SclPathPtr SclPath::zero_or_one(SclPathPtr q) {
  return SclPathPtr(new SclPath(Kind::ZeroOrOne, Term::iri("urn:shaperec:unset"), false,
                                std::move(q), nullptr));
}
SclPathPtr SclPath::star(SclPathPtr q) {
  return SclPathPtr(
      new SclPath(Kind::Star, Term::iri("urn:shaperec:unset"), false, std::move(q), nullptr));
}
SclPathPtr SclPath::plus(SclPathPtr q) {
  return SclPathPtr(
      new SclPath(Kind::Plus, Term::iri("urn:shaperec:unset"), false, std::move(q), nullptr));
}

SclFormulaPtr SclFormula::top() {
  static const SclFormulaPtr instance(new SclFormula(Kind::Top));
  return instance;
}
SclFormulaPtr SclFormula::neg(SclFormulaPtr f) {
  auto r = new SclFormula(Kind::Neg);
  r->left_ = std::move(f);
  return SclFormulaPtr(r);
}
SclFormulaPtr SclFormula::conj(SclFormulaPtr a, SclFormulaPtr b) {
  auto r = new SclFormula(Kind::Conj);
  r->left_ = std::move(a);
  r->right_ = std::move(b);
  return SclFormulaPtr(r);
}
SclFormulaPtr SclFormula::eq_const(Term c) {
  auto r = new SclFormula(Kind::EqConst);
  r->constant_ = std::move(c);
  return SclFormulaPtr(r);
}
SclFormulaPtr SclFormula::filter_atom(Filter f) {
  auto r = new SclFormula(Kind::FilterAtom);
  r->filter_ = std::make_shared<const Filter>(std::move(f));
  return SclFormulaPtr(r);
}
SclFormulaPtr SclFormula::shape_atom(ShapeName s) {
  auto r = new SclFormula(Kind::ShapeAtom);
  r->shape_ = std::move(s);
  return SclFormulaPtr(r);
}
SclFormulaPtr SclFormula::exists(SclPathPtr pi, SclFormulaPtr body) {
  auto r = new SclFormula(Kind::Exists);
  r->path_ = std::move(pi);
  r->left_ = std::move(body);
  return SclFormulaPtr(r);
}
SclFormulaPtr SclFormula::count_geq(unsigned n, SclPathPtr pi, SclFormulaPtr body) {
  if (n < 1) throw std::invalid_argument("counting quantifier requires n >= 1");
  auto r = new SclFormula(Kind::CountGeq);
  r->count_ = n;
  r->path_ = std::move(pi);
  r->left_ = std::move(body);
  return SclFormulaPtr(r);
}
SclFormulaPtr SclFormula::disjoint_atom(SclPathPtr pi, Term relation) {
  auto r = new SclFormula(Kind::DisjointAtom);
  r->path_ = std::move(pi);
  r->constant_ = std::move(relation);
  return SclFormulaPtr(r);
}
SclFormulaPtr SclFormula::equals_atom(SclPathPtr pi, Term relation) {
  auto r = new SclFormula(Kind::EqualsAtom);
  r->path_ = std::move(pi);
  r->constant_ = std::move(relation);
  return SclFormulaPtr(r);
}
SclFormulaPtr SclFormula::order_all(SclPathPtr pi, Term relation, bool or_equals, bool inverted) {
  auto r = new SclFormula(Kind::OrderAll);
  r->path_ = std::move(pi);
  r->constant_ = std::move(relation);
  r->or_equals_ = or_equals;
  r->inverted_ = inverted;
  return SclFormulaPtr(r);
}
SclFormulaPtr SclFormula::closed_form(std::set<Term> allowed) {
  auto r = new SclFormula(Kind::ClosedForm);
  r->allowed_ = std::move(allowed);
  return SclFormulaPtr(r);
}

// ---------------------------------------------------------------------------
// Structural equality

bool equal(const SclPathPtr& a, const SclPathPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->kind() != b->kind()) return false;
  switch (a->kind()) {
    case SclPath::Kind::Rel:
      return a->relation() == b->relation() && a->inverted() == b->inverted();
    case SclPath::Kind::Seq:
    case SclPath::Kind::Alt:
      return equal(a->left(), b->left()) && equal(a->right(), b->right());
    default:
      return equal(a->left(), b->left());
  }
}

bool equal(const SclFormulaPtr& a, const SclFormulaPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->kind() != b->kind()) return false;
  switch (a->kind()) {
    case SclFormula::Kind::Top:
      return true;
    case SclFormula::Kind::Neg:
      return equal(a->left(), b->left());
    case SclFormula::Kind::Conj:
      return equal(a->left(), b->left()) && equal(a->right(), b->right());
    case SclFormula::Kind::EqConst:
      return a->constant() == b->constant();
    case SclFormula::Kind::FilterAtom:
      return a->filter() == b->filter();
    case SclFormula::Kind::ShapeAtom:
      return a->shape() == b->shape();
    case SclFormula::Kind::Exists:
      return equal(a->path(), b->path()) && equal(a->left(), b->left());
    case SclFormula::Kind::CountGeq:
      return a->count() == b->count() && equal(a->path(), b->path()) &&
             equal(a->left(), b->left());
    case SclFormula::Kind::DisjointAtom:
    case SclFormula::Kind::EqualsAtom:
      return a->relation() == b->relation() && equal(a->path(), b->path());
    case SclFormula::Kind::OrderAll:
      return a->relation() == b->relation() && a->or_equals() == b->or_equals() &&
             a->inverted() == b->inverted() && equal(a->path(), b->path());
    case SclFormula::Kind::ClosedForm:
    default:
      return a->allowed() == b->allowed();
  }
}

bool equal(const SclAxiom& a, const SclAxiom& b) {
  if (a.kind != b.kind) return false;
  if (a.kind == SclAxiom::Kind::Target) return a.target == b.target;
  return equal(a.constraint, b.constraint);
}

bool equivalent_sentences(const SclSentence& a, const SclSentence& b) {
  if (a.conjuncts.size() != b.conjuncts.size()) return false;
  std::vector<bool> used(b.conjuncts.size(), false);
  for (const SclAxiom& ax : a.conjuncts) {
    bool matched = false;
    for (std::size_t i = 0; i < b.conjuncts.size(); ++i) {
      if (!used[i] && equal(ax, b.conjuncts[i])) {
        used[i] = true;
        matched = true;
        break;
      }
    }
    if (!matched) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Translation

namespace {

SclPathPtr translate_path(const Path& q, bool inverted) {
  switch (q.kind()) {
    case Path::Kind::Pred:
      return SclPath::rel(q.predicate(), inverted);
    case Path::Kind::Inverse:
      return translate_path(*q.left(), !inverted);
    case Path::Kind::Seq:
      // (p ; q)^- = q^- ; p^-
      if (inverted)
        return SclPath::seq(translate_path(*q.right(), true), translate_path(*q.left(), true));
      return SclPath::seq(translate_path(*q.left(), false), translate_path(*q.right(), false));
    case Path::Kind::Alt:
      return SclPath::alt(translate_path(*q.left(), inverted),
                          translate_path(*q.right(), inverted));
    case Path::Kind::ZeroOrOne:
      return SclPath::zero_or_one(translate_path(*q.left(), inverted));
    case Path::Kind::ZeroOrMore:
      return SclPath::star(translate_path(*q.left(), inverted));
    case Path::Kind::OneOrMore:
    default:
      return SclPath::plus(translate_path(*q.left(), inverted));
  }
}

SclFormulaPtr translate_constraint(const Constraint& c) {
  switch (c.kind()) {
    case Constraint::Kind::True:
      return SclFormula::top();
    case Constraint::Kind::Not:
      return SclFormula::neg(translate_constraint(*c.left()));
    case Constraint::Kind::And:
      return SclFormula::conj(translate_constraint(*c.left()), translate_constraint(*c.right()));
    case Constraint::Kind::HasValue:
      return SclFormula::eq_const(c.term());
    case Constraint::Kind::Filter:
      return SclFormula::filter_atom(c.filter_value());
    case Constraint::Kind::Ref:
      return SclFormula::shape_atom(c.ref_name());
    case Constraint::Kind::GEq: {
      SclPathPtr pi = translate_path(*c.path(), false);
      SclFormulaPtr body = translate_constraint(*c.left());
      if (c.count() == 1) return SclFormula::exists(std::move(pi), std::move(body));
      return SclFormula::count_geq(c.count(), std::move(pi), std::move(body));
    }
    case Constraint::Kind::Equals:
      return SclFormula::equals_atom(translate_path(*c.path(), false), c.term());
    case Constraint::Kind::Disjoint:
      return SclFormula::disjoint_atom(translate_path(*c.path(), false), c.term());
    case Constraint::Kind::LessThan:
      return SclFormula::order_all(translate_path(*c.path(), false), c.term(), c.or_equals(),
                                   c.inverted());
    case Constraint::Kind::Closed:
    default:
      return SclFormula::closed_form(c.allowed());
  }
}

TargetAxiom::Form target_form(TargetDecl::Kind kind) {
  switch (kind) {
    case TargetDecl::Kind::Node: return TargetAxiom::Form::Node;
    case TargetDecl::Kind::Class: return TargetAxiom::Form::Class;
    case TargetDecl::Kind::SubjectsOf: return TargetAxiom::Form::SubjectsOf;
    case TargetDecl::Kind::ObjectsOf:
    default: return TargetAxiom::Form::ObjectsOf;
  }
}

}  // namespace

SclSentence translate(const Document& d) {
  SclSentence sentence;
  for (const Shape& s : d.shapes()) {
    for (const TargetDecl& t : s.targets) {
      sentence.conjuncts.push_back(
          SclAxiom::make_target(TargetAxiom{target_form(t.kind), s.name, t.param}));
    }
    sentence.conjuncts.push_back(SclAxiom::make_constraint(
        ConstraintAxiom{s.name, translate_constraint(*s.constraint)}));
  }
  return sentence;
}

// ---------------------------------------------------------------------------
// Rendering

namespace {

std::string variable(unsigned index) {
  switch (index) {
    case 0: return "x";
    case 1: return "y";
    case 2: return "z";
    case 3: return "w";
    default: return "v" + std::to_string(index);
  }
}

std::string shape_relation(const ShapeName& s) { return "S_" + s.id.to_string(); }

std::string role_atom(const Term& relation, bool inverted, const std::string& a,
                      const std::string& b) {
  return "R_" + relation.to_string() + (inverted ? "^" : "") + "(" + a + ", " + b + ")";
}

std::string filter_atom_name(const Filter& f) {
  switch (f.kind()) {
    case Filter::Kind::NodeKindIri: return "F_nodeKind_iri";
    case Filter::Kind::NodeKindBlank: return "F_nodeKind_blank";
    case Filter::Kind::NodeKindLiteral: return "F_nodeKind_literal";
    case Filter::Kind::Datatype: return "F_datatype_" + f.datatype_iri().to_string();
    case Filter::Kind::MinLength: return "F_minLength_" + std::to_string(f.length());
    case Filter::Kind::MaxLength: return "F_maxLength_" + std::to_string(f.length());
    case Filter::Kind::Pattern: {
      std::string quoted = "\"";
      for (char c : f.pattern_text()) {
        if (c == '"' || c == '\\') quoted += '\\';
        quoted += c;
      }
      return "F_pattern_" + quoted + "\"";
    }
    case Filter::Kind::InSet:
    default: {
      std::string out = "F_in_{";
      bool first = true;
      for (const Term& t : f.terms()) {
        if (!first) out += ", ";
        first = false;
        out += t.to_string();
      }
      return out + "}";
    }
  }
}

// Paths. Rel and Star render self-delimiting; other forms are wrapped in
// parentheses when used as operands.
std::string render_path(const SclPathPtr& pi, const std::string& a, const std::string& b,
                        unsigned& next_var);

std::string render_path_operand(const SclPathPtr& pi, const std::string& a, const std::string& b,
                                unsigned& next_var) {
  std::string text = render_path(pi, a, b, next_var);
  if (pi->kind() == SclPath::Kind::Rel || pi->kind() == SclPath::Kind::Star) return text;
  return "(" + text + ")";
}

std::string render_path(const SclPathPtr& pi, const std::string& a, const std::string& b,
                        unsigned& next_var) {
  switch (pi->kind()) {
    case SclPath::Kind::Rel:
      return role_atom(pi->relation(), pi->inverted(), a, b);
    case SclPath::Kind::Seq: {
      std::string mid = variable(next_var++);
      std::string first = render_path_operand(pi->left(), a, mid, next_var);
      std::string second = render_path_operand(pi->right(), mid, b, next_var);
      return "exists " + mid + " . " + first + " & " + second;
    }
    case SclPath::Kind::Alt:
      return render_path_operand(pi->left(), a, b, next_var) + " | " +
             render_path_operand(pi->right(), a, b, next_var);
    case SclPath::Kind::ZeroOrOne:
      return "(" + a + " = " + b + ") | " + render_path_operand(pi->left(), a, b, next_var);
    case SclPath::Kind::Star:
      return "(" + render_path(pi->left(), a, b, next_var) + ")*";
    case SclPath::Kind::Plus:
    default: {
      // pi ; (pi)*
      std::string mid = variable(next_var++);
      std::string first = render_path_operand(pi->left(), a, mid, next_var);
      std::string star = "(" + render_path(pi->left(), mid, b, next_var) + ")*";
      return "exists " + mid + " . " + first + " & " + star;
    }
  }
}

std::string render_formula(const SclFormulaPtr& f, const std::string& var, unsigned& next_var);

bool self_delimiting(const SclFormulaPtr& f) {
  switch (f->kind()) {
    case SclFormula::Kind::Top:
    case SclFormula::Kind::FilterAtom:
    case SclFormula::Kind::ShapeAtom:
    case SclFormula::Kind::Neg:
    case SclFormula::Kind::DisjointAtom:
      return true;
    default:
      return false;
  }
}

std::string render_operand(const SclFormulaPtr& f, const std::string& var, unsigned& next_var) {
  std::string text = render_formula(f, var, next_var);
  if (self_delimiting(f)) return text;
  return "(" + text + ")";
}

std::string render_formula(const SclFormulaPtr& f, const std::string& var, unsigned& next_var) {
  switch (f->kind()) {
    case SclFormula::Kind::Top:
      return "true";
    case SclFormula::Kind::Neg:
      return "!(" + render_formula(f->left(), var, next_var) + ")";
    case SclFormula::Kind::Conj:
      return render_operand(f->left(), var, next_var) + " & " +
             render_operand(f->right(), var, next_var);
    case SclFormula::Kind::EqConst:
      return var + " = " + f->constant().to_string();
    case SclFormula::Kind::FilterAtom:
      return filter_atom_name(f->filter()) + "(" + var + ")";
    case SclFormula::Kind::ShapeAtom:
      return shape_relation(f->shape()) + "(" + var + ")";
    case SclFormula::Kind::Exists:
    case SclFormula::Kind::CountGeq: {
      std::string bound = variable(next_var++);
      std::string head = f->kind() == SclFormula::Kind::Exists
                             ? "exists " + bound
                             : "exists>=" + std::to_string(f->count()) + " " + bound;
      std::string pi = render_path_operand(f->path(), var, bound, next_var);
      std::string body = render_operand(f->left(), bound, next_var);
      return head + " . " + pi + " & " + body;
    }
    case SclFormula::Kind::DisjointAtom: {
      std::string bound = variable(next_var++);
      std::string pi = render_path_operand(f->path(), var, bound, next_var);
      return "!(exists " + bound + " . " + pi + " & " +
             role_atom(f->relation(), false, var, bound) + ")";
    }
    case SclFormula::Kind::EqualsAtom: {
      std::string bound = variable(next_var++);
      std::string pi = render_path_operand(f->path(), var, bound, next_var);
      return "forall " + bound + " . " + pi + " <-> " +
             role_atom(f->relation(), false, var, bound);
    }
    case SclFormula::Kind::OrderAll: {
      std::string vy = variable(next_var++);
      std::string vz = variable(next_var++);
      std::string pi = render_path_operand(f->path(), var, vy, next_var);
      std::string op = f->inverted() ? (f->or_equals() ? ">=" : ">")
                                     : (f->or_equals() ? "<=" : "<");
      return "forall " + vy + ", " + vz + " . " + pi + " & " +
             role_atom(f->relation(), false, var, vz) + " -> " + vy + " " + op + " " + vz;
    }
    case SclFormula::Kind::ClosedForm:
    default: {
      std::string vy = variable(next_var++);
      std::string disjunction;
      bool first = true;
      for (const Term& t : f->allowed()) {
        if (!first) disjunction += " | ";
        first = false;
        disjunction += "p = " + t.to_string();
      }
      if (f->allowed().empty()) disjunction = "false";
      return "forall " + vy + ", p . triple(" + var + ", p, " + vy + ") -> (" + disjunction + ")";
    }
  }
}

}  // namespace

std::string render(const SclFormulaPtr& f) {
  unsigned next_var = 1;
  return render_formula(f, variable(0), next_var);
}

std::string render(const SclAxiom& a) {
  if (a.kind == SclAxiom::Kind::Target) {
    const TargetAxiom& t = a.target;
    switch (t.form) {
      case TargetAxiom::Form::Node:
        return shape_relation(t.shape) + "(" + t.param.to_string() + ")";
      case TargetAxiom::Form::Class:
        return "forall x . isA(x, " + t.param.to_string() + ") -> " + shape_relation(t.shape) +
               "(x)";
      case TargetAxiom::Form::SubjectsOf:
        return "forall x, y . " + role_atom(t.param, false, "x", "y") + " -> " +
               shape_relation(t.shape) + "(x)";
      case TargetAxiom::Form::ObjectsOf:
      default:
        return "forall x, y . " + role_atom(t.param, true, "x", "y") + " -> " +
               shape_relation(t.shape) + "(x)";
    }
  }
  unsigned next_var = 1;
  return "forall x . " + shape_relation(a.constraint.shape) + "(x) <-> " +
         render_formula(a.constraint.body, "x", next_var);
}

std::string render(const SclSentence& s) {
  if (s.conjuncts.empty()) return "true";
  std::string out;
  for (std::size_t i = 0; i < s.conjuncts.size(); ++i) {
    if (i > 0) out += "\n& ";
    out += render(s.conjuncts[i]);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Well-formedness and fragments

namespace {

void collect_shape_atoms(const SclFormulaPtr& f, std::set<ShapeName>& out) {
  if (!f) return;
  if (f->kind() == SclFormula::Kind::ShapeAtom) out.insert(f->shape());
  collect_shape_atoms(f->left(), out);
  collect_shape_atoms(f->right(), out);
}

}  // namespace

bool well_formed(const SclSentence& s) {
  std::set<ShapeName> mentioned;
  std::map<ShapeName, int> defined;
  for (const SclAxiom& a : s.conjuncts) {
    if (a.kind == SclAxiom::Kind::Target) {
      mentioned.insert(a.target.shape);
    } else {
      mentioned.insert(a.constraint.shape);
      ++defined[a.constraint.shape];
      collect_shape_atoms(a.constraint.body, mentioned);
    }
  }
  for (const ShapeName& name : mentioned) {
    auto it = defined.find(name);
    if (it == defined.end() || it->second != 1) return false;
  }
  return true;
}

namespace {

void path_fragletters(const SclPathPtr& pi, std::set<char>& out) {
  if (!pi) return;
  switch (pi->kind()) {
    case SclPath::Kind::Rel:
      return;
    case SclPath::Kind::Seq:
      out.insert('S');
      break;
    case SclPath::Kind::Alt:
      out.insert('A');
      break;
    case SclPath::Kind::ZeroOrOne:
      out.insert('Z');
      break;
    case SclPath::Kind::Star:
    case SclPath::Kind::Plus:
      out.insert('T');
      break;
  }
  path_fragletters(pi->left(), out);
  path_fragletters(pi->right(), out);
}

void formula_fragletters(const SclFormulaPtr& f, std::set<char>& out) {
  if (!f) return;
  switch (f->kind()) {
    case SclFormula::Kind::CountGeq:
      if (f->count() != 1) out.insert('C');
      path_fragletters(f->path(), out);
      break;
    case SclFormula::Kind::Exists:
      path_fragletters(f->path(), out);
      break;
    case SclFormula::Kind::DisjointAtom:
      out.insert('D');
      path_fragletters(f->path(), out);
      break;
    case SclFormula::Kind::EqualsAtom:
      out.insert('E');
      path_fragletters(f->path(), out);
      break;
    case SclFormula::Kind::OrderAll:
      out.insert('O');
      path_fragletters(f->path(), out);
      break;
    default:
      break;
  }
  formula_fragletters(f->left(), out);
  formula_fragletters(f->right(), out);
}

}  // namespace

std::set<char> fragment_of(const SclSentence& s) {
  std::set<char> out;
  for (const SclAxiom& a : s.conjuncts) {
    if (a.kind == SclAxiom::Kind::Constraint) formula_fragletters(a.constraint.body, out);
  }
  return out;
}

}  // namespace shaperec::scl
