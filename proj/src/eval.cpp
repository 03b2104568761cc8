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

#include "shaperec/eval.hpp"

#include <deque>
#include <regex>

#include "shaperec/vocab.hpp"

namespace shaperec {

// --------------------------------------------------------------------------
// Node universe and targets

std::set<Term> node_universe(const Graph& g, const Document& d) {
  std::set<Term> universe = g.nodes();
  for (const Shape& s : d.shapes()) {
    for (const TargetDecl& t : s.targets) {
      if (t.kind == TargetDecl::Kind::Node) universe.insert(t.param);
    }
  }
  return universe;
}

std::set<Term> target_nodes(const Graph& g, const TargetDecl& t) {
  switch (t.kind) {
    case TargetDecl::Kind::Node:
      // A node target selects its constant whether or not the graph mentions
      // it; empty graphs are not trivially valid.
      return {t.param};
    case TargetDecl::Kind::Class:
      return g.subjects(vocab::rdf_type(), t.param);
    case TargetDecl::Kind::SubjectsOf:
      return g.subjects_with_predicate(t.param);
    case TargetDecl::Kind::ObjectsOf:
    default:
      return g.objects_with_predicate(t.param);
  }
}

// --------------------------------------------------------------------------
// Path evaluation

namespace {

std::set<Term> eval_inverse(const Graph& g, const Path& q, const Term& start);

std::set<Term> closure(const Graph& g, const Path& step, const std::set<Term>& seeds,
                       bool inverted) {
  std::set<Term> seen = seeds;
  std::deque<Term> frontier(seeds.begin(), seeds.end());
  while (!frontier.empty()) {
    Term current = frontier.front();
    frontier.pop_front();
    std::set<Term> next =
        inverted ? eval_inverse(g, step, current) : path_eval(g, step, current);
    for (const Term& t : next) {
      if (seen.insert(t).second) frontier.push_back(t);
    }
  }
  return seen;
}

// Evaluates q right-to-left: { m | start is reachable from m through q }.
std::set<Term> eval_inverse(const Graph& g, const Path& q, const Term& start) {
  switch (q.kind()) {
    case Path::Kind::Pred:
      return g.subjects(q.predicate(), start);
    case Path::Kind::Inverse:
      return path_eval(g, *q.left(), start);
    case Path::Kind::Seq: {
      std::set<Term> out;
      for (const Term& mid : eval_inverse(g, *q.right(), start)) {
        std::set<Term> firsts = eval_inverse(g, *q.left(), mid);
        out.insert(firsts.begin(), firsts.end());
      }
      return out;
    }
    case Path::Kind::Alt: {
      std::set<Term> out = eval_inverse(g, *q.left(), start);
      std::set<Term> more = eval_inverse(g, *q.right(), start);
      out.insert(more.begin(), more.end());
      return out;
    }
    case Path::Kind::ZeroOrOne: {
      std::set<Term> out = eval_inverse(g, *q.left(), start);
      out.insert(start);
      return out;
    }
    case Path::Kind::ZeroOrMore:
      return closure(g, *q.left(), {start}, /*inverted=*/true);
    case Path::Kind::OneOrMore:
    default:
      return closure(g, *q.left(), eval_inverse(g, *q.left(), start), /*inverted=*/true);
  }
}

}  // namespace

std::set<Term> path_eval(const Graph& g, const Path& q, const Term& start) {
  switch (q.kind()) {
    case Path::Kind::Pred:
      return g.objects(start, q.predicate());
    case Path::Kind::Inverse:
      return eval_inverse(g, *q.left(), start);
    case Path::Kind::Seq: {
      std::set<Term> out;
      for (const Term& mid : path_eval(g, *q.left(), start)) {
        std::set<Term> seconds = path_eval(g, *q.right(), mid);
        out.insert(seconds.begin(), seconds.end());
      }
      return out;
    }
    case Path::Kind::Alt: {
      std::set<Term> out = path_eval(g, *q.left(), start);
      std::set<Term> more = path_eval(g, *q.right(), start);
      out.insert(more.begin(), more.end());
      return out;
    }
    case Path::Kind::ZeroOrOne: {
      std::set<Term> out = path_eval(g, *q.left(), start);
      out.insert(start);
      return out;
    }
    case Path::Kind::ZeroOrMore:
      return closure(g, *q.left(), {start}, /*inverted=*/false);
    case Path::Kind::OneOrMore:
    default:
      return closure(g, *q.left(), path_eval(g, *q.left(), start), /*inverted=*/false);
  }
}

// --------------------------------------------------------------------------
// Filters

namespace {

std::size_t codepoint_length(const std::string& s) {
  std::size_t count = 0;
  for (unsigned char c : s) {
    if ((c & 0xC0) != 0x80) ++count;  // skip UTF-8 continuation bytes
  }
  return count;
}

bool has_string_form(const Term& t) { return t.is_literal() || t.is_iri(); }

}  // namespace

bool filter_matches(const Filter& f, const Term& t) {
  switch (f.kind()) {
    case Filter::Kind::NodeKindIri:
      return t.is_iri();
    case Filter::Kind::NodeKindBlank:
      return t.is_blank();
    case Filter::Kind::NodeKindLiteral:
      return t.is_literal();
    case Filter::Kind::Datatype:
      return t.is_literal() && t.datatype() == f.datatype_iri().value();
    case Filter::Kind::MinLength:
      return has_string_form(t) && codepoint_length(t.value()) >= f.length();
    case Filter::Kind::MaxLength:
      return has_string_form(t) && codepoint_length(t.value()) <= f.length();
    case Filter::Kind::Pattern: {
      if (!has_string_form(t)) return false;
      const auto* re = static_cast<const std::regex*>(f.compiled_pattern().get());
      return std::regex_search(t.value(), *re);
    }
    case Filter::Kind::InSet:
    default:
      return f.terms().contains(t);
  }
}

// --------------------------------------------------------------------------
// Literal ordering

namespace {

bool is_numeric_datatype(const std::string& dt) {
  return dt == vocab::kXsdInteger || dt == vocab::kXsdDecimal;
}

// Exact decimal representation: sign, integer digits, fraction digits.
struct DecimalParts {
  bool negative = false;
  std::string int_part;
  std::string frac_part;
};

bool parse_decimal(const std::string& lex, DecimalParts& out) {
  std::size_t i = 0;
  if (i < lex.size() && (lex[i] == '+' || lex[i] == '-')) {
    out.negative = lex[i] == '-';
    ++i;
  }
  std::size_t digits = 0;
  while (i < lex.size() && std::isdigit(static_cast<unsigned char>(lex[i]))) {
    out.int_part += lex[i++];
    ++digits;
  }
  if (i < lex.size() && lex[i] == '.') {
    ++i;
    while (i < lex.size() && std::isdigit(static_cast<unsigned char>(lex[i]))) {
      out.frac_part += lex[i++];
      ++digits;
    }
  }
  if (i != lex.size() || digits == 0) return false;
  while (out.int_part.size() > 1 && out.int_part.front() == '0') out.int_part.erase(0, 1);
  if (out.int_part.empty()) out.int_part = "0";
  while (!out.frac_part.empty() && out.frac_part.back() == '0') out.frac_part.pop_back();
  if (out.negative && out.int_part == "0" && out.frac_part.empty()) out.negative = false;
  return true;
}

// -1, 0, +1 for a < b, a == b, a > b on normalized magnitudes.
int compare_magnitude(const DecimalParts& a, const DecimalParts& b) {
  if (a.int_part.size() != b.int_part.size())
    return a.int_part.size() < b.int_part.size() ? -1 : 1;
  if (int c = a.int_part.compare(b.int_part); c != 0) return c < 0 ? -1 : 1;
  if (int c = a.frac_part.compare(b.frac_part); c != 0) return c < 0 ? -1 : 1;
  return 0;
}

int compare_decimal(const DecimalParts& a, const DecimalParts& b) {
  if (a.negative != b.negative) return a.negative ? -1 : 1;
  int m = compare_magnitude(a, b);
  return a.negative ? -m : m;
}

}  // namespace

bool literal_less(const Term& a, const Term& b, bool or_equals) {
  if (!a.is_literal() || !b.is_literal()) return false;
  if (is_numeric_datatype(a.datatype()) && is_numeric_datatype(b.datatype())) {
    DecimalParts da, db;
    if (!parse_decimal(a.value(), da) || !parse_decimal(b.value(), db)) return false;
    int c = compare_decimal(da, db);
    return or_equals ? c <= 0 : c < 0;
  }
  if (a.datatype() == vocab::kXsdString && b.datatype() == vocab::kXsdString) {
    int c = a.value().compare(b.value());
    return or_equals ? c <= 0 : c < 0;
  }
  return false;  // incomparable
}

// --------------------------------------------------------------------------
// Constraint evaluation

TruthValue eval_constraint(const Graph& g, const Assignment& sigma, const Constraint& c,
                           const Term& n) {
  switch (c.kind()) {
    case Constraint::Kind::True:
      return TruthValue::True;
    case Constraint::Kind::Not:
      return kleene_not(eval_constraint(g, sigma, *c.left(), n));
    case Constraint::Kind::And:
      return kleene_and(eval_constraint(g, sigma, *c.left(), n),
                        eval_constraint(g, sigma, *c.right(), n));
    case Constraint::Kind::HasValue:
      return truth_of(n == c.term());
    case Constraint::Kind::Filter:
      return truth_of(filter_matches(c.filter_value(), n));
    case Constraint::Kind::Ref:
      return sigma.lookup(n, c.ref_name());
    case Constraint::Kind::GEq: {
      std::set<Term> values = path_eval(g, *c.path(), n);
      std::size_t definitely = 0;  // evaluate True
      std::size_t possibly = 0;    // evaluate non-False
      for (const Term& v : values) {
        TruthValue tv = eval_constraint(g, sigma, *c.left(), v);
        if (tv == TruthValue::True) ++definitely;
        if (tv != TruthValue::False) ++possibly;
      }
      if (definitely >= c.count()) return TruthValue::True;
      if (possibly < c.count()) return TruthValue::False;
      return TruthValue::Undefined;
    }
    case Constraint::Kind::Equals:
      return truth_of(path_eval(g, *c.path(), n) == g.objects(n, c.term()));
    case Constraint::Kind::Disjoint: {
      std::set<Term> values = path_eval(g, *c.path(), n);
      for (const Term& o : g.objects(n, c.term())) {
        if (values.contains(o)) return TruthValue::False;
      }
      return TruthValue::True;
    }
    case Constraint::Kind::LessThan: {
      std::set<Term> values = path_eval(g, *c.path(), n);
      for (const Term& a : values) {
        for (const Term& b : g.objects(n, c.term())) {
          bool ok = c.inverted() ? literal_less(b, a, c.or_equals())
                                 : literal_less(a, b, c.or_equals());
          if (!ok) return TruthValue::False;
        }
      }
      return TruthValue::True;
    }
    case Constraint::Kind::Closed:
    default: {
      const auto* out = g.outgoing(n);
      if (out == nullptr) return TruthValue::True;
      for (const auto& [predicate, objects] : *out) {
        if (!c.allowed().contains(predicate)) return TruthValue::False;
      }
      return TruthValue::True;
    }
  }
}

// --------------------------------------------------------------------------
// Faithfulness

bool check_condition1(const Graph& g, const Assignment& sigma, const Document& d) {
  std::set<Term> universe = node_universe(g, d);
  for (const Shape& s : d.shapes()) {
    for (const Term& n : universe) {
      if (sigma.lookup(n, s.name) != eval_constraint(g, sigma, *s.constraint, n)) return false;
    }
  }
  return true;
}

bool check_targets(const Graph& g, const Assignment& sigma, const Document& d) {
  for (const Shape& s : d.shapes()) {
    for (const TargetDecl& t : s.targets) {
      for (const Term& n : target_nodes(g, t)) {
        if (sigma.lookup(n, s.name) != TruthValue::True) return false;
      }
    }
  }
  return true;
}

bool is_total(const Assignment& sigma, const Graph& g, const Document& d) {
  std::set<Term> universe = node_universe(g, d);
  for (const Shape& s : d.shapes()) {
    for (const Term& n : universe) {
      if (sigma.lookup(n, s.name) == TruthValue::Undefined) return false;
    }
  }
  return true;
}

}  // namespace shaperec
