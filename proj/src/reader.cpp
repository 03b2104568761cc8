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

#include "shaperec/reader.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>

#include "shaperec/errors.hpp"
#include "shaperec/vocab.hpp"

namespace shaperec {

namespace {

using vocab::kShNs;

Term sh_term(const char* local) { return Term::iri(kShNs + local); }

struct Sh {
  Term NodeShape = sh_term("NodeShape");
  Term PropertyShape = sh_term("PropertyShape");

  Term targetNode = sh_term("targetNode");
  Term targetClass = sh_term("targetClass");
  Term targetSubjectsOf = sh_term("targetSubjectsOf");
  Term targetObjectsOf = sh_term("targetObjectsOf");

  Term path = sh_term("path");
  Term inversePath = sh_term("inversePath");
  Term alternativePath = sh_term("alternativePath");
  Term zeroOrMorePath = sh_term("zeroOrMorePath");
  Term oneOrMorePath = sh_term("oneOrMorePath");
  Term zeroOrOnePath = sh_term("zeroOrOnePath");

  Term minCount = sh_term("minCount");
  Term maxCount = sh_term("maxCount");
  Term qualifiedValueShape = sh_term("qualifiedValueShape");
  Term qualifiedMinCount = sh_term("qualifiedMinCount");
  Term qualifiedMaxCount = sh_term("qualifiedMaxCount");

  Term node = sh_term("node");
  Term property = sh_term("property");
  Term notC = sh_term("not");
  Term andC = sh_term("and");
  Term orC = sh_term("or");

  Term classC = sh_term("class");
  Term datatype = sh_term("datatype");
  Term nodeKind = sh_term("nodeKind");
  Term minLength = sh_term("minLength");
  Term maxLength = sh_term("maxLength");
  Term pattern = sh_term("pattern");
  Term hasValue = sh_term("hasValue");
  Term inC = sh_term("in");

  Term equals = sh_term("equals");
  Term disjoint = sh_term("disjoint");
  Term lessThan = sh_term("lessThan");
  Term lessThanOrEquals = sh_term("lessThanOrEquals");

  Term closed = sh_term("closed");
  Term ignoredProperties = sh_term("ignoredProperties");

  Term kindIri = sh_term("IRI");
  Term kindBlank = sh_term("BlankNode");
  Term kindLiteral = sh_term("Literal");

  std::set<Term> known_predicates() const {
    return {targetNode,   targetClass, targetSubjectsOf, targetObjectsOf,
            path,         inversePath, alternativePath,  zeroOrMorePath,
            oneOrMorePath, zeroOrOnePath,
            minCount,     maxCount,    qualifiedValueShape, qualifiedMinCount,
            qualifiedMaxCount,
            node,         property,    notC,             andC,
            orC,          classC,      datatype,         nodeKind,
            minLength,    maxLength,   pattern,          hasValue,
            inC,          equals,      disjoint,         lessThan,
            lessThanOrEquals, closed,  ignoredProperties};
  }
};

const Sh& sh() {
  static const Sh instance;
  return instance;
}

bool in_sh_namespace(const Term& t) {
  return t.is_iri() && t.value().rfind(kShNs, 0) == 0;
}

class DocumentReader {
 public:
  DocumentReader(const Graph& g, const ReaderOptions& options) : g_(g), options_(options) {}

  ReadResult run() {
    collect_shape_terms();
    std::vector<Shape> shapes;
    for (const Term& name : standalone_) {
      shapes.push_back(build_shape(name));
    }
    return ReadResult{Document(std::move(shapes)), std::move(warnings_)};
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { throw ReadError(message); }

  // ---- discovery ----

  void collect_shape_terms() {
    const Term rdf_type = vocab::rdf_type();
    for (const Term& t : g_.subjects(rdf_type, sh().NodeShape)) standalone_.insert(t);
    for (const Term& t : g_.subjects(rdf_type, sh().PropertyShape)) standalone_.insert(t);

    // Objects of shape-referencing predicates. IRIs always become document
    // shapes; blank nodes only when they are declared shapes or carry
    // targets of their own — the rest are inlined where referenced.
    std::set<Term> referenced;
    for (const Triple& t : g_.triples()) {
      if (t.predicate == sh().node || t.predicate == sh().notC ||
          t.predicate == sh().qualifiedValueShape || t.predicate == sh().property) {
        referenced.insert(t.object);
      } else if (t.predicate == sh().andC || t.predicate == sh().orC) {
        for (const Term& m : read_collection(t.object)) referenced.insert(m);
      }
    }
    for (const Term& t : referenced) {
      if (t.is_literal()) fail("shape reference to a literal " + t.to_string());
      if (t.is_iri() || standalone_.contains(t) || has_targets(t)) standalone_.insert(t);
    }
  }

  bool has_targets(const Term& t) const {
    return !g_.objects(t, sh().targetNode).empty() || !g_.objects(t, sh().targetClass).empty() ||
           !g_.objects(t, sh().targetSubjectsOf).empty() ||
           !g_.objects(t, sh().targetObjectsOf).empty();
  }

  // ---- collections ----

  std::vector<Term> read_collection(const Term& head) const {
    std::vector<Term> out;
    Term current = head;
    std::set<Term> visited;
    while (true) {
      if (current == Term::iri(vocab::kRdfNil)) return out;
      if (!visited.insert(current).second) fail("malformed collection: cycle");
      const std::set<Term>& firsts = g_.objects(current, vocab::rdf_first());
      const std::set<Term>& rests = g_.objects(current, vocab::rdf_rest());
      if (firsts.size() != 1 || rests.size() != 1)
        fail("malformed collection at " + current.to_string());
      out.push_back(*firsts.begin());
      current = *rests.begin();
    }
  }

  bool is_collection_head(const Term& t) const {
    return t.is_blank() && !g_.objects(t, vocab::rdf_first()).empty();
  }

  // ---- paths ----

  PathPtr parse_path(const Term& t) {
    std::set<Term> visiting;
    return parse_path_inner(t, visiting);
  }

  PathPtr parse_path_inner(const Term& t, std::set<Term>& visiting) {
    if (t.is_literal()) fail("sh:path whose object is a literal: " + t.to_string());
    if (t.is_iri()) return Path::pred(t);
    if (!visiting.insert(t).second) fail("malformed path: cycle through " + t.to_string());

    PathPtr result;
    if (is_collection_head(t)) {
      std::vector<Term> members = read_collection(t);
      if (members.empty()) fail("malformed path: empty sequence");
      std::vector<PathPtr> parts;
      for (const Term& m : members) parts.push_back(parse_path_inner(m, visiting));
      result = parts.back();
      for (auto it = parts.rbegin() + 1; it != parts.rend(); ++it)
        result = Path::seq(*it, result);
    } else if (auto o = single_object(t, sh().inversePath)) {
      result = Path::inverse(parse_path_inner(*o, visiting));
    } else if (auto o = single_object(t, sh().alternativePath)) {
      std::vector<Term> members = read_collection(*o);
      if (members.empty()) fail("malformed path: empty alternative");
      std::vector<PathPtr> parts;
      for (const Term& m : members) parts.push_back(parse_path_inner(m, visiting));
      result = parts.back();
      for (auto it = parts.rbegin() + 1; it != parts.rend(); ++it)
        result = Path::alt(*it, result);
    } else if (auto o = single_object(t, sh().zeroOrMorePath)) {
      result = Path::zero_or_more(parse_path_inner(*o, visiting));
    } else if (auto o = single_object(t, sh().oneOrMorePath)) {
      result = Path::one_or_more(parse_path_inner(*o, visiting));
    } else if (auto o = single_object(t, sh().zeroOrOnePath)) {
      result = Path::zero_or_one(parse_path_inner(*o, visiting));
    } else {
      fail("unrecognized path expression at " + t.to_string());
    }
    visiting.erase(t);
    return result;
  }

  std::optional<Term> single_object(const Term& s, const Term& p) const {
    const std::set<Term>& objects = g_.objects(s, p);
    if (objects.empty()) return std::nullopt;
    if (objects.size() > 1)
      fail("multiple values for " + p.to_string() + " on " + s.to_string());
    return *objects.begin();
  }

  // ---- literals ----

  unsigned parse_count(const Term& t, const Term& component) const {
    if (!t.is_literal()) fail(component.to_string() + " expects an integer literal");
    const std::string& lex = t.value();
    if (lex.empty() || lex.find_first_not_of("0123456789") != std::string::npos)
      fail(component.to_string() + " expects a non-negative integer, got " + t.to_string());
    try {
      return static_cast<unsigned>(std::stoul(lex));
    } catch (const std::exception&) {
      fail(component.to_string() + " count out of range: " + t.to_string());
    }
  }

  // ---- constraints ----

  /// True if the referenced shape stays a document shape (Ref) rather than
  /// being inlined.
  bool is_standalone(const Term& t) const { return standalone_.contains(t); }

  ConstraintPtr resolve_shape_ref(const Term& t) {
    if (t.is_literal()) fail("shape reference to a literal " + t.to_string());
    if (is_standalone(t) || t.is_iri()) return Constraint::ref(ShapeName{t});
    if (!inline_stack_.insert(t).second)
      fail("recursive anonymous shape at " + t.to_string() +
           "; recursion requires named shapes");
    ConstraintPtr c = parse_constraint_of(t);
    inline_stack_.erase(t);
    return c;
  }

  /// Wraps a value-node constraint: on a property shape the constraint
  /// applies to every path value, on a node shape to the focus node itself.
  ConstraintPtr value_level(const PathPtr& path, ConstraintPtr c) const {
    if (path) return Constraint::forall(path, std::move(c));
    return c;
  }

  PathPtr require_path(const PathPtr& path, const Term& component) const {
    if (!path) fail("missing sh:path on a property shape (required by " +
                    component.to_string() + ")");
    return path;
  }

  ConstraintPtr parse_constraint_of(const Term& s) {
    check_vocabulary(s);

    PathPtr path;
    if (auto o = single_object(s, sh().path)) path = parse_path(*o);
    if (g_.contains(Triple{s, vocab::rdf_type(), sh().PropertyShape}) && !path)
      fail("missing sh:path on a property shape " + s.to_string());

    std::vector<ConstraintPtr> conjuncts;
    auto add = [&](ConstraintPtr c) { conjuncts.push_back(std::move(c)); };

    for (const Term& c : g_.objects(s, sh().classC)) {
      auto inner = Constraint::geq(1, Path::pred(vocab::rdf_type()), Constraint::has_value(c));
      add(value_level(path, inner));
    }
    for (const Term& d : g_.objects(s, sh().datatype)) {
      if (!d.is_iri()) fail("sh:datatype expects an IRI");
      add(value_level(path, Constraint::filter(Filter::datatype(d))));
    }
    for (const Term& k : g_.objects(s, sh().nodeKind)) {
      if (k == sh().kindIri) {
        add(value_level(path, Constraint::filter(Filter::node_kind_iri())));
      } else if (k == sh().kindBlank) {
        add(value_level(path, Constraint::filter(Filter::node_kind_blank())));
      } else if (k == sh().kindLiteral) {
        add(value_level(path, Constraint::filter(Filter::node_kind_literal())));
      } else {
        fail("unsupported sh:nodeKind value " + k.to_string());
      }
    }
    for (const Term& k : g_.objects(s, sh().minLength)) {
      add(value_level(path, Constraint::filter(Filter::min_length(parse_count(k, sh().minLength)))));
    }
    for (const Term& k : g_.objects(s, sh().maxLength)) {
      add(value_level(path, Constraint::filter(Filter::max_length(parse_count(k, sh().maxLength)))));
    }
    for (const Term& p : g_.objects(s, sh().pattern)) {
      if (!p.is_literal()) fail("sh:pattern expects a string literal");
      try {
        add(value_level(path, Constraint::filter(Filter::pattern(p.value()))));
      } catch (const std::invalid_argument& e) {
        fail("sh:pattern on " + s.to_string() + ": " + e.what());
      }
    }
    for (const Term& v : g_.objects(s, sh().hasValue)) {
      add(value_level(path, Constraint::has_value(v)));
    }
    for (const Term& head : g_.objects(s, sh().inC)) {
      std::vector<Term> members = read_collection(head);
      add(value_level(path, Constraint::filter(
                                Filter::in_set(std::set<Term>(members.begin(), members.end())))));
    }

    for (const Term& n : g_.objects(s, sh().minCount)) {
      unsigned count = parse_count(n, sh().minCount);
      if (count == 0) continue;  // trivially satisfied
      add(Constraint::geq(count, require_path(path, sh().minCount), Constraint::true_c()));
    }
    for (const Term& k : g_.objects(s, sh().maxCount)) {
      unsigned count = parse_count(k, sh().maxCount);
      add(Constraint::not_c(
          Constraint::geq(count + 1, require_path(path, sh().maxCount), Constraint::true_c())));
    }

    {
      auto qshape = single_object(s, sh().qualifiedValueShape);
      const std::set<Term>& qmin = g_.objects(s, sh().qualifiedMinCount);
      const std::set<Term>& qmax = g_.objects(s, sh().qualifiedMaxCount);
      if (qshape) {
        if (qmin.empty() && qmax.empty())
          fail("sh:qualifiedValueShape without either qualified count on " + s.to_string());
        ConstraintPtr target = resolve_shape_ref(*qshape);
        for (const Term& n : qmin) {
          unsigned count = parse_count(n, sh().qualifiedMinCount);
          if (count == 0) continue;
          add(Constraint::geq(count, require_path(path, sh().qualifiedMinCount), target));
        }
        for (const Term& k : qmax) {
          unsigned count = parse_count(k, sh().qualifiedMaxCount);
          add(Constraint::not_c(Constraint::geq(
              count + 1, require_path(path, sh().qualifiedMaxCount), target)));
        }
      } else if (!qmin.empty() || !qmax.empty()) {
        fail("qualified count without sh:qualifiedValueShape on " + s.to_string());
      }
    }

    for (const Term& t : g_.objects(s, sh().node)) {
      add(value_level(path, resolve_shape_ref(t)));
    }
    for (const Term& t : g_.objects(s, sh().property)) {
      add(value_level(path, resolve_shape_ref(t)));
    }
    for (const Term& t : g_.objects(s, sh().notC)) {
      add(value_level(path, Constraint::not_c(resolve_shape_ref(t))));
    }
    for (const Term& head : g_.objects(s, sh().andC)) {
      std::vector<ConstraintPtr> parts;
      for (const Term& m : read_collection(head)) parts.push_back(resolve_shape_ref(m));
      add(value_level(path, Constraint::and_all(std::move(parts))));
    }
    for (const Term& head : g_.objects(s, sh().orC)) {
      std::vector<Term> members = read_collection(head);
      if (members.empty()) {
        add(value_level(path, Constraint::not_c(Constraint::true_c())));
      } else {
        ConstraintPtr acc = resolve_shape_ref(members.back());
        for (auto it = members.rbegin() + 1; it != members.rend(); ++it)
          acc = Constraint::or_c(resolve_shape_ref(*it), std::move(acc));
        add(value_level(path, std::move(acc)));
      }
    }

    for (const Term& p : g_.objects(s, sh().equals)) {
      add(Constraint::equals(require_path(path, sh().equals), p));
    }
    for (const Term& p : g_.objects(s, sh().disjoint)) {
      add(Constraint::disjoint(require_path(path, sh().disjoint), p));
    }
    for (const Term& p : g_.objects(s, sh().lessThan)) {
      add(Constraint::less_than(require_path(path, sh().lessThan), p, /*or_equals=*/false));
    }
    for (const Term& p : g_.objects(s, sh().lessThanOrEquals)) {
      add(Constraint::less_than(require_path(path, sh().lessThanOrEquals), p, /*or_equals=*/true));
    }

    for (const Term& flag : g_.objects(s, sh().closed)) {
      if (!flag.is_literal() || flag.datatype() != vocab::kXsdBoolean)
        fail("sh:closed expects a boolean literal");
      if (flag.value() != "true") continue;
      add(value_level(path, Constraint::closed(closed_allowed_set(s))));
    }

    return Constraint::and_all(std::move(conjuncts));
  }

  /// Allowed predicates of a closed shape: the plain predicate paths of its
  /// sh:property shapes plus the members of sh:ignoredProperties.
  std::set<Term> closed_allowed_set(const Term& s) {
    std::set<Term> allowed;
    for (const Term& p : g_.objects(s, sh().property)) {
      if (auto path = single_object(p, sh().path)) {
        if (path->is_iri()) allowed.insert(*path);
      }
    }
    for (const Term& head : g_.objects(s, sh().ignoredProperties)) {
      for (const Term& m : read_collection(head)) allowed.insert(m);
    }
    return allowed;
  }

  void check_vocabulary(const Term& s) {
    const auto* out = g_.outgoing(s);
    if (out == nullptr) return;
    static const std::set<Term> known = sh().known_predicates();
    for (const auto& [predicate, objects] : *out) {
      if (!in_sh_namespace(predicate)) continue;
      if (known.contains(predicate)) continue;
      std::string message =
          "unknown sh: predicate " + predicate.to_string() + " on shape " + s.to_string();
      if (options_.unknown_predicate_is_error) fail(message);
      warnings_.push_back(message + " (ignored)");
    }
  }

  // ---- shapes ----

  Shape build_shape(const Term& name) {
    std::set<TargetDecl> targets;
    for (const Term& t : g_.objects(name, sh().targetNode))
      targets.insert(TargetDecl{TargetDecl::Kind::Node, t});
    for (const Term& t : g_.objects(name, sh().targetClass))
      targets.insert(TargetDecl{TargetDecl::Kind::Class, t});
    for (const Term& t : g_.objects(name, sh().targetSubjectsOf))
      targets.insert(TargetDecl{TargetDecl::Kind::SubjectsOf, t});
    for (const Term& t : g_.objects(name, sh().targetObjectsOf))
      targets.insert(TargetDecl{TargetDecl::Kind::ObjectsOf, t});
    return Shape{ShapeName{name}, std::move(targets), parse_constraint_of(name)};
  }

  const Graph& g_;
  ReaderOptions options_;
  std::vector<std::string> warnings_;
  std::set<Term> standalone_;
  std::set<Term> inline_stack_;
};

}  // namespace

ReadResult read_document(const Graph& shapes_graph, const ReaderOptions& options) {
  return DocumentReader(shapes_graph, options).run();
}

std::vector<std::pair<Term, bool>> vocabulary_report(const Graph& shapes_graph) {
  static const std::set<Term> known = sh().known_predicates();
  std::set<Term> seen;
  std::vector<std::pair<Term, bool>> report;
  for (const Triple& t : shapes_graph.triples()) {
    if (!in_sh_namespace(t.predicate)) continue;
    if (!seen.insert(t.predicate).second) continue;
    report.emplace_back(t.predicate, known.contains(t.predicate));
  }
  return report;
}

}  // namespace shaperec
