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

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>

namespace shaperec {

enum class TermKind { Iri, Blank, Literal };

/// A generalized RDF term: IRI, blank node, or literal. Any term may occupy
/// any triple position. Literals always carry a datatype IRI; plain literals
/// are normalized to xsd:string by the parsers before they reach a Term.
class Term {
 public:
  static Term iri(std::string value) {
    if (value.empty()) throw std::invalid_argument("empty IRI");
    return Term(TermKind::Iri, std::move(value), {});
  }
  static Term blank(std::string label) {
    if (label.empty()) throw std::invalid_argument("empty blank node label");
    return Term(TermKind::Blank, std::move(label), {});
  }
  static Term literal(std::string lexical, std::string datatype) {
    if (datatype.empty()) throw std::invalid_argument("literal without datatype");
    return Term(TermKind::Literal, std::move(lexical), std::move(datatype));
  }

  TermKind kind() const { return kind_; }
  bool is_iri() const { return kind_ == TermKind::Iri; }
  bool is_blank() const { return kind_ == TermKind::Blank; }
  bool is_literal() const { return kind_ == TermKind::Literal; }

  /// IRI string, blank label, or literal lexical form.
  const std::string& value() const { return value_; }
  /// Datatype IRI; empty unless this is a literal.
  const std::string& datatype() const { return datatype_; }

  friend auto operator<=>(const Term&, const Term&) = default;
  friend bool operator==(const Term&, const Term&) = default;

  /// N-Triples-style rendering: <iri>, _:label, "lex"^^<datatype>.
  std::string to_string() const;

 private:
  Term(TermKind kind, std::string value, std::string datatype)
      : kind_(kind), value_(std::move(value)), datatype_(std::move(datatype)) {}

  TermKind kind_;
  std::string value_;
  std::string datatype_;
};

struct Triple {
  Term subject;
  Term predicate;
  Term object;

  friend auto operator<=>(const Triple&, const Triple&) = default;
  friend bool operator==(const Triple&, const Triple&) = default;
};

}  // namespace shaperec
