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

#include "shaperec/ntriples.hpp"

#include <cctype>

#include "shaperec/errors.hpp"
#include "shaperec/vocab.hpp"

namespace shaperec {

namespace {

struct LineParser {
  std::string_view text;
  std::size_t pos = 0;
  int line;

  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, line); }

  bool at_end() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }

  void skip_ws() {
    while (!at_end() && (peek() == ' ' || peek() == '\t')) ++pos;
  }

  std::string parse_iri() {
    // caller consumed nothing; text[pos] == '<'
    ++pos;
    std::string out;
    while (true) {
      if (at_end()) fail("malformed IRI: missing '>'");
      char c = text[pos++];
      if (c == '>') break;
      if (c == '<' || c == ' ') fail("malformed IRI: unexpected character");
      out += c;
    }
    if (out.empty()) fail("malformed IRI: empty");
    return out;
  }

  std::string parse_blank_label() {
    // text[pos] == '_'
    if (pos + 1 >= text.size() || text[pos + 1] != ':') fail("malformed blank node");
    pos += 2;
    std::string out;
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_' ||
                         peek() == '-' || peek() == '.')) {
      out += text[pos++];
    }
    while (!out.empty() && out.back() == '.') {  // trailing dot belongs to the statement
      out.pop_back();
      --pos;
    }
    if (out.empty()) fail("malformed blank node: empty label");
    return out;
  }

  std::string parse_quoted() {
    // text[pos] == '"'
    ++pos;
    std::string out;
    while (true) {
      if (at_end()) fail("unterminated literal");
      char c = text[pos++];
      if (c == '"') break;
      if (c == '\\') {
        if (at_end()) fail("unterminated literal");
        char e = text[pos++];
        switch (e) {
          case '\\': out += '\\'; break;
          case '"': out += '"'; break;
          case 'n': out += '\n'; break;
          case 't': out += '\t'; break;
          case 'r': out += '\r'; break;
          default: fail(std::string("unsupported escape \\") + e);
        }
        continue;
      }
      out += c;
    }
    return out;
  }

  Term parse_literal() {
    std::string lexical = parse_quoted();
    if (!at_end() && peek() == '@') fail("unsupported feature: language-tagged literal");
    if (pos + 1 < text.size() && peek() == '^' && text[pos + 1] == '^') {
      pos += 2;
      if (at_end() || peek() != '<') fail("malformed datatype IRI");
      return Term::literal(std::move(lexical), parse_iri());
    }
    return vocab::string_literal(std::move(lexical));
  }

  Term parse_term(bool object_position) {
    skip_ws();
    if (at_end()) fail("unexpected end of statement");
    char c = peek();
    if (c == '<') return Term::iri(parse_iri());
    if (c == '_') return Term::blank(parse_blank_label());
    if (c == '"') {
      if (!object_position) {
        // generalized RDF: literals are accepted anywhere
      }
      return parse_literal();
    }
    fail("expected IRI, blank node, or literal");
  }
};

}  // namespace

Graph parse_ntriples(std::string_view text) {
  Graph g;
  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    std::string_view line =
        text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
    ++line_no;
    start = end == std::string_view::npos ? text.size() + 1 : end + 1;

    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    LineParser p{line, 0, line_no};
    p.skip_ws();
    if (p.at_end() || p.peek() == '#') continue;

    Term s = p.parse_term(false);
    Term pred = p.parse_term(false);
    Term o = p.parse_term(true);
    p.skip_ws();
    if (p.at_end() || p.peek() != '.') p.fail("expected '.' at end of statement");
    ++p.pos;
    p.skip_ws();
    if (!p.at_end() && p.peek() != '#') p.fail("trailing content after '.'");

    g.insert(std::move(s), std::move(pred), std::move(o));
  }
  return g;
}

}  // namespace shaperec
