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

#include "shaperec/turtle.hpp"

#include <cctype>
#include <map>
#include <string>
#include <vector>

#include "shaperec/errors.hpp"
#include "shaperec/vocab.hpp"

namespace shaperec {

namespace {

bool is_local_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.';
}

class TurtleParser {
 public:
  explicit TurtleParser(std::string_view text) : text_(text) {}

  Graph parse() {
    skip_trivia();
    while (!at_end()) {
      if (peek() == '@') {
        parse_directive();
      } else {
        parse_triples();
      }
      skip_trivia();
    }
    return std::move(graph_);
  }

 private:
  [[noreturn]] void fail(const std::string& message) { throw ParseError(message, line_, col_); }
  [[noreturn]] void unsupported(const std::string& feature) {
    throw ParseError("unsupported Turtle feature: " + feature, line_, col_);
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
  }
  char advance() {
    char c = text_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }

  void skip_trivia() {
    while (!at_end()) {
      char c = peek();
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        advance();
      } else if (c == '#') {
        while (!at_end() && peek() != '\n') advance();
      } else {
        break;
      }
    }
  }

  void expect(char c, const std::string& what) {
    skip_trivia();
    if (at_end() || peek() != c) fail("expected '" + std::string(1, c) + "' " + what);
    advance();
  }

  // ---- directives ----

  void parse_directive() {
    advance();  // '@'
    std::string word;
    while (!at_end() && std::isalpha(static_cast<unsigned char>(peek()))) word += advance();
    if (word != "prefix") unsupported("@" + word + " directive");
    skip_trivia();
    std::string prefix = parse_prefix_name();
    skip_trivia();
    if (at_end() || peek() != '<') fail("expected IRI in @prefix");
    std::string iri = parse_iri_ref();
    prefixes_[prefix] = iri;
    expect('.', "after @prefix directive");
  }

  std::string parse_prefix_name() {
    std::string prefix;
    while (!at_end() && peek() != ':' &&
           (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_' || peek() == '-')) {
      prefix += advance();
    }
    if (at_end() || peek() != ':') fail("expected ':' in prefix name");
    advance();
    return prefix;
  }

  // ---- terms ----

  std::string parse_iri_ref() {
    advance();  // '<'
    std::string out;
    while (true) {
      if (at_end()) fail("malformed IRI: missing '>'");
      char c = advance();
      if (c == '>') break;
      if (c == '<' || c == ' ' || c == '\n') fail("malformed IRI: unexpected character");
      out += c;
    }
    if (out.empty()) fail("malformed IRI: empty");
    if (out.find(':') == std::string::npos)
      unsupported("relative IRI <" + out + "> (no @base support)");
    return out;
  }

  Term parse_prefixed_name() {
    std::string prefix;
    while (!at_end() && peek() != ':' &&
           (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_' || peek() == '-')) {
      prefix += advance();
    }
    if (at_end() || peek() != ':') fail("expected prefixed name");
    advance();
    auto it = prefixes_.find(prefix);
    if (it == prefixes_.end()) fail("undeclared prefix '" + prefix + ":'");
    std::string local;
    while (!at_end() && is_local_char(peek())) local += advance();
    // A trailing dot terminates the statement, not the name.
    while (!local.empty() && local.back() == '.') {
      local.pop_back();
      --pos_;
      --col_;
    }
    return Term::iri(it->second + local);
  }

  Term parse_blank_label() {
    advance();  // '_'
    if (at_end() || peek() != ':') fail("malformed blank node label");
    advance();
    std::string label;
    while (!at_end() && is_local_char(peek())) label += advance();
    while (!label.empty() && label.back() == '.') {
      label.pop_back();
      --pos_;
      --col_;
    }
    if (label.empty()) fail("malformed blank node: empty label");
    return Term::blank(label);
  }

  Term fresh_blank() { return Term::blank("b" + std::to_string(blank_counter_++)); }

  Term parse_string_literal() {
    if (peek(1) == '"' && peek(2) == '"') unsupported("multiline (triple-quoted) string");
    advance();  // '"'
    std::string out;
    while (true) {
      if (at_end()) fail("unterminated literal");
      char c = advance();
      if (c == '"') break;
      if (c == '\n') fail("unterminated literal");
      if (c == '\\') {
        if (at_end()) fail("unterminated literal");
        char e = advance();
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
    if (!at_end() && peek() == '@') unsupported("language-tagged literal");
    if (peek() == '^' && peek(1) == '^') {
      advance();
      advance();
      skip_trivia();
      Term dt = parse_iri_term();
      return Term::literal(std::move(out), dt.value());
    }
    return vocab::string_literal(std::move(out));
  }

  Term parse_number() {
    std::string lex;
    if (peek() == '+' || peek() == '-') lex += advance();
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) lex += advance();
    bool decimal = false;
    if (peek() == '.' && std::isdigit(static_cast<unsigned char>(peek(1)))) {
      decimal = true;
      lex += advance();
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) lex += advance();
    }
    if (peek() == 'e' || peek() == 'E') unsupported("exponent numeric literal");
    if (lex.empty() || lex == "+" || lex == "-") fail("malformed numeric literal");
    return Term::literal(std::move(lex), decimal ? vocab::kXsdDecimal : vocab::kXsdInteger);
  }

  Term parse_iri_term() {
    skip_trivia();
    if (at_end()) fail("expected IRI");
    if (peek() == '<') return Term::iri(parse_iri_ref());
    return parse_prefixed_name();
  }

  Term parse_verb() {
    skip_trivia();
    if (at_end()) fail("expected predicate");
    if (peek() == 'a' && !is_local_char(peek(1)) && peek(1) != ':') {
      advance();
      return vocab::rdf_type();
    }
    if (peek() == '<') return Term::iri(parse_iri_ref());
    if (peek() == '_') return parse_blank_label();
    return parse_prefixed_name();
  }

  Term parse_object() {
    skip_trivia();
    if (at_end()) fail("expected object");
    char c = peek();
    if (c == '<') return Term::iri(parse_iri_ref());
    if (c == '_') return parse_blank_label();
    if (c == '"') return parse_string_literal();
    if (c == '\'') unsupported("single-quoted string");
    if (c == '[') return parse_bnode_property_list();
    if (c == '(') return parse_collection();
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '+' || c == '-') return parse_number();
    if (starts_keyword("true")) return Term::literal("true", vocab::kXsdBoolean);
    if (starts_keyword("false")) return Term::literal("false", vocab::kXsdBoolean);
    return parse_prefixed_name();
  }

  bool starts_keyword(std::string_view word) {
    if (text_.substr(pos_, word.size()) != word) return false;
    char after = peek(word.size());
    if (is_local_char(after) || after == ':') return false;
    for (std::size_t i = 0; i < word.size(); ++i) advance();
    return true;
  }

  // ---- structures ----

  Term parse_bnode_property_list() {
    advance();  // '['
    Term node = fresh_blank();
    skip_trivia();
    if (peek() != ']') parse_predicate_object_list(node);
    expect(']', "to close blank node");
    return node;
  }

  Term parse_collection() {
    advance();  // '('
    std::vector<Term> items;
    while (true) {
      skip_trivia();
      if (at_end()) fail("unterminated collection");
      if (peek() == ')') {
        advance();
        break;
      }
      items.push_back(parse_object());
    }
    if (items.empty()) return Term::iri(vocab::kRdfNil);
    // Cells are allocated while scanning, so labels follow document order.
    std::vector<Term> cells;
    cells.reserve(items.size());
    for (std::size_t i = 0; i < items.size(); ++i) cells.push_back(fresh_blank());
    for (std::size_t i = 0; i < items.size(); ++i) {
      graph_.insert(cells[i], vocab::rdf_first(), items[i]);
      Term rest = i + 1 < items.size() ? cells[i + 1] : Term::iri(vocab::kRdfNil);
      graph_.insert(cells[i], vocab::rdf_rest(), std::move(rest));
    }
    return cells.front();
  }

  void parse_predicate_object_list(const Term& subject) {
    while (true) {
      Term predicate = parse_verb();
      while (true) {
        Term object = parse_object();
        graph_.insert(subject, predicate, object);
        skip_trivia();
        if (!at_end() && peek() == ',') {
          advance();
          continue;
        }
        break;
      }
      skip_trivia();
      if (!at_end() && peek() == ';') {
        advance();
        skip_trivia();
        // A dangling ';' before '.' or ']' is permitted.
        if (at_end() || peek() == '.' || peek() == ']' || peek() == ';') {
          while (!at_end() && peek() == ';') {
            advance();
            skip_trivia();
          }
          if (at_end() || peek() == '.' || peek() == ']') break;
        }
        continue;
      }
      break;
    }
  }

  void parse_triples() {
    skip_trivia();
    Term subject = [&] {
      char c = peek();
      if (c == '<') return Term::iri(parse_iri_ref());
      if (c == '_') return parse_blank_label();
      if (c == '"') unsupported("literal in subject position of the Turtle subset");
      if (c == '[') return parse_bnode_property_list();
      if (c == '(') return parse_collection();
      return parse_prefixed_name();
    }();
    skip_trivia();
    // `[ ... ] .` is a complete statement; otherwise a predicate list follows.
    if (!at_end() && peek() != '.') parse_predicate_object_list(subject);
    expect('.', "at end of statement");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
  std::map<std::string, std::string> prefixes_;
  int blank_counter_ = 0;
  Graph graph_;
};

}  // namespace

Graph parse_turtle_subset(std::string_view text) { return TurtleParser(text).parse(); }

}  // namespace shaperec
