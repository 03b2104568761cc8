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

#include <string_view>

#include "shaperec/graph.hpp"

namespace shaperec {

/// Parses the supported Turtle subset:
///   @prefix declarations, prefixed names, the `a` keyword, `;` predicate
///   lists, `,` object lists, string literals (with optional ^^datatype),
///   integer/decimal/boolean literals, labeled blank nodes, anonymous blank
///   nodes `[ ... ]`, and collections `( ... )` expanded to
///   rdf:first/rdf:rest/rdf:nil chains.
///
/// Anonymous nodes (including collection cells) get deterministic labels
/// _:b0, _:b1, ... in document order, so parsing the same text twice yields
/// identical graphs. Unsupported Turtle features (language tags, multiline
/// strings, @base, exponent numerics, ...) raise a ParseError naming the
/// feature; undeclared prefixes and syntax errors raise ParseError with
/// line and column.
Graph parse_turtle_subset(std::string_view text);

}  // namespace shaperec
