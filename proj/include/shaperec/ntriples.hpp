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

/// Parses line-oriented N-Triples. `#` comment lines and blank lines are
/// allowed; duplicate triples collapse. Plain literals are normalized to
/// xsd:string. Throws ParseError with the offending line number.
Graph parse_ntriples(std::string_view text);

}  // namespace shaperec
