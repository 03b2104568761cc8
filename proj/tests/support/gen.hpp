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

#include <random>

#include "shaperec/ast.hpp"
#include "shaperec/graph.hpp"

namespace testsupport {

struct GenOptions {
  bool allow_closed = true;
  bool allow_order_pairs = true;
  /// Upper bound on |node universe| x |shapes|.
  std::size_t max_pairs = 12;
};

struct RandomInstance {
  shaperec::Graph graph;
  shaperec::Document document;
};

/// Small random graphs and documents for differential testing. Constraints
/// draw from the full core grammar including shape-reference cycles; graphs
/// stay within a four-term pool so oracle enumeration is cheap.
RandomInstance random_instance(std::mt19937& rng, const GenOptions& options = {});

}  // namespace testsupport
