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

#include <string>
#include <utility>
#include <vector>

#include "shaperec/ast.hpp"
#include "shaperec/graph.hpp"

namespace shaperec {

struct ReaderOptions {
  /// When false, an unknown sh:-namespace predicate on a shape is recorded
  /// as a warning instead of raising ReadError.
  bool unknown_predicate_is_error = true;
};

struct ReadResult {
  Document document;
  std::vector<std::string> warnings;
};

/// Interprets a shapes graph (sh: vocabulary) into a Document, desugaring
/// every surface component into the core constraint grammar. Shape subjects
/// are the terms typed sh:NodeShape/sh:PropertyShape plus IRIs referenced
/// from constraint positions; untyped, untargeted blank nodes referenced
/// from constraint positions are inlined into the referencing constraint.
/// Deterministic: re-reading the same graph yields an identical Document.
ReadResult read_document(const Graph& shapes_graph, const ReaderOptions& options = {});

/// Every sh:-namespace predicate occurring in the graph, with a flag telling
/// whether the reader understands it.
std::vector<std::pair<Term, bool>> vocabulary_report(const Graph& shapes_graph);

}  // namespace shaperec
