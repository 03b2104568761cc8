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

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "shaperec/ast.hpp"
#include "shaperec/eval.hpp"
#include "shaperec/graph.hpp"

namespace shaperec {

/// Validation semantics. Standard is the non-recursive semantics and rejects
/// recursive documents; the four extended semantics accept any document.
///   brave:    some constraint-consistent assignment covers all targets
///   cautious: brave, and every constraint-consistent assignment covers all
///             targets
///   partial:  assignments may leave (node, shape) pairs Undefined
///   total:    every pair must be signed Pos or Neg
enum class SemanticsMode { Standard, BravePartial, BraveTotal, CautiousPartial, CautiousTotal };

std::string to_string(SemanticsMode mode);
std::optional<SemanticsMode> semantics_mode_from_string(const std::string& name);

struct Violation {
  Term focus;
  ShapeName shape;
  std::string detail;
};

struct ValidationStats {
  std::size_t nodes = 0;
  std::size_t shapes = 0;
  std::size_t guessable_pairs = 0;
  std::size_t assignments_tried = 0;
  double elapsed_ms = 0.0;
};

struct ValidationResult {
  bool valid = false;
  SemanticsMode mode = SemanticsMode::Standard;
  /// Present whenever a faithful assignment was found (always, when valid
  /// under standard/brave; also under valid cautious runs). Total when the
  /// mode demands totality.
  std::optional<Assignment> witness;
  std::vector<Violation> violations;
  ValidationStats stats;
};

struct SearchOptions {
  /// Cap on |guessable pairs| = |universe| x |cycle-resident shapes|.
  std::size_t max_guessable_pairs = 24;
};

struct OracleOptions {
  /// Cap on |universe| x |shapes|.
  std::size_t max_pairs = 16;
};

/// Standard (non-recursive) validation. Shapes are evaluated leaves-first in
/// dependency order, which makes every evaluation two-valued and the
/// constraint-consistent assignment unique; targets are then checked against
/// it. Throws RecursionError on recursive documents.
ValidationResult validate_standard(const Graph& g, const Document& d,
                                   const SearchOptions& options = {});

/// Validation under any semantics. The engine enumerates sign vectors only
/// over pairs (universe node, shape on a dependency cycle) — the values of
/// all other shapes are functionally determined — and prunes each cycle
/// component's vector as soon as it is inconsistent with condition (1).
/// Throws SearchBudgetExceeded when the guessable set exceeds the cap.
ValidationResult validate(const Graph& g, const Document& d, SemanticsMode mode,
                          const SearchOptions& options = {});

/// Exhaustive reference implementation: enumerates every assignment over
/// every (node, shape) pair (3^k partial, 2^k total) and applies the validity
/// definitions literally. Identical result contract to validate(). Throws
/// OracleBudgetExceeded when |universe| x |shapes| exceeds the cap.
ValidationResult brute_force_validate(const Graph& g, const Document& d, SemanticsMode mode,
                                      const OracleOptions& options = {});

/// True iff adding t to the non-empty graph g is guaranteed to preserve
/// validity w.r.t. d: t's predicate must not occur in d, d must not use the
/// closedness constraint, and g must be non-empty.
bool monotone_extension_check(const Graph& g, const Document& d, const Triple& t);

}  // namespace shaperec
