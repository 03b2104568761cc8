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

#include <map>
#include <set>
#include <vector>

#include "shaperec/ast.hpp"

namespace shaperec {

/// Shape names occurring anywhere under a Ref node of c (the directly
/// referenced shapes).
std::set<ShapeName> direct_refs(const Constraint& c);

/// Least fixpoint of direct-reference expansion starting from the shape
/// named s. Throws UnknownShapeError if s does not name a shape of d.
std::set<ShapeName> referenced_closure(const Document& d, const ShapeName& s);

struct RecursionInfo {
  bool document = false;
  std::map<ShapeName, bool> per_shape;
};

/// A shape is recursive iff it occurs in its own reference closure; a
/// document is recursive iff some shape is.
RecursionInfo is_recursive(const Document& d);

/// Edge s -> s' iff s' is directly referenced by the constraint of s.
struct DependencyGraph {
  std::map<ShapeName, std::set<ShapeName>> edges;
};

DependencyGraph dependency_graph(const Document& d);

/// One strongly connected component of the dependency graph. `cyclic` is
/// true for components of size > 1 and for singletons with a self-loop.
struct Component {
  std::vector<ShapeName> shapes;  // sorted
  bool cyclic = false;
};

/// SCC condensation in topological order: every reference from a shape in
/// components[i] leads into components[j] with j <= i. Deterministic for a
/// given document.
std::vector<Component> condensation(const Document& d);

/// Syntactic feature letters present anywhere in d, per the SCL component
/// table: S sequence paths, Z zero-or-one, A alternatives, T transitive
/// closures, D disjointness, E equality, O order comparisons, C counting
/// quantifiers with n != 1.
std::set<char> fragment_letters(const Document& d);

}  // namespace shaperec
