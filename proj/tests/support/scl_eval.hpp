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

#include <set>

#include "shaperec/eval.hpp"
#include "shaperec/graph.hpp"
#include "shaperec/scl.hpp"

namespace testsupport {

/// Direct model-theoretic evaluation of an SCL sentence over the structure
/// induced by a graph and a *total* assignment: role atoms are triples,
/// shape relations are the Pos entries of the assignment, and quantifiers
/// range over the node universe. Test-only; independent of eval_constraint
/// and of the engine (paths are checked as binary relations, closures by
/// pairwise fixpoint).
bool scl_satisfies(const shaperec::Graph& g, const shaperec::Assignment& total_sigma,
                   const std::set<shaperec::Term>& universe, const shaperec::scl::SclSentence& s);

bool scl_path_holds(const shaperec::Graph& g, const std::set<shaperec::Term>& universe,
                    const shaperec::scl::SclPathPtr& pi, const shaperec::Term& a,
                    const shaperec::Term& b);

bool scl_eval_formula(const shaperec::Graph& g, const shaperec::Assignment& sigma,
                      const std::set<shaperec::Term>& universe,
                      const shaperec::scl::SclFormulaPtr& f, const shaperec::Term& x);

}  // namespace testsupport
