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

#include "shaperec/graph.hpp"

namespace shaperec {

namespace {
const std::set<Term>& empty_term_set() {
  static const std::set<Term> empty;
  return empty;
}
}  // namespace

void Graph::insert(Triple t) {
  auto [it, inserted] = triples_.insert(std::move(t));
  if (!inserted) return;
  const Triple& stored = *it;
  nodes_.insert(stored.subject);
  nodes_.insert(stored.object);
  spo_[stored.subject][stored.predicate].insert(stored.object);
  pos_[stored.predicate][stored.object].insert(stored.subject);
}

const std::set<Term>& Graph::objects(const Term& s, const Term& p) const {
  auto si = spo_.find(s);
  if (si == spo_.end()) return empty_term_set();
  auto pi = si->second.find(p);
  if (pi == si->second.end()) return empty_term_set();
  return pi->second;
}

const std::set<Term>& Graph::subjects(const Term& p, const Term& o) const {
  auto pi = pos_.find(p);
  if (pi == pos_.end()) return empty_term_set();
  auto oi = pi->second.find(o);
  if (oi == pi->second.end()) return empty_term_set();
  return oi->second;
}

std::set<Term> Graph::subjects_with_predicate(const Term& p) const {
  std::set<Term> out;
  auto pi = pos_.find(p);
  if (pi == pos_.end()) return out;
  for (const auto& [object, subjects] : pi->second) out.insert(subjects.begin(), subjects.end());
  return out;
}

std::set<Term> Graph::objects_with_predicate(const Term& p) const {
  std::set<Term> out;
  auto pi = pos_.find(p);
  if (pi == pos_.end()) return out;
  for (const auto& [object, subjects] : pi->second) out.insert(object);
  return out;
}

const std::map<Term, std::set<Term>>* Graph::outgoing(const Term& s) const {
  auto si = spo_.find(s);
  if (si == spo_.end()) return nullptr;
  return &si->second;
}

}  // namespace shaperec
