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

#include "shaperec/analysis.hpp"

#include <algorithm>
#include <functional>

#include "shaperec/errors.hpp"

namespace shaperec {

namespace {

void collect_refs(const Constraint& c, std::set<ShapeName>& out) {
  switch (c.kind()) {
    case Constraint::Kind::Ref:
      out.insert(c.ref_name());
      break;
    case Constraint::Kind::Not:
      collect_refs(*c.left(), out);
      break;
    case Constraint::Kind::And:
      collect_refs(*c.left(), out);
      collect_refs(*c.right(), out);
      break;
    case Constraint::Kind::GEq:
      collect_refs(*c.left(), out);
      break;
    default:
      break;
  }
}

}  // namespace

std::set<ShapeName> direct_refs(const Constraint& c) {
  std::set<ShapeName> out;
  collect_refs(c, out);
  return out;
}

std::set<ShapeName> referenced_closure(const Document& d, const ShapeName& s) {
  if (!d.has_shape(s)) throw UnknownShapeError("unknown shape " + s.to_string());
  std::set<ShapeName> closure = direct_refs(*d.shape(s).constraint);
  std::vector<ShapeName> frontier(closure.begin(), closure.end());
  while (!frontier.empty()) {
    ShapeName current = frontier.back();
    frontier.pop_back();
    if (!d.has_shape(current))
      throw UnknownShapeError("unknown shape " + current.to_string());
    for (const ShapeName& next : direct_refs(*d.shape(current).constraint)) {
      if (closure.insert(next).second) frontier.push_back(next);
    }
  }
  return closure;
}

RecursionInfo is_recursive(const Document& d) {
  RecursionInfo info;
  for (const Shape& s : d.shapes()) {
    bool recursive = referenced_closure(d, s.name).contains(s.name);
    info.per_shape[s.name] = recursive;
    info.document = info.document || recursive;
  }
  return info;
}

DependencyGraph dependency_graph(const Document& d) {
  DependencyGraph g;
  for (const Shape& s : d.shapes()) g.edges[s.name] = direct_refs(*s.constraint);
  return g;
}

std::vector<Component> condensation(const Document& d) {
  DependencyGraph dep = dependency_graph(d);

  // Tarjan. Components are emitted dependencies-first: when a root closes,
  // every component it can reach has already been emitted.
  std::map<ShapeName, int> index, lowlink;
  std::map<ShapeName, bool> on_stack;
  std::vector<ShapeName> stack;
  std::vector<Component> components;
  int counter = 0;

  std::function<void(const ShapeName&)> strongconnect = [&](const ShapeName& v) {
    index[v] = lowlink[v] = counter++;
    stack.push_back(v);
    on_stack[v] = true;
    for (const ShapeName& w : dep.edges.at(v)) {
      if (!index.contains(w)) {
        strongconnect(w);
        lowlink[v] = std::min(lowlink[v], lowlink[w]);
      } else if (on_stack[w]) {
        lowlink[v] = std::min(lowlink[v], index[w]);
      }
    }
    if (lowlink[v] == index[v]) {
      Component comp;
      while (true) {
        ShapeName w = stack.back();
        stack.pop_back();
        on_stack[w] = false;
        comp.shapes.push_back(w);
        if (w == v) break;
      }
      std::sort(comp.shapes.begin(), comp.shapes.end());
      comp.cyclic = comp.shapes.size() > 1 ||
                    dep.edges.at(comp.shapes.front()).contains(comp.shapes.front());
      components.push_back(std::move(comp));
    }
  };

  for (const auto& [name, _] : dep.edges) {
    if (!index.contains(name)) strongconnect(name);
  }
  return components;
}

namespace {

void path_letters(const Path& q, std::set<char>& out) {
  switch (q.kind()) {
    case Path::Kind::Pred:
      return;
    case Path::Kind::Inverse:
      path_letters(*q.left(), out);
      return;
    case Path::Kind::Seq:
      out.insert('S');
      path_letters(*q.left(), out);
      path_letters(*q.right(), out);
      return;
    case Path::Kind::Alt:
      out.insert('A');
      path_letters(*q.left(), out);
      path_letters(*q.right(), out);
      return;
    case Path::Kind::ZeroOrOne:
      out.insert('Z');
      path_letters(*q.left(), out);
      return;
    case Path::Kind::ZeroOrMore:
    case Path::Kind::OneOrMore:
      out.insert('T');
      path_letters(*q.left(), out);
      return;
  }
}

void constraint_letters(const Constraint& c, std::set<char>& out) {
  switch (c.kind()) {
    case Constraint::Kind::Not:
      constraint_letters(*c.left(), out);
      return;
    case Constraint::Kind::And:
      constraint_letters(*c.left(), out);
      constraint_letters(*c.right(), out);
      return;
    case Constraint::Kind::GEq:
      if (c.count() != 1) out.insert('C');
      path_letters(*c.path(), out);
      constraint_letters(*c.left(), out);
      return;
    case Constraint::Kind::Equals:
      out.insert('E');
      path_letters(*c.path(), out);
      return;
    case Constraint::Kind::Disjoint:
      out.insert('D');
      path_letters(*c.path(), out);
      return;
    case Constraint::Kind::LessThan:
      out.insert('O');
      path_letters(*c.path(), out);
      return;
    default:
      return;
  }
}

}  // namespace

std::set<char> fragment_letters(const Document& d) {
  std::set<char> out;
  for (const Shape& s : d.shapes()) constraint_letters(*s.constraint, out);
  return out;
}

}  // namespace shaperec
