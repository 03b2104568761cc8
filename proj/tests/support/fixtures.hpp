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

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "shaperec/ntriples.hpp"
#include "shaperec/reader.hpp"
#include "shaperec/turtle.hpp"

namespace testsupport {

inline std::string fixture_path(const std::string& name) {
  return std::string(FIXTURES_DIR) + "/" + name;
}

inline std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open fixture " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

inline shaperec::Graph load_graph(const std::string& name) {
  std::string text = slurp(fixture_path(name));
  if (name.size() >= 3 && name.compare(name.size() - 3, 3, ".nt") == 0)
    return shaperec::parse_ntriples(text);
  return shaperec::parse_turtle_subset(text);
}

inline shaperec::Document load_document(const std::string& name) {
  return shaperec::read_document(load_graph(name)).document;
}

inline shaperec::Term ex(const std::string& local) {
  return shaperec::Term::iri("http://example.org/" + local);
}

}  // namespace testsupport
