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

#include "shaperec/term.hpp"

// Namespace IRIs used by the shapes-graph reader and the parsers. These are
// fixed constants; prefixed names in input files may bind any prefix string
// to them.
namespace shaperec::vocab {

inline const std::string kRdfNs = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
inline const std::string kRdfsNs = "http://www.w3.org/2000/01/rdf-schema#";
inline const std::string kXsdNs = "http://www.w3.org/2001/XMLSchema#";
inline const std::string kShNs = "http://www.w3.org/ns/shacl#";

inline const std::string kRdfType = kRdfNs + "type";
inline const std::string kRdfFirst = kRdfNs + "first";
inline const std::string kRdfRest = kRdfNs + "rest";
inline const std::string kRdfNil = kRdfNs + "nil";

inline const std::string kXsdString = kXsdNs + "string";
inline const std::string kXsdInteger = kXsdNs + "integer";
inline const std::string kXsdDecimal = kXsdNs + "decimal";
inline const std::string kXsdBoolean = kXsdNs + "boolean";

inline Term rdf_type() { return Term::iri(kRdfType); }
inline Term rdf_first() { return Term::iri(kRdfFirst); }
inline Term rdf_rest() { return Term::iri(kRdfRest); }
inline Term rdf_nil() { return Term::iri(kRdfNil); }

/// Plain literal, normalized to xsd:string.
inline Term string_literal(std::string lexical) {
  return Term::literal(std::move(lexical), kXsdString);
}
inline Term integer_literal(std::string lexical) {
  return Term::literal(std::move(lexical), kXsdInteger);
}

inline Term sh(const std::string& local) { return Term::iri(kShNs + local); }

}  // namespace shaperec::vocab
