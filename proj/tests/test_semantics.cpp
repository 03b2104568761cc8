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

#include <random>

#include "doctest.h"
#include "shaperec/analysis.hpp"
#include "shaperec/errors.hpp"
#include "shaperec/ntriples.hpp"
#include "shaperec/semantics.hpp"
#include "shaperec/vocab.hpp"
#include "support/fixtures.hpp"
#include "support/gen.hpp"

using namespace shaperec;
using testsupport::ex;

namespace {

ShapeName name_of(const std::string& local) { return ShapeName{ex(local)}; }

const std::vector<SemanticsMode> kExtendedModes{
    SemanticsMode::BravePartial, SemanticsMode::BraveTotal, SemanticsMode::CautiousPartial,
    SemanticsMode::CautiousTotal};

std::set<std::pair<Term, ShapeName>> violation_pairs(const ValidationResult& r) {
  std::set<std::pair<Term, ShapeName>> out;
  for (const Violation& v : r.violations) out.insert({v.focus, v.shape});
  return out;
}

}  // namespace

TEST_CASE("standard: employee example reports the single violation") {
  Graph g = testsupport::load_graph("fig1_data.ttl");
  Document d = testsupport::load_document("fig1_shapes.ttl");
  ValidationResult r = validate_standard(g, d);
  CHECK_FALSE(r.valid);
  CHECK(violation_pairs(r) ==
        std::set<std::pair<Term, ShapeName>>{{ex("Anne"), name_of("EmployeeShape")}});
  CHECK_FALSE(r.witness.has_value());
  CHECK(r.stats.guessable_pairs == 0);
}

TEST_CASE("standard: qualified example reports two violating nodes") {
  Graph g = testsupport::load_graph("fig1_data.ttl");
  Document d = testsupport::load_document("fig2_shapes.ttl");
  ValidationResult r = validate_standard(g, d);
  CHECK_FALSE(r.valid);
  CHECK(violation_pairs(r) ==
        std::set<std::pair<Term, ShapeName>>{{ex("Anne"), name_of("EmployeeShapeB")},
                                             {ex("Bob"), name_of("EmployeeShapeB")}});
}

TEST_CASE("standard: empty against empty is valid with an empty witness") {
  ValidationResult r = validate_standard(Graph(), Document());
  CHECK(r.valid);
  REQUIRE(r.witness.has_value());
  CHECK(r.witness->signed_pairs() == 0);
  CHECK(r.violations.empty());
}

TEST_CASE("standard: rejects recursive documents") {
  Graph g = testsupport::load_graph("fig1_data.ttl");
  Document d = testsupport::load_document("inconsistent_shapes.ttl");
  CHECK_THROWS_AS(validate_standard(g, d), RecursionError);
  CHECK_THROWS_AS(validate(g, d, SemanticsMode::Standard), RecursionError);
}

TEST_CASE("self-negating shape: brave-partial valid, brave-total invalid on nonempty graphs") {
  Document d = testsupport::load_document("inconsistent_shapes.ttl");
  for (const std::string& fixture :
       {std::string("fig1_data.ttl"), std::string("vegdish_data.ttl"),
        std::string("small_cycle.nt")}) {
    Graph g = testsupport::load_graph(fixture);
    REQUIRE_FALSE(g.empty());

    ValidationResult partial = validate(g, d, SemanticsMode::BravePartial);
    CHECK(partial.valid);
    REQUIRE(partial.witness.has_value());
    CHECK(partial.witness->signed_pairs() == 0);  // the all-undefined assignment
    CHECK(is_faithful(g, *partial.witness, d));

    ValidationResult total = validate(g, d, SemanticsMode::BraveTotal);
    CHECK_FALSE(total.valid);
    CHECK_FALSE(total.witness.has_value());

    // cautious-partial holds: the only constraint-consistent assignment has
    // no targets to miss
    CHECK(validate(g, d, SemanticsMode::CautiousPartial).valid);
    CHECK_FALSE(validate(g, d, SemanticsMode::CautiousTotal).valid);
  }
}

TEST_CASE("self-negating shape: everything is valid on the empty graph") {
  Document d = testsupport::load_document("inconsistent_shapes.ttl");
  for (SemanticsMode mode : kExtendedModes) CHECK(validate(Graph(), d, mode).valid);
}

TEST_CASE("vegetarian dish: brave accepts, cautious rejects") {
  Graph g = testsupport::load_graph("vegdish_data.ttl");
  Document d = testsupport::load_document("vegdish_shapes.ttl");

  for (SemanticsMode mode : {SemanticsMode::BravePartial, SemanticsMode::BraveTotal}) {
    ValidationResult r = validate(g, d, mode);
    CHECK(r.valid);
    REQUIRE(r.witness.has_value());
    CHECK(r.witness->lookup(ex("DailySpecial"), name_of("VegDishShape")) == TruthValue::True);
    CHECK(r.witness->lookup(ex("Chicken"), name_of("VegIngredientShape")) == TruthValue::True);
    CHECK(is_faithful(g, *r.witness, d));
  }
  for (SemanticsMode mode : {SemanticsMode::CautiousPartial, SemanticsMode::CautiousTotal}) {
    ValidationResult r = validate(g, d, mode);
    CHECK_FALSE(r.valid);
    CHECK(violation_pairs(r) ==
          std::set<std::pair<Term, ShapeName>>{{ex("DailySpecial"), name_of("VegDishShape")}});
  }
}

TEST_CASE("oracle: reproduces the fixture outcomes") {
  Graph fig1 = testsupport::load_graph("fig1_data.ttl");
  Document fig1_doc = testsupport::load_document("fig1_shapes.ttl");
  ValidationResult std_r = brute_force_validate(fig1, fig1_doc, SemanticsMode::Standard);
  CHECK_FALSE(std_r.valid);
  CHECK(violation_pairs(std_r) ==
        std::set<std::pair<Term, ShapeName>>{{ex("Anne"), name_of("EmployeeShape")}});

  ValidationResult total_r = brute_force_validate(fig1, fig1_doc, SemanticsMode::BraveTotal);
  CHECK_FALSE(total_r.valid);
  CHECK(total_r.stats.assignments_tried == 512);  // 2^9 total assignments

  Graph veg = testsupport::load_graph("vegdish_data.ttl");
  Document veg_doc = testsupport::load_document("vegdish_shapes.ttl");
  CHECK(brute_force_validate(veg, veg_doc, SemanticsMode::BravePartial).valid);
  CHECK(brute_force_validate(veg, veg_doc, SemanticsMode::BraveTotal).valid);
  CHECK_FALSE(brute_force_validate(veg, veg_doc, SemanticsMode::CautiousPartial).valid);
  CHECK_FALSE(brute_force_validate(veg, veg_doc, SemanticsMode::CautiousTotal).valid);

  // empty universe: the empty assignment is vacuously faithful in all modes
  for (SemanticsMode mode : kExtendedModes) {
    CHECK(brute_force_validate(Graph(), testsupport::load_document("inconsistent_shapes.ttl"),
                               mode)
              .valid);
  }
}

TEST_CASE("budget errors") {
  Graph g = testsupport::load_graph("fig1_data.ttl");
  Document d = testsupport::load_document("inconsistent_shapes.ttl");
  // 9 universe nodes x 1 cyclic shape = 9 guessable pairs
  CHECK_THROWS_AS(validate(g, d, SemanticsMode::BravePartial, SearchOptions{8}),
                  SearchBudgetExceeded);
  CHECK_THROWS_AS(brute_force_validate(g, d, SemanticsMode::BravePartial, OracleOptions{8}),
                  OracleBudgetExceeded);
  try {
    validate(g, d, SemanticsMode::BravePartial, SearchOptions{8});
    FAIL("expected SearchBudgetExceeded");
  } catch (const SearchBudgetExceeded& e) {
    CHECK(e.pairs() == 9);
    CHECK(e.limit() == 8);
  }
}

TEST_CASE("non-recursive documents agree across all five semantics") {
  Graph g = testsupport::load_graph("fig1_data.ttl");
  for (const std::string& shapes : {std::string("fig1_shapes.ttl"), std::string("fig2_shapes.ttl")}) {
    Document d = testsupport::load_document(shapes);
    bool expected = validate_standard(g, d).valid;
    for (SemanticsMode mode : kExtendedModes) {
      CHECK(validate(g, d, mode).valid == expected);
      CHECK(brute_force_validate(g, d, mode).valid == expected);
    }
  }
}

TEST_CASE("monotone_extension_check") {
  Graph fig1 = testsupport::load_graph("fig1_data.ttl");
  Document d = testsupport::load_document("fig1_shapes.ttl");
  Triple unknown{ex("x"), ex("unknownPred"), ex("y")};
  Triple known{ex("x"), ex("hasOfficeNumber"), ex("y")};
  Triple type_edge{ex("x"), vocab::rdf_type(), ex("y")};

  CHECK(monotone_extension_check(fig1, d, unknown));
  CHECK_FALSE(monotone_extension_check(fig1, d, known));
  // rdf:type occurs through the class target
  CHECK_FALSE(monotone_extension_check(fig1, d, type_edge));
  // empty graphs are excluded: validity can flip when the universe appears
  CHECK_FALSE(monotone_extension_check(Graph(), d, unknown));

  std::vector<Shape> closed_shapes{
      Shape{name_of("S"), {}, Constraint::closed({ex("p")})}};
  Document closed_doc(std::move(closed_shapes));
  CHECK_FALSE(monotone_extension_check(fig1, closed_doc, unknown));
}

TEST_CASE("property: engine and oracle agree on every mode (sample)") {
  std::mt19937 rng(101);
  int recursive_seen = 0;
  for (int round = 0; round < 120; ++round) {
    testsupport::RandomInstance inst = testsupport::random_instance(rng);
    bool recursive = is_recursive(inst.document).document;
    recursive_seen += recursive ? 1 : 0;
    for (SemanticsMode mode : kExtendedModes) {
      ValidationResult fast = validate(inst.graph, inst.document, mode);
      ValidationResult slow = brute_force_validate(inst.graph, inst.document, mode);
      CHECK(fast.valid == slow.valid);
    }
    if (!recursive) {
      CHECK(validate_standard(inst.graph, inst.document).valid ==
            brute_force_validate(inst.graph, inst.document, SemanticsMode::Standard).valid);
    }
  }
  CHECK(recursive_seen > 0);  // the generator must exercise recursion
}

TEST_CASE("property: witnesses are reproducible and faithful") {
  std::mt19937 rng(202);
  for (int round = 0; round < 60; ++round) {
    testsupport::RandomInstance inst = testsupport::random_instance(rng);
    for (SemanticsMode mode : kExtendedModes) {
      ValidationResult a = validate(inst.graph, inst.document, mode);
      ValidationResult b = validate(inst.graph, inst.document, mode);
      CHECK(a.valid == b.valid);
      CHECK(a.witness.has_value() == b.witness.has_value());
      if (a.witness && b.witness) CHECK(*a.witness == *b.witness);
      if (a.valid) {
        REQUIRE(a.witness.has_value());
        CHECK(is_faithful(inst.graph, *a.witness, inst.document));
        if (mode == SemanticsMode::BraveTotal || mode == SemanticsMode::CautiousTotal)
          CHECK(is_total(*a.witness, inst.graph, inst.document));
      }
    }
  }
}

TEST_CASE("property: violations are reported exactly when invalid") {
  std::mt19937 rng(303);
  for (int round = 0; round < 60; ++round) {
    testsupport::RandomInstance inst = testsupport::random_instance(rng);
    for (SemanticsMode mode : kExtendedModes) {
      ValidationResult r = validate(inst.graph, inst.document, mode);
      if (r.valid) CHECK(r.violations.empty());
    }
  }
}
