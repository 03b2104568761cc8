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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Usage: acceptance <path-to-shaperec-cli>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "shaperec/analysis.hpp"
#include "shaperec/eval.hpp"
#include "shaperec/scl.hpp"
#include "shaperec/semantics.hpp"
#include "shaperec/vocab.hpp"
#include "support/fixtures.hpp"
#include "support/gen.hpp"
#include "support/scl_eval.hpp"

using namespace shaperec;
using testsupport::ex;

namespace {

int g_failures = 0;

void criterion(int number, const std::string& description, bool ok,
               const std::string& note = "") {
  std::printf("%s: criterion %d - %s%s%s\n", ok ? "PASS" : "FAIL", number, description.c_str(),
              note.empty() ? "" : "; ", note.c_str());
  std::fflush(stdout);
  if (!ok) ++g_failures;
}

ShapeName name_of(const std::string& local) { return ShapeName{ex(local)}; }

std::set<std::pair<Term, ShapeName>> violation_pairs(const ValidationResult& r) {
  std::set<std::pair<Term, ShapeName>> out;
  for (const Violation& v : r.violations) out.insert({v.focus, v.shape});
  return out;
}

const std::vector<SemanticsMode> kExtendedModes{
    SemanticsMode::BravePartial, SemanticsMode::BraveTotal, SemanticsMode::CautiousPartial,
    SemanticsMode::CautiousTotal};

// ---------------------------------------------------------------------------

void criterion1() {
  Graph g = testsupport::load_graph("fig1_data.ttl");
  Document d = testsupport::load_document("fig1_shapes.ttl");
  ValidationResult r = validate_standard(g, d);
  bool ok = !r.valid &&
            violation_pairs(r) ==
                std::set<std::pair<Term, ShapeName>>{{ex("Anne"), name_of("EmployeeShape")}} &&
            r.stats.elapsed_ms < 50.0;
  criterion(1, "standard validation flags exactly the employee without an office number", ok,
            "elapsed " + std::to_string(r.stats.elapsed_ms) + " ms");
}

void criterion2() {
  Graph g = testsupport::load_graph("fig1_data.ttl");
  Document d = testsupport::load_document("fig2_shapes.ttl");
  ValidationResult r = validate_standard(g, d);
  bool ok = !r.valid &&
            violation_pairs(r) ==
                std::set<std::pair<Term, ShapeName>>{{ex("Anne"), name_of("EmployeeShapeB")},
                                                     {ex("Bob"), name_of("EmployeeShapeB")}} &&
            r.stats.elapsed_ms < 50.0;
  criterion(2, "qualified-shape validation flags exactly the two violating employees", ok,
            "elapsed " + std::to_string(r.stats.elapsed_ms) + " ms");
}

void criterion3() {
  Document d = testsupport::load_document("inconsistent_shapes.ttl");
  const std::vector<std::string> fixtures{"fig1_data.ttl", "vegdish_data.ttl", "small_cycle.nt"};
  bool ok = true;
  for (const std::string& fixture : fixtures) {
    Graph g = testsupport::load_graph(fixture);
    ok = ok && !g.empty();
    ok = ok && validate(g, d, SemanticsMode::BravePartial).valid;
    ok = ok && !validate(g, d, SemanticsMode::BraveTotal).valid;
  }
  criterion(3, "self-negating shape splits brave-partial from brave-total on 3 nonempty graphs",
            ok);
}

void criterion4() {
  Graph g = testsupport::load_graph("vegdish_data.ttl");
  Document d = testsupport::load_document("vegdish_shapes.ttl");
  bool ok = true;
  for (SemanticsMode mode : {SemanticsMode::BravePartial, SemanticsMode::BraveTotal}) {
    ValidationResult r = validate(g, d, mode);
    ok = ok && r.valid && r.witness.has_value();
    if (r.witness) {
      ok = ok &&
           r.witness->lookup(ex("DailySpecial"), name_of("VegDishShape")) == TruthValue::True;
      ok = ok &&
           r.witness->lookup(ex("Chicken"), name_of("VegIngredientShape")) == TruthValue::True;
    }
  }
  ok = ok && !validate(g, d, SemanticsMode::CautiousPartial).valid;
  ok = ok && !validate(g, d, SemanticsMode::CautiousTotal).valid;
  criterion(4, "vegetarian-dish graph is brave-valid with the expected witness, cautious-invalid",
            ok);
}

void criterion5(const std::string& cli) {
  using namespace shaperec::scl;
  Document d = testsupport::load_document("fig2_shapes.ttl");
  SclSentence actual = translate(d);

  SclSentence expected;
  expected.conjuncts.push_back(SclAxiom::make_target(
      TargetAxiom{TargetAxiom::Form::Class, name_of("EmployeeShapeB"), ex("Employee")}));
  expected.conjuncts.push_back(SclAxiom::make_constraint(ConstraintAxiom{
      name_of("EmployeeShapeB"),
      SclFormula::exists(SclPath::rel(ex("hasOfficeNumber")),
                         SclFormula::shape_atom(name_of("OfficeNumberShape")))}));
  expected.conjuncts.push_back(SclAxiom::make_constraint(ConstraintAxiom{
      name_of("OfficeNumberShape"), SclFormula::filter_atom(Filter::min_length(3))}));

  bool ok = equivalent_sentences(actual, expected) && well_formed(actual);

  // all four target-axiom forms
  std::vector<Shape> shapes{Shape{name_of("S"),
                                  {TargetDecl{TargetDecl::Kind::Node, ex("n")},
                                   TargetDecl{TargetDecl::Kind::Class, ex("C")},
                                   TargetDecl{TargetDecl::Kind::SubjectsOf, ex("p")},
                                   TargetDecl{TargetDecl::Kind::ObjectsOf, ex("q")}},
                                  Constraint::true_c()}};
  SclSentence targets = translate(Document(std::move(shapes)));
  int forms_seen[4] = {0, 0, 0, 0};
  for (const SclAxiom& a : targets.conjuncts) {
    if (a.kind == SclAxiom::Kind::Target) ++forms_seen[static_cast<int>(a.target.form)];
  }
  for (int count : forms_seen) ok = ok && count == 1;

  // the CLI subcommand emits exactly the rendered sentence
  std::string out_file =
      (std::filesystem::temp_directory_path() / "shaperec_acceptance_scl.txt").string();
  std::string command = cli + " translate --shapes " + testsupport::fixture_path("fig2_shapes.ttl") +
                        " --out " + out_file;
  int exit_code = std::system(command.c_str());
  ok = ok && exit_code == 0;
  if (exit_code == 0) ok = ok && testsupport::slurp(out_file) == render(expected) + "\n";

  criterion(5, "translation of the qualified-shape document matches the expected sentence", ok);
}

struct SuiteOutcome {
  int instances = 0;
  int oracle_disagreements = 0;
  int lattice_failures = 0;
  int witness_failures = 0;
  double elapsed_s = 0.0;
};

SuiteOutcome run_differential_suite(int count, unsigned seed, std::size_t max_pairs) {
  SuiteOutcome outcome;
  std::mt19937 rng(seed);
  auto start = std::chrono::steady_clock::now();

  for (int round = 0; round < count; ++round) {
    testsupport::RandomInstance inst = testsupport::random_instance(
        rng, testsupport::GenOptions{true, true, max_pairs});
    ++outcome.instances;

    std::map<SemanticsMode, bool> fast, slow;
    for (SemanticsMode mode : kExtendedModes) {
      ValidationResult f = validate(inst.graph, inst.document, mode);
      ValidationResult s = brute_force_validate(inst.graph, inst.document, mode,
                                                OracleOptions{max_pairs});
      fast[mode] = f.valid;
      slow[mode] = s.valid;
      if (f.valid != s.valid) ++outcome.oracle_disagreements;

      if (f.valid) {
        if (!f.witness.has_value() ||
            !is_faithful(inst.graph, *f.witness, inst.document)) {
          ++outcome.witness_failures;
        } else if ((mode == SemanticsMode::BraveTotal || mode == SemanticsMode::CautiousTotal) &&
                   !is_total(*f.witness, inst.graph, inst.document)) {
          ++outcome.witness_failures;
        }
      }
    }

    bool recursive = is_recursive(inst.document).document;
    if (!recursive) {
      ValidationResult std_fast = validate_standard(inst.graph, inst.document);
      ValidationResult std_slow =
          brute_force_validate(inst.graph, inst.document, SemanticsMode::Standard,
                               OracleOptions{max_pairs});
      if (std_fast.valid != std_slow.valid) ++outcome.oracle_disagreements;
      if (std_fast.valid) {
        if (!std_fast.witness.has_value() ||
            !is_faithful(inst.graph, *std_fast.witness, inst.document))
          ++outcome.witness_failures;
      }
      // all five semantics coincide on non-recursive documents
      for (SemanticsMode mode : kExtendedModes) {
        if (fast[mode] != std_fast.valid) ++outcome.lattice_failures;
      }
    }

    // implication lattice
    if (fast[SemanticsMode::BraveTotal] && !fast[SemanticsMode::BravePartial])
      ++outcome.lattice_failures;
    if (fast[SemanticsMode::CautiousPartial] && !fast[SemanticsMode::BravePartial])
      ++outcome.lattice_failures;
    if (fast[SemanticsMode::CautiousTotal] && !fast[SemanticsMode::BraveTotal])
      ++outcome.lattice_failures;
  }

  outcome.elapsed_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return outcome;
}

void criteria_6_7_10(SuiteOutcome& outcome) {
  outcome = run_differential_suite(520, 20260810, 12);
  criterion(6, "engine agrees with the exhaustive oracle across 520 random instances x 4 modes",
            outcome.oracle_disagreements == 0 && outcome.instances >= 500 &&
                outcome.elapsed_s < 60.0,
            "elapsed " + std::to_string(outcome.elapsed_s) + " s");
  criterion(7, "semantics lattice holds on the random suite (total=>partial, cautious=>brave)",
            outcome.lattice_failures == 0);
}

void criterion8() {
  std::mt19937 rng(8088);
  const Term fresh_pred = Term::iri("http://gen.example/fresh");
  int checks = 0;
  int failures = 0;
  int guard_failures = 0;
  while (checks < 200) {
    testsupport::RandomInstance inst = testsupport::random_instance(
        rng, testsupport::GenOptions{/*allow_closed=*/false, true, 12});
    if (inst.graph.empty()) continue;

    Triple injected{rng() % 2 ? ex("extra") : Term::iri("http://gen.example/a"), fresh_pred,
                    rng() % 2 ? ex("other") : Term::iri("http://gen.example/b")};
    if (!monotone_extension_check(inst.graph, inst.document, injected)) {
      ++guard_failures;
      continue;
    }
    Graph extended = inst.graph;
    extended.insert(injected);

    for (SemanticsMode mode : kExtendedModes) {
      if (!validate(inst.graph, inst.document, mode).valid) continue;
      ++checks;
      if (!validate(extended, inst.document, mode).valid) ++failures;
    }
  }
  criterion(8, "adding triples with unknown predicates preserves validity (200+ valid cases)",
            failures == 0 && guard_failures == 0 && checks >= 200,
            std::to_string(checks) + " checks");
}

void criterion9() {
  std::mt19937 rng(9099);
  int instances = 0;
  int disagreements = 0;
  long long assignments = 0;
  while (instances < 200) {
    testsupport::RandomInstance inst =
        testsupport::random_instance(rng, testsupport::GenOptions{true, true, 8});
    ++instances;

    std::set<Term> universe = node_universe(inst.graph, inst.document);
    scl::SclSentence sentence = scl::translate(inst.document);

    std::vector<std::pair<Term, ShapeName>> pairs;
    for (const Term& n : universe) {
      for (const Shape& s : inst.document.shapes()) pairs.emplace_back(n, s.name);
    }

    // enumerate every total assignment
    std::vector<int> digits(pairs.size(), 0);
    while (true) {
      Assignment sigma;
      for (std::size_t i = 0; i < pairs.size(); ++i) {
        sigma.set(pairs[i].first, pairs[i].second, digits[i] ? Sign::Pos : Sign::Neg);
      }
      ++assignments;
      bool faithful = is_faithful(inst.graph, sigma, inst.document);
      bool satisfied = testsupport::scl_satisfies(inst.graph, sigma, universe, sentence);
      if (faithful != satisfied) ++disagreements;

      std::size_t i = pairs.size();
      bool wrapped = true;
      while (i > 0) {
        --i;
        if (++digits[i] < 2) {
          wrapped = false;
          break;
        }
        digits[i] = 0;
      }
      if (wrapped || pairs.empty()) break;
    }
  }
  criterion(9,
            "faithfulness coincides with satisfaction of the translated sentence on all total "
            "assignments of 200 instances",
            disagreements == 0, std::to_string(assignments) + " assignments checked");
}

void criterion10(const SuiteOutcome& outcome) {
  criterion(10, "every brave/standard witness re-checks as faithful (and total when required)",
            outcome.witness_failures == 0);
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: acceptance <path-to-shaperec-cli>\n");
    return 2;
  }
  std::string cli = argv[1];

  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5(cli);
  SuiteOutcome outcome;
  criteria_6_7_10(outcome);
  criterion8();
  criterion9();
  criterion10(outcome);

  if (g_failures == 0) {
    std::printf("all criteria passed\n");
    return 0;
  }
  std::printf("%d criterion(s) failed\n", g_failures);
  return 1;
}
