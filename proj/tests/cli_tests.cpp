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

// End-to-end checks of the command-line tool: exit codes, report formats,
// and oracle/engine agreement. Usage: cli_tests <path-to-shaperec-cli>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "json.hpp"
#include "support/fixtures.hpp"

namespace {

int g_failures = 0;

#define CHECK_MSG(cond, msg)                                                        \
  do {                                                                              \
    if (!(cond)) {                                                                  \
      std::printf("FAIL %s:%d: %s\n", __FILE__, __LINE__, std::string(msg).c_str()); \
      ++g_failures;                                                                 \
    }                                                                               \
  } while (0)

struct RunResult {
  int exit_code;
  std::string output;  // stdout and stderr combined
};

std::string g_cli;
int g_run_counter = 0;

RunResult run(const std::string& args) {
  std::string out_file = (std::filesystem::temp_directory_path() /
                          ("shaperec_cli_test_" + std::to_string(g_run_counter++) + ".out"))
                             .string();
  std::string command = g_cli + " " + args + " > " + out_file + " 2>&1";
  int status = std::system(command.c_str());
  int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return RunResult{code, testsupport::slurp(out_file)};
}

std::string fixture(const std::string& name) { return testsupport::fixture_path(name); }

std::string write_temp(const std::string& name, const std::string& content) {
  std::string path = (std::filesystem::temp_directory_path() / name).string();
  std::ofstream out(path, std::ios::binary);
  out << content;
  return path;
}

void test_validate_exit_codes() {
  RunResult fig1 = run("validate --data " + fixture("fig1_data.ttl") + " --shapes " +
                       fixture("fig1_shapes.ttl") + " --semantics standard");
  CHECK_MSG(fig1.exit_code == 1, "fig1 standard should exit 1, got " +
                                     std::to_string(fig1.exit_code));
  CHECK_MSG(fig1.output.find("Anne") != std::string::npos, "violation on Anne expected");
  CHECK_MSG(fig1.output.find("valid: false") != std::string::npos, "invalid report expected");

  RunResult brave = run("validate --data " + fixture("vegdish_data.ttl") + " --shapes " +
                        fixture("vegdish_shapes.ttl") + " --semantics brave-partial");
  CHECK_MSG(brave.exit_code == 0, "vegdish brave-partial should exit 0");

  RunResult cautious = run("validate --data " + fixture("vegdish_data.ttl") + " --shapes " +
                           fixture("vegdish_shapes.ttl") + " --semantics cautious-partial");
  CHECK_MSG(cautious.exit_code == 1, "vegdish cautious-partial should exit 1");

  RunResult recursion = run("validate --data " + fixture("fig1_data.ttl") + " --shapes " +
                            fixture("inconsistent_shapes.ttl") + " --semantics standard");
  CHECK_MSG(recursion.exit_code == 2, "standard on recursive document should exit 2");
  CHECK_MSG(recursion.output.rfind("ERROR recursion:", 0) == 0,
            "machine-parseable recursion error expected, got: " + recursion.output);

  RunResult missing = run("validate --data /nonexistent.ttl --shapes " +
                          fixture("fig1_shapes.ttl"));
  CHECK_MSG(missing.exit_code == 2, "missing file should exit 2");
  CHECK_MSG(missing.output.rfind("ERROR io:", 0) == 0, "io error expected");

  std::string bad = write_temp("shaperec_bad.ttl", ":s :p :o .\n");  // no prefix declaration
  RunResult parse_error =
      run("validate --data " + bad + " --shapes " + fixture("fig1_shapes.ttl"));
  CHECK_MSG(parse_error.exit_code == 2, "parse error should exit 2");
  CHECK_MSG(parse_error.output.rfind("ERROR parse:", 0) == 0, "parse error line expected");

  RunResult bad_mode = run("validate --data " + fixture("fig1_data.ttl") + " --shapes " +
                           fixture("fig1_shapes.ttl") + " --semantics sceptical");
  CHECK_MSG(bad_mode.exit_code == 2, "unknown semantics should exit 2");
  CHECK_MSG(bad_mode.output.rfind("ERROR args:", 0) == 0, "args error expected");
}

void test_budget_and_env() {
  RunResult capped = run("validate --data " + fixture("fig1_data.ttl") + " --shapes " +
                         fixture("inconsistent_shapes.ttl") +
                         " --semantics brave-partial --max-pairs 4");
  CHECK_MSG(capped.exit_code == 2, "guessable pairs over the cap should exit 2");
  CHECK_MSG(capped.output.rfind("ERROR budget:", 0) == 0, "budget error expected");

  RunResult env = run("validate --data " + fixture("fig1_data.ttl") + " --shapes " +
                      fixture("inconsistent_shapes.ttl") + " --semantics brave-partial");
  CHECK_MSG(env.exit_code == 0, "9 guessable pairs fit the default cap");

  std::string saved_cli = g_cli;
  g_cli = "SHAPEREC_MAX_PAIRS=4 " + g_cli;
  RunResult env_capped = run("validate --data " + fixture("fig1_data.ttl") + " --shapes " +
                             fixture("inconsistent_shapes.ttl") + " --semantics brave-partial");
  g_cli = saved_cli;
  CHECK_MSG(env_capped.exit_code == 2, "environment default cap should apply");

  RunResult oracle_budget = run("oracle --data " + fixture("fig1_data.ttl") + " --shapes " +
                                fixture("fig1_shapes.ttl") + " --max-pairs 4");
  CHECK_MSG(oracle_budget.exit_code == 2, "oracle beyond its cap should exit 2");
}

void test_json_report_roundtrip() {
  RunResult r = run("validate --data " + fixture("fig1_data.ttl") + " --shapes " +
                    fixture("fig1_shapes.ttl") + " --format json");
  CHECK_MSG(r.exit_code == 1, "fig1 json validate should exit 1");

  nlohmann::ordered_json doc = nlohmann::ordered_json::parse(r.output);
  CHECK_MSG(doc["schema"] == 1, "schema version 1 expected");
  CHECK_MSG(doc["mode"] == "standard", "mode field expected");
  CHECK_MSG(doc["valid"] == false, "valid=false expected");
  CHECK_MSG(doc["violations"].size() == 1, "one violation expected");
  CHECK_MSG(!doc.contains("witness"), "witness must be omitted when absent");
  CHECK_MSG(doc["stats"].contains("guessablePairs"), "stats fields expected");

  // parse -> re-serialize is byte-identical
  CHECK_MSG(doc.dump(2) + "\n" == r.output, "json report must round-trip byte-identically");

  RunResult valid = run("validate --data " + fixture("vegdish_data.ttl") + " --shapes " +
                        fixture("vegdish_shapes.ttl") + " --semantics brave-total --format json");
  CHECK_MSG(valid.exit_code == 0, "vegdish brave-total json should exit 0");
  nlohmann::ordered_json valid_doc = nlohmann::ordered_json::parse(valid.output);
  CHECK_MSG(valid_doc.contains("witness"), "witness expected under valid brave mode");
  CHECK_MSG(valid_doc["witness"].size() == 4, "four signed pairs expected");
  CHECK_MSG(valid_doc.dump(2) + "\n" == valid.output, "valid report must round-trip");
}

void test_oracle_agrees_with_validate() {
  const std::vector<std::pair<std::string, std::string>> instances{
      {"fig1_data.ttl", "fig1_shapes.ttl"},
      {"fig1_data.ttl", "fig2_shapes.ttl"},
      {"vegdish_data.ttl", "vegdish_shapes.ttl"},
      {"vegdish_data.ttl", "inconsistent_shapes.ttl"},
      {"empty.ttl", "vegdish_shapes.ttl"},
  };
  const std::vector<std::string> modes{"standard", "brave-partial", "brave-total",
                                       "cautious-partial", "cautious-total"};
  for (const auto& [data, shapes] : instances) {
    for (const std::string& mode : modes) {
      std::string args = " --data " + fixture(data) + " --shapes " + fixture(shapes) +
                         " --semantics " + mode + " --format json";
      RunResult fast = run("validate" + args);
      RunResult slow = run("oracle" + args);
      CHECK_MSG(fast.exit_code == slow.exit_code,
                "validate and oracle must agree on " + data + " + " + shapes + " under " + mode);
      if (fast.exit_code < 2) {
        nlohmann::ordered_json fast_doc = nlohmann::ordered_json::parse(fast.output);
        nlohmann::ordered_json slow_doc = nlohmann::ordered_json::parse(slow.output);
        CHECK_MSG(fast_doc["valid"] == slow_doc["valid"], "valid flags must agree");
        CHECK_MSG(slow_doc["stats"]["oracle"] == true, "oracle flag expected in stats");
        CHECK_MSG(!fast_doc["stats"].contains("oracle"), "no oracle flag for the engine");
      }
    }
  }
}

void test_translate_and_analyze() {
  RunResult fig2 = run("translate --shapes " + fixture("fig2_shapes.ttl"));
  CHECK_MSG(fig2.exit_code == 0, "translate should exit 0");
  CHECK_MSG(fig2.output.find("forall x . isA(x, <http://example.org/Employee>) -> "
                             "S_<http://example.org/EmployeeShapeB>(x)") != std::string::npos,
            "target axiom expected in translation");
  CHECK_MSG(fig2.output.find("F_minLength_3(x)") != std::string::npos,
            "filter atom expected in translation");

  RunResult empty = run("translate --shapes " + fixture("empty.ttl"));
  CHECK_MSG(empty.exit_code == 0 && empty.output == "true\n",
            "empty document must translate to true");

  std::string unsupported = write_temp(
      "shaperec_unsupported.ttl",
      "@prefix : <http://example.org/> .\n@prefix sh: <http://www.w3.org/ns/shacl#> .\n"
      ":S a sh:NodeShape ; sh:sparql :Q .\n");
  RunResult bad = run("translate --shapes " + unsupported);
  CHECK_MSG(bad.exit_code == 2, "unsupported vocabulary should exit 2");
  CHECK_MSG(bad.output.rfind("ERROR read:", 0) == 0, "read error expected");

  RunResult analyze_fig1 = run("analyze --shapes " + fixture("fig1_shapes.ttl"));
  CHECK_MSG(analyze_fig1.exit_code == 0, "analyze should exit 0");
  CHECK_MSG(analyze_fig1.output.find("document recursive: false") != std::string::npos,
            "fig1 is non-recursive");
  CHECK_MSG(analyze_fig1.output.find("fragment: base") != std::string::npos,
            "fig1 sits in the base fragment");

  RunResult analyze_veg = run("analyze --shapes " + fixture("vegdish_shapes.ttl"));
  CHECK_MSG(analyze_veg.output.find("document recursive: true") != std::string::npos,
            "vegdish document is recursive");
  CHECK_MSG(analyze_veg.output.find("->") != std::string::npos, "dependency edges expected");

  RunResult analyze_self = run("analyze --shapes " + fixture("inconsistent_shapes.ttl"));
  CHECK_MSG(analyze_self.output.find("document recursive: true") != std::string::npos,
            "self-negating document is recursive");
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: cli_tests <path-to-shaperec-cli>\n");
    return 2;
  }
  g_cli = argv[1];

  test_validate_exit_codes();
  test_budget_and_env();
  test_json_report_roundtrip();
  test_oracle_agrees_with_validate();
  test_translate_and_analyze();

  if (g_failures == 0) {
    std::printf("cli_tests: all checks passed\n");
    return 0;
  }
  std::printf("cli_tests: %d check(s) failed\n", g_failures);
  return 1;
}
