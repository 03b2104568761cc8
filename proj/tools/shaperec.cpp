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

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "shaperec/analysis.hpp"
#include "shaperec/errors.hpp"
#include "shaperec/ntriples.hpp"
#include "shaperec/reader.hpp"
#include "shaperec/scl.hpp"
#include "shaperec/semantics.hpp"
#include "shaperec/turtle.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace shaperec;

struct CliError : std::runtime_error {
  CliError(std::string code_, const std::string& message)
      : std::runtime_error(message), code(std::move(code_)) {}
  std::string code;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CliError("io", "cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Graph load_graph(const std::string& path) {
  std::string text = read_file(path);
  bool ntriples = path.size() >= 3 && path.compare(path.size() - 3, 3, ".nt") == 0;
  try {
    return ntriples ? parse_ntriples(text) : parse_turtle_subset(text);
  } catch (const ParseError& e) {
    throw CliError("parse", path + ":" + e.what());
  }
}

Document load_document(const std::string& path, std::vector<std::string>* warnings = nullptr) {
  Graph g = load_graph(path);
  try {
    ReadResult r = read_document(g);
    if (warnings) *warnings = r.warnings;
    return std::move(r.document);
  } catch (const ReadError& e) {
    throw CliError("read", path + ": " + e.what());
  } catch (const std::invalid_argument& e) {
    throw CliError("read", path + ": " + e.what());
  }
}

SemanticsMode parse_mode(const std::string& name) {
  auto mode = semantics_mode_from_string(name);
  if (!mode)
    throw CliError("args", "unknown semantics '" + name +
                               "' (expected standard|brave-partial|brave-total|"
                               "cautious-partial|cautious-total)");
  return *mode;
}

std::size_t default_max_pairs(std::size_t fallback) {
  const char* env = std::getenv("SHAPEREC_MAX_PAIRS");
  if (env == nullptr || *env == '\0') return fallback;
  try {
    return static_cast<std::size_t>(std::stoull(env));
  } catch (const std::exception&) {
    throw CliError("args", "SHAPEREC_MAX_PAIRS is not a number");
  }
}

json report_json(const ValidationResult& r, bool oracle) {
  json doc;
  doc["schema"] = 1;
  doc["mode"] = to_string(r.mode);
  doc["valid"] = r.valid;
  json violations = json::array();
  for (const Violation& v : r.violations) {
    violations.push_back(
        {{"focus", v.focus.to_string()}, {"shape", v.shape.to_string()}, {"detail", v.detail}});
  }
  doc["violations"] = violations;
  if (r.witness) {
    json witness = json::array();
    for (const auto& [pair, sign] : r.witness->entries()) {
      witness.push_back({{"node", pair.first.to_string()},
                         {"shape", pair.second.to_string()},
                         {"sign", sign == Sign::Pos ? "Pos" : "Neg"}});
    }
    doc["witness"] = witness;
  }
  json stats;
  stats["nodes"] = r.stats.nodes;
  stats["shapes"] = r.stats.shapes;
  stats["guessablePairs"] = r.stats.guessable_pairs;
  stats["assignmentsTried"] = r.stats.assignments_tried;
  stats["elapsedMs"] = r.stats.elapsed_ms;
  if (oracle) stats["oracle"] = true;
  doc["stats"] = stats;
  return doc;
}

void print_report(const ValidationResult& r, const std::string& format, bool oracle) {
  if (format == "json") {
    std::cout << report_json(r, oracle).dump(2) << "\n";
    return;
  }
  std::cout << "mode: " << to_string(r.mode) << (oracle ? " (oracle)" : "") << "\n";
  std::cout << "valid: " << (r.valid ? "true" : "false") << "\n";
  if (!r.violations.empty()) {
    std::cout << "violations:\n";
    for (const Violation& v : r.violations) {
      std::cout << "  " << v.focus.to_string() << " @ " << v.shape.to_string() << ": " << v.detail
                << "\n";
    }
  }
  if (r.witness) {
    std::cout << "witness:\n";
    for (const auto& [pair, sign] : r.witness->entries()) {
      std::cout << "  " << pair.first.to_string() << " @ " << pair.second.to_string() << " = "
                << (sign == Sign::Pos ? "Pos" : "Neg") << "\n";
    }
  }
  std::cout << "stats: nodes=" << r.stats.nodes << " shapes=" << r.stats.shapes
            << " guessablePairs=" << r.stats.guessable_pairs
            << " assignmentsTried=" << r.stats.assignments_tried
            << " elapsedMs=" << r.stats.elapsed_ms << "\n";
}

int run_validation(const std::string& data_path, const std::string& shapes_path,
                   const std::string& semantics, const std::string& format,
                   std::size_t max_pairs, bool oracle) {
  Graph data = load_graph(data_path);
  std::vector<std::string> warnings;
  Document doc = load_document(shapes_path, &warnings);
  for (const std::string& w : warnings) std::cerr << "warning: " << w << "\n";
  SemanticsMode mode = parse_mode(semantics);

  ValidationResult result;
  try {
    if (oracle) {
      result = brute_force_validate(data, doc, mode, OracleOptions{max_pairs});
    } else {
      result = validate(data, doc, mode, SearchOptions{max_pairs});
    }
  } catch (const RecursionError& e) {
    throw CliError("recursion", e.what());
  } catch (const BudgetError& e) {
    throw CliError("budget", e.what());
  }
  print_report(result, format, oracle);
  return result.valid ? 0 : 1;
}

int run_translate(const std::string& shapes_path, const std::string& out_path) {
  Document doc = load_document(shapes_path);
  std::string text = scl::render(scl::translate(doc)) + "\n";
  if (out_path == "-") {
    std::cout << text;
    return 0;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw CliError("io", "cannot write " + out_path);
  out << text;
  return 0;
}

int run_analyze(const std::string& shapes_path) {
  Document doc = load_document(shapes_path);
  RecursionInfo info = is_recursive(doc);
  std::cout << "document recursive: " << (info.document ? "true" : "false") << "\n";
  for (const auto& [name, recursive] : info.per_shape) {
    std::cout << "shape " << name.to_string() << ": "
              << (recursive ? "recursive" : "non-recursive") << "\n";
  }
  std::set<char> letters = fragment_letters(doc);
  std::cout << "fragment: ";
  if (letters.empty()) {
    std::cout << "base";
  } else {
    for (char c : letters) std::cout << c;
  }
  std::cout << "\n";
  DependencyGraph dep = dependency_graph(doc);
  std::cout << "dependencies:\n";
  for (const auto& [from, tos] : dep.edges) {
    for (const ShapeName& to : tos) {
      std::cout << "  " << from.to_string() << " -> " << to.to_string() << "\n";
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"SHACL validation under standard and recursive semantics, with "
               "first-order (SCL) export"};
  app.require_subcommand(1);

  std::string data_path, shapes_path, semantics = "standard", format = "text", out_path = "-";
  std::size_t max_pairs = 0;
  bool max_pairs_set = false;

  auto add_max_pairs = [&](CLI::App* cmd) {
    cmd->add_option("--max-pairs", max_pairs, "cap on enumerated assignment pairs")
        ->each([&](const std::string&) { max_pairs_set = true; });
  };

  CLI::App* validate_cmd =
      app.add_subcommand("validate", "validate a data graph against a shapes graph");
  validate_cmd->add_option("--data", data_path, "data graph (.ttl or .nt)")->required();
  validate_cmd->add_option("--shapes", shapes_path, "shapes graph (.ttl or .nt)")->required();
  validate_cmd->add_option("--semantics", semantics,
                           "standard|brave-partial|brave-total|cautious-partial|cautious-total");
  validate_cmd->add_option("--format", format, "text|json");
  add_max_pairs(validate_cmd);

  CLI::App* oracle_cmd =
      app.add_subcommand("oracle", "exhaustive reference validation (small inputs only)");
  oracle_cmd->add_option("--data", data_path, "data graph")->required();
  oracle_cmd->add_option("--shapes", shapes_path, "shapes graph")->required();
  oracle_cmd->add_option("--semantics", semantics, "semantics mode");
  oracle_cmd->add_option("--format", format, "text|json");
  add_max_pairs(oracle_cmd);

  CLI::App* translate_cmd =
      app.add_subcommand("translate", "translate a shapes graph to an SCL sentence");
  translate_cmd->add_option("--shapes", shapes_path, "shapes graph")->required();
  translate_cmd->add_option("--out", out_path, "output file or - for stdout");

  CLI::App* analyze_cmd =
      app.add_subcommand("analyze", "recursion, fragment, and dependency report");
  analyze_cmd->add_option("--shapes", shapes_path, "shapes graph")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cout << "ERROR args: " << e.what() << "\n";
    return 2;
  }

  try {
    if (format != "text" && format != "json")
      throw CliError("args", "unknown format '" + format + "'");
    if (app.got_subcommand(validate_cmd)) {
      if (!max_pairs_set) max_pairs = default_max_pairs(SearchOptions{}.max_guessable_pairs);
      return run_validation(data_path, shapes_path, semantics, format, max_pairs, false);
    }
    if (app.got_subcommand(oracle_cmd)) {
      if (!max_pairs_set) max_pairs = OracleOptions{}.max_pairs;
      return run_validation(data_path, shapes_path, semantics, format, max_pairs, true);
    }
    if (app.got_subcommand(translate_cmd)) return run_translate(shapes_path, out_path);
    if (app.got_subcommand(analyze_cmd)) return run_analyze(shapes_path);
  } catch (const CliError& e) {
    std::cout << "ERROR " << e.code << ": " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cout << "ERROR internal: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
