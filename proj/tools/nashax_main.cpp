// Copyright 2026 The nashax Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nashax/axioms.hpp"
#include "nashax/closure.hpp"
#include "nashax/errors.hpp"
#include "nashax/fixtures.hpp"
#include "nashax/game_io.hpp"
#include "nashax/suite.hpp"
#include "nashax/theorem_lab.hpp"

namespace fs = std::filesystem;
using namespace nashax;

namespace {

// Exit codes.
constexpr int kOk = 0;
constexpr int kExpectationFailed = 1;
constexpr int kInputError = 2;

struct Globals {
  std::size_t jobs = 1;
  std::size_t budget = kDefaultBudget;
};

// A game file, or one of the bundled fixture names.
Game load_game(const std::string& arg) {
  if (!fs::exists(arg)) {
    if (arg == "pd") return fixtures::prisoners_dilemma();
    if (arg == "ex2") return fixtures::coordination_2x2();
    if (arg == "ex5") return fixtures::three_by_two();
    if (arg == "three_player") return fixtures::three_player();
    if (arg == "chain") return fixtures::one_player_chain();
  }
  return read_game_file(arg);
}

// A class directory, or one of the named classes.
GameClass load_class(const std::string& arg, const Globals& g) {
  if (fs::is_directory(arg)) return read_class_dir(arg);
  for (std::string_view name : named_classes()) {
    if (name == arg) return build_named_class(arg, {g.budget, g.jobs});
  }
  throw Error("'" + arg + "' is neither a class directory nor a named class");
}

ConceptSpec parse_spec(const std::string& concept_arg, const std::string& blocking) {
  auto id = parse_concept_id(concept_arg);
  if (!id) throw Error("unknown concept '" + concept_arg + "'");
  ConceptSpec spec{*id};
  if (blocking == "weak") {
    spec.blocking = Blocking::weak;
  } else if (blocking != "strict") {
    throw Error("unknown blocking '" + blocking + "'");
  }
  return spec;
}

std::size_t parse_profile(const Game& g, const std::string& text) {
  LabeledProfile labels;
  std::string cur;
  for (char c : text) {
    if (c == '(' || c == ')' || c == ' ') continue;
    if (c == ',') {
      labels.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  labels.push_back(cur);
  auto s = g.find_profile(labels);
  if (!s) throw Error("profile '" + text + "' does not exist in the game");
  return *s;
}

std::string class_label(const std::string& arg) {
  return fs::is_directory(arg) ? fs::path(arg).filename().string() : arg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Normal-form games, solution concepts and axiom checks"};
  app.require_subcommand(1);
  Globals globals;
  if (const char* env = std::getenv("NASHAX_BUDGET")) {
    try {
      globals.budget = std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "error: NASHAX_BUDGET must be a positive integer\n";
      return kInputError;
    }
  }
  app.add_option("--jobs,-j", globals.jobs, "Worker threads")->check(CLI::PositiveNumber);
  app.add_option("--budget", globals.budget, "Maximum class size (env NASHAX_BUDGET)")
      ->check(CLI::PositiveNumber);

  std::string game_arg, concept_arg, blocking = "strict", mode, out_dir = ".", axiom_arg, class_arg,
                                     expect, lemma, profile_arg, report_path;
  bool as_json = false;

  auto* solve = app.add_subcommand("solve", "Print the solution set of a game");
  solve->add_option("game", game_arg, "Game file or fixture name")->required();
  solve->add_option("--concept", concept_arg, "Solution concept id")->required();
  solve->add_option("--blocking", blocking, "strong_nash coalition blocking: strict or weak");

  auto* closure = app.add_subcommand("closure", "Build a closed class and write it as a directory");
  closure->add_option("input", game_arg, "Game file or class directory")->required();
  closure->add_option("--mode", mode, "d, strict or reductions")
      ->required()
      ->check(CLI::IsMember({"d", "strict", "reductions"}));
  closure->add_option("--out", out_dir, "Parent directory of the class directory");

  auto* check_cmd = app.add_subcommand("check", "Check an axiom for a concept over a class");
  check_cmd->add_option("--axiom", axiom_arg, "iis, mc, isds, jo, cons, cocons or ciis")->required();
  check_cmd->add_option("--concept", concept_arg, "Solution concept id")->required();
  check_cmd->add_option("--class", class_arg, "Class directory or named class")->required();
  check_cmd->add_option("--blocking", blocking, "strong_nash coalition blocking: strict or weak");
  check_cmd->add_option("--expect", expect, "Exit 1 unless the result matches")
      ->check(CLI::IsMember({"pass", "violated"}));
  check_cmd->add_flag("--json", as_json, "Print the verdict record as JSON");

  auto* construct = app.add_subcommand("construct", "Run a proof construction");
  construct->add_option("--lemma", lemma, "1a, 1b or 2")->required()->check(CLI::IsMember({"1a", "1b", "2"}));
  construct->add_option("--game", game_arg, "Game file or fixture name (1a, 1b)");
  construct->add_option("--profile", profile_arg, "Profile such as D,L (1a, 1b)");
  construct->add_option("--concept", concept_arg, "Solution concept id (1a)");
  construct->add_option("--class", class_arg, "One-player class (2)");

  auto* theorem = app.add_subcommand("theorem1", "Verify the forward theorem for nash on a class");
  theorem->add_option("--class", class_arg, "Class directory or named class")->required();

  auto* reproduce = app.add_subcommand("reproduce", "Run every example and construction");
  reproduce->add_option("--report", report_path, "Also write the verdict records as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (solve->parsed()) {
      const Game g = load_game(game_arg);
      std::cout << format_profiles(g, eval_concept(parse_spec(concept_arg, blocking), g)) << "\n";
      return kOk;
    }

    if (closure->parsed()) {
      const ClosureOptions options{globals.budget, globals.jobs};
      std::vector<Game> seeds;
      if (fs::is_directory(game_arg)) {
        seeds = read_class_dir(game_arg).games();
      } else {
        seeds.push_back(load_game(game_arg));
      }
      GameClass cls;
      if (mode == "d") {
        cls = d_closure(seeds, options);
      } else if (mode == "strict") {
        cls = strict_closure(seeds, options);
      } else {
        if (seeds.size() != 1) throw Error("--mode reductions takes a single game");
        cls = reduction_closure(seeds.front(), options);
      }
      const fs::path dir = fs::path(out_dir) / ("class-" + cls.id());
      write_class_dir(cls, dir);
      std::cout << dir.string() << " (" << cls.size() << " games)\n";
      return kOk;
    }

    if (check_cmd->parsed()) {
      auto axiom = parse_axiom(axiom_arg);
      if (!axiom) throw Error("unknown axiom '" + axiom_arg + "'");
      const ConceptSpec spec = parse_spec(concept_arg, blocking);
      const GameClass cls = load_class(class_arg, globals);
      const AxiomVerdict v = check_axiom(*axiom, spec, cls, CheckOptions{globals.jobs});
      if (as_json) {
        std::cout << verdict_to_json(v, class_label(class_arg)).dump(2) << "\n";
      } else {
        std::cout << format_verdict(v, cls) << "\n";
        for (const auto& note : v.coverage) std::cout << "  " << note << "\n";
      }
      if (!expect.empty() && expect != (v.violated ? "violated" : "pass")) return kExpectationFailed;
      return kOk;
    }

    if (construct->parsed()) {
      if (lemma == "2") {
        if (class_arg.empty()) throw Error("--lemma 2 needs --class");
        const OnePlayerLemmaReport r =
            verify_one_player_lemma(load_class(class_arg, globals), CheckOptions{globals.jobs});
        for (const auto& c : r.concepts) {
          std::cout << concept_name(c.spec) << ": ";
          if (!c.applicable) {
            std::cout << "n/a (" << c.skip_reason << ")\n";
            continue;
          }
          std::cout << "isds " << (c.isds->violated ? "violated" : "pass") << ", jo "
                    << (c.jo->violated ? "violated" : "pass") << ", phi within nash "
                    << (c.subset_of_nash ? "yes" : "no, " + c.subset_witness) << ", nash within phi "
                    << (c.superset_of_nash ? "yes" : "no, " + c.superset_witness) << "\n";
          for (const auto& a : c.replays) {
            std::cout << "  " << (a.passed ? "pass" : "FAIL") << "  " << a.name << ": " << a.detail << "\n";
          }
        }
        std::cout << (r.holds() ? "lemma holds" : "lemma FAILS") << "\n";
        return r.holds() ? kOk : kExpectationFailed;
      }
      if (game_arg.empty() || profile_arg.empty()) throw Error("--lemma " + lemma + " needs --game and --profile");
      const Game g = load_game(game_arg);
      const std::size_t s = parse_profile(g, profile_arg);
      ConstructionReport r;
      if (lemma == "1a") {
        if (concept_arg.empty()) throw Error("--lemma 1a needs --concept");
        r = lemma1a_witness(parse_spec(concept_arg, blocking), g, s);
      } else {
        r = lemma1b_verify(g, s);
      }
      std::cout << report_to_json(r).dump(2) << "\n";
      return r.all_passed() ? kOk : kExpectationFailed;
    }

    if (theorem->parsed()) {
      const GameClass cls = load_class(class_arg, globals);
      const Theorem1Report r = verify_theorem1(cls, CheckOptions{globals.jobs});
      for (const auto& v : r.verdicts) std::cout << format_verdict(v, cls) << "\n";
      std::cout << "oracle: " << r.games_checked << " games, "
                << (r.oracle_mismatches.empty() ? "agrees" : "disagrees on " + r.oracle_mismatches.front())
                << "\n";
      return r.holds() ? kOk : kExpectationFailed;
    }

    if (reproduce->parsed()) {
      const SuiteReport r = run_suite({globals.jobs, globals.budget});
      std::cout << r.table();
      if (!report_path.empty()) {
        std::ofstream out(report_path, std::ios::binary);
        if (!out) throw Error(report_path + ": cannot write file");
        out << r.records.dump(2) << "\n";
      }
      return r.all_ok() ? kOk : kExpectationFailed;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kOk;
}
