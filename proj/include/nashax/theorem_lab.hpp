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


#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "nashax/axioms.hpp"
#include "nashax/concepts.hpp"
#include "nashax/game.hpp"
#include "nashax/game_class.hpp"

namespace nashax {

// A game built by a construction, with the strategies it keeps in the input.
struct ConstructedGame {
  std::string role;  // "G'", "G''", "G^1", "H^1", ...
  SubsetSpec spec;
  Game game;
};

struct Assertion {
  std::string name;
  bool passed = false;
  std::string detail;
};

// Outcome of evaluating one axiom on the constructed games.
struct AxiomProbe {
  Axiom axiom = Axiom::iis;
  bool holds = true;
  std::string detail;
};

struct ConstructionReport {
  std::string construction;  // "lemma1a", "lemma1b", "one-player"
  std::string concept_id;    // lemma1a only
  std::string game_id;
  LabeledProfile profile;
  std::vector<ConstructedGame> games;
  // Proof obligations; a correct construction passes all of them.
  std::vector<Assertion> steps;
  // lemma1a: the three axiom applications of the argument.
  std::vector<AxiomProbe> probes;

  bool all_passed() const;
  std::vector<Axiom> violated() const;
};

// Given s in phi(G) that is not a Nash equilibrium, builds G' (player j keeps
// {s_j, t_j}, everyone else s_i) and G'' (player j keeps t_j), where
// (j, t_j) is the smallest profitable unilateral deviation, and reports which
// of JO on G'', ISDS on (G', G'') and IIS on (G, G') phi violates.
ConstructionReport lemma1a_witness(const ConceptSpec& spec, const Game& g, std::size_t s);

// For a Nash equilibrium s of an n >= 2 player game: G^k keeps S_k for
// player k and s_i for the others; H^1 = G^1 v G^2 and H^l = H^(l-1) v G^(l+1).
// Checks that each G^k has a dummy player with s jointly optimal in it, that
// H^1..H^(n-2) have a dummy player and that H^(n-1) = G.
ConstructionReport lemma1b_construct(const Game& g, std::size_t s);

// lemma1b_construct for n >= 2; for n = 1 a single JO-membership step.
ConstructionReport lemma1b_verify(const Game& g, std::size_t s);

// Nash equilibria by direct enumeration of every unilateral deviation.
ProfileSet brute_force_nash(const Game& g);

struct Theorem1Report {
  std::vector<AxiomVerdict> verdicts;  // iis, mc, isds, jo for nash
  std::size_t games_checked = 0;
  std::vector<std::string> oracle_mismatches;  // game ids

  bool holds() const;
};

// Throws Error when the class is not d-closed.
Theorem1Report verify_theorem1(const GameClass& cls, const CheckOptions& options = {});

struct OnePlayerConceptResult {
  ConceptSpec spec;
  bool applicable = true;  // false when the concept is undefined on the class
  std::string skip_reason;
  bool equals_nash = false;
  std::optional<AxiomVerdict> isds;
  std::optional<AxiomVerdict> jo;
  bool subset_of_nash = true;    // phi(G) within nash(G) for every G
  bool superset_of_nash = true;  // nash(G) within phi(G) for every G
  std::string subset_witness;    // first "G s" with s in phi(G) but not nash(G)
  std::string superset_witness;  // first "G s" with s in nash(G) but not phi(G)
  // Replays of the argument: removing a non-maximal solution s yields a
  // strict reduction in the class whose solution set differs.
  std::vector<Assertion> replays;

  bool part_a_ok() const { return !isds || isds->violated || subset_of_nash; }
  bool part_b_ok() const { return !jo || jo->violated || superset_of_nash; }
};

struct OnePlayerLemmaReport {
  std::vector<OnePlayerConceptResult> concepts;
  bool holds() const;
};

// Throws Error unless every member has one player and the class is strictly
// closed.
OnePlayerLemmaReport verify_one_player_lemma(const GameClass& cls, const CheckOptions& options = {});

nlohmann::ordered_json report_to_json(const ConstructionReport& report);

}  // namespace nashax
