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
#include <string_view>
#include <vector>

#include <json.hpp>

#include "nashax/concepts.hpp"
#include "nashax/game_class.hpp"

namespace nashax {

enum class Axiom { iis, mc, isds, jo, cons, cocons, ciis };

std::string_view to_string(Axiom axiom);
std::optional<Axiom> parse_axiom(std::string_view name);
bool is_literature_axiom(Axiom axiom);

struct WitnessGame {
  std::string role;  // "G", "G'", "G''", "reduced", "proper reduction"
  std::string id;
};

// Strategy labels kept by a reduction named in `games`, per player.
struct WitnessSubsets {
  std::string role;
  std::vector<Labels> strategies;
};

// Everything needed to replay a violation against the class.
struct Witness {
  std::string clause;
  std::vector<WitnessGame> games;
  std::vector<WitnessSubsets> subsets;
  std::vector<LabeledProfile> profiles;
  std::vector<std::size_t> players;  // CONS: the remaining subgroup, 0-based
};

struct AxiomVerdict {
  Axiom axiom = Axiom::iis;
  std::string concept_id;
  bool violated = false;
  std::optional<Witness> witness;
  std::vector<std::string> coverage;

  bool passed() const { return !violated; }
};

struct CheckOptions {
  std::size_t jobs = 1;
};

// Reduction structure of a class: for every member G, the members that are
// reductions of G. Concept-independent, so one analysis serves every check.
class ClassAnalysis {
 public:
  struct Link {
    std::size_t game;                    // class index of the reduction
    SubsetSpec spec;                     // its strategies inside G
    std::vector<std::size_t> to_parent;  // reduction profile -> G profile
    bool strict = false;
    bool proper = false;
  };

  explicit ClassAnalysis(const GameClass& cls, std::size_t jobs = 1);

  const GameClass& game_class() const { return *cls_; }
  // Sorted by class index; includes G itself.
  const std::vector<Link>& reductions(std::size_t k) const { return links_[k]; }

 private:
  const GameClass* cls_;
  std::vector<std::vector<Link>> links_;
};

// One concept evaluated on every class member. DomainError propagates with
// the first offending member in class order.
class SolutionTable {
 public:
  SolutionTable(const GameClass& cls, const ConceptSpec& spec, std::size_t jobs = 1);
  // Precomputed sets, one per class member; spec only names them.
  SolutionTable(const ConceptSpec& spec, std::vector<ProfileSet> sets)
      : spec_(spec), sets_(std::move(sets)) {}

  const ConceptSpec& spec() const { return spec_; }
  const ProfileSet& operator[](std::size_t k) const { return sets_[k]; }
  bool contains(std::size_t k, std::size_t profile) const {
    return nashax::contains(sets_[k], profile);
  }

 private:
  ConceptSpec spec_;
  std::vector<ProfileSet> sets_;
};

// Scans every member in class order and reports the first witness of the
// deterministic order; the result does not depend on options.jobs.
AxiomVerdict check(Axiom axiom, const ClassAnalysis& analysis, const SolutionTable& solutions,
                   const CheckOptions& options = {});

AxiomVerdict check_axiom(Axiom axiom, const ConceptSpec& spec, const GameClass& cls,
                         const CheckOptions& options = {});
AxiomVerdict check_iis(const ConceptSpec& spec, const GameClass& cls, const CheckOptions& options = {});
AxiomVerdict check_mc(const ConceptSpec& spec, const GameClass& cls, const CheckOptions& options = {});
AxiomVerdict check_isds(const ConceptSpec& spec, const GameClass& cls, const CheckOptions& options = {});
AxiomVerdict check_jo(const ConceptSpec& spec, const GameClass& cls, const CheckOptions& options = {});
// which is one of cons, cocons, ciis.
AxiomVerdict check_literature_axiom(Axiom which, const ConceptSpec& spec, const GameClass& cls,
                                    const CheckOptions& options = {});

// Feeds a violated verdict's witness back through the definitions, using
// only is_reduction, is_strict_reduction, reduce_players and fresh concept
// evaluations. False for passing verdicts or witnesses that do not hold.
bool replay_witness(const AxiomVerdict& verdict, const ConceptSpec& spec, const GameClass& cls);

nlohmann::ordered_json verdict_to_json(const AxiomVerdict& verdict, std::string_view class_name);
// One line, e.g. "mc strong_nash violated: G=... s=(D,R)".
std::string format_verdict(const AxiomVerdict& verdict, const GameClass& cls);

}  // namespace nashax
