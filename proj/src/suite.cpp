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


#include "nashax/suite.hpp"

#include <algorithm>
#include <map>
#include <optional>

#include "nashax/axioms.hpp"
#include "nashax/closure.hpp"
#include "nashax/errors.hpp"
#include "nashax/fixtures.hpp"
#include "nashax/theorem_lab.hpp"

namespace nashax {

namespace {

std::string space_of(const std::vector<Labels>& strategies) {
  std::string out;
  for (std::size_t i = 0; i < strategies.size(); ++i) {
    if (i) out += "x";
    out += "{";
    for (std::size_t k = 0; k < strategies[i].size(); ++k) out += (k ? "," : "") + strategies[i][k];
    out += "}";
  }
  return out;
}

std::string format_labels(const LabeledProfile& p) {
  std::string out = "(";
  for (std::size_t i = 0; i < p.size(); ++i) out += (i ? "," : "") + p[i];
  return out + ")";
}

std::string result_of(const AxiomVerdict& v) { return v.violated ? "violated" : "pass"; }

// Witness profile and reduction strategy sets, sets sorted.
std::string describe_witness(const AxiomVerdict& v) {
  if (!v.witness) return "none";
  std::string out;
  for (const auto& p : v.witness->profiles) out += (out.empty() ? "s=" : " ") + format_labels(p);
  std::vector<std::string> spaces;
  for (const auto& s : v.witness->subsets) spaces.push_back(space_of(s.strategies));
  std::sort(spaces.begin(), spaces.end());
  for (const auto& s : spaces) out += " " + s;
  return out;
}

class Runner {
 public:
  explicit Runner(const SuiteOptions& options) : options_(options) {}

  const GameClass& named(const std::string& name) {
    auto it = classes_.find(name);
    if (it == classes_.end()) {
      it = classes_.emplace(name, build_named_class(name, {options_.budget, options_.jobs})).first;
    }
    return it->second;
  }

  const ClassAnalysis& analysis(const std::string& name) {
    auto it = analyses_.find(name);
    if (it == analyses_.end()) it = analyses_.emplace(name, ClassAnalysis(named(name), options_.jobs)).first;
    return it->second;
  }

  // Nullopt when the concept is undefined somewhere in the class.
  const std::optional<SolutionTable>& table(const std::string& name, ConceptId id) {
    const auto key = std::make_pair(name, id);
    auto it = tables_.find(key);
    if (it == tables_.end()) {
      std::optional<SolutionTable> t;
      try {
        t.emplace(named(name), ConceptSpec{id}, options_.jobs);
      } catch (const DomainError&) {
      }
      it = tables_.emplace(key, std::move(t)).first;
    }
    return it->second;
  }

  AxiomVerdict verdict(const std::string& name, ConceptId id, Axiom axiom) {
    const auto key = std::make_tuple(name, id, axiom);
    auto it = verdicts_.find(key);
    if (it != verdicts_.end()) return it->second;
    const auto& t = table(name, id);
    if (!t) throw DomainError(std::string(to_string(id)) + " is undefined on " + name, {});
    AxiomVerdict v = check(axiom, analysis(name), *t, CheckOptions{options_.jobs});
    report_.records.push_back(verdict_to_json(v, name));
    ++verdicts_checked_;
    if (v.violated) {
      ++violated_;
      if (replay_witness(v, ConceptSpec{id}, named(name))) ++replayed_;
    }
    verdicts_.emplace(key, v);
    return v;
  }

  void row(std::string section, std::string item, std::string expected, std::string observed) {
    const bool ok = expected == observed;
    report_.rows.push_back({std::move(section), std::move(item), std::move(expected),
                            std::move(observed), ok});
  }

  void axiom_rows(const std::string& section, const std::string& cls, ConceptId id,
                  const std::vector<std::pair<Axiom, std::string>>& expect) {
    for (const auto& [axiom, result] : expect) {
      row(section,
          std::string(to_string(axiom)) + " " + std::string(to_string(id)) + " on " + cls, result,
          result_of(verdict(cls, id, axiom)));
    }
  }

  void run() {
    nash_sets();
    class_sizes();
    example1();
    example2();
    independence();
    theorem1();
    mc_implies_ciis();
    lemma1a();
    lemma1b();
    one_player();
    row("replay", "violated verdicts re-verified", "all",
        replayed_ == violated_ ? "all" : std::to_string(replayed_) + "/" + std::to_string(violated_));
  }

  SuiteReport take() { return std::move(report_); }

 private:
  void nash_sets() {
    const Game ex2 = fixtures::coordination_2x2();
    const Game ex5 = fixtures::three_by_two();
    const Game tp = fixtures::three_player();
    row("solve", "nash on Ex2", "(U,L) (D,R)", format_profiles(ex2, nash(ex2)));
    row("solve", "strong_nash on Ex2", "(U,L)", format_profiles(ex2, strong_nash(ex2)));
    row("solve", "ne_indifference_closure on Ex2", "(U,L) (D,L) (D,R)",
        format_profiles(ex2, eval_concept({ConceptId::ne_indifference_closure}, ex2)));
    row("solve", "nash on Ex5", "(U,L) (C,R) (D,L)", format_profiles(ex5, nash(ex5)));
    row("solve", "ex5_phi on Ex5", "(U,L) (D,L)",
        format_profiles(ex5, eval_concept({ConceptId::ex5_phi}, ex5)));
    row("solve", "nash on three-player fixture", "(a,a,b) (a,b,a) (b,b,a)",
        format_profiles(tp, nash(tp)));
    row("solve", "jointly_optimal on three-player fixture", "(a,a,b)",
        format_profiles(tp, jointly_optimal(tp)));
  }

  void class_sizes() {
    const std::vector<std::pair<std::string, std::size_t>> sizes = {
        {"pd_dclosed", 9}, {"ex2_dclosed", 9}, {"ex3_cons", 5}, {"ex4", 13},
        {"ex5", 21},       {"ex5_dclosed", 21}, {"three_player_dclosed", 27}, {"chain_strict", 8}};
    for (const auto& [name, size] : sizes) {
      row("classes", name + " size", std::to_string(size), std::to_string(named(name).size()));
    }
  }

  void example1() {
    axiom_rows("example1", "pd_dclosed", ConceptId::empty,
               {{Axiom::iis, "pass"}, {Axiom::mc, "pass"}, {Axiom::isds, "pass"}, {Axiom::jo, "violated"}});
    axiom_rows("example1", "pd_dclosed", ConceptId::all_profiles,
               {{Axiom::iis, "pass"}, {Axiom::mc, "pass"}, {Axiom::isds, "violated"}, {Axiom::jo, "pass"}});
  }

  void example2() {
    axiom_rows("example2", "ex2_dclosed", ConceptId::strong_nash,
               {{Axiom::iis, "pass"}, {Axiom::mc, "violated"}, {Axiom::isds, "pass"}, {Axiom::jo, "pass"}});
    row("example2", "mc strong_nash witness", "s=(D,R) {D}x{L,R} {U,D}x{R}",
        describe_witness(verdict("ex2_dclosed", ConceptId::strong_nash, Axiom::mc)));
    axiom_rows("example2", "ex2_dclosed", ConceptId::ne_indifference_closure,
               {{Axiom::iis, "violated"}, {Axiom::mc, "pass"}, {Axiom::isds, "pass"}, {Axiom::jo, "pass"}});
    row("example2", "iis ne_indifference_closure witness", "s=(D,L) {U,D}x{L}",
        describe_witness(verdict("ex2_dclosed", ConceptId::ne_indifference_closure, Axiom::iis)));
  }

  void independence() {
    axiom_rows("example3", "ex3_cons", ConceptId::parity_ne,
               {{Axiom::iis, "pass"}, {Axiom::cons, "violated"}});
    axiom_rows("example4", "ex4", ConceptId::ex4_phi, {{Axiom::mc, "pass"}, {Axiom::cocons, "violated"}});
    axiom_rows("example4", "ex4", ConceptId::ex4_phi_prime,
               {{Axiom::cocons, "pass"}, {Axiom::mc, "violated"}});
    axiom_rows("example5", "ex5", ConceptId::ex5_phi, {{Axiom::ciis, "pass"}, {Axiom::mc, "violated"}});
  }

  void theorem1() {
    for (const std::string name : {"pd_dclosed", "ex2_dclosed", "ex5_dclosed", "three_player_dclosed"}) {
      const Theorem1Report r = verify_theorem1(named(name), CheckOptions{options_.jobs});
      std::size_t passed = 0;
      for (const auto& v : r.verdicts) passed += v.passed() ? 1 : 0;
      std::string observed = std::to_string(passed) + "/4 pass, oracle ";
      observed += r.oracle_mismatches.empty() ? "agrees" : "disagrees on " + r.oracle_mismatches.front();
      row("theorem1", "nash on " + name, "4/4 pass, oracle agrees", observed);
    }
  }

  void mc_implies_ciis() {
    for (std::string_view view : named_classes()) {
      const std::string name(view);
      std::string broken;
      for (ConceptId id : registered_concepts()) {
        if (!table(name, id)) continue;
        if (verdict(name, id, Axiom::mc).violated) continue;
        if (verdict(name, id, Axiom::ciis).violated && broken.empty()) {
          broken = std::string(to_string(id));
        }
      }
      row("mc-ciis", "mc implies ciis on " + name, "holds",
          broken.empty() ? "holds" : "fails for " + broken);
    }
  }

  void lemma1a() {
    const std::vector<std::pair<ConceptId, Axiom>> known = {
        {ConceptId::empty, Axiom::jo},
        {ConceptId::all_profiles, Axiom::isds},
        {ConceptId::strong_nash, Axiom::mc},
        {ConceptId::ne_indifference_closure, Axiom::iis}};
    for (const std::string name : {"pd_dclosed", "ex2_dclosed"}) {
      const GameClass& cls = named(name);
      for (const auto& [id, failure] : known) {
        std::size_t built = 0;
        std::size_t matched = 0;
        for (std::size_t k = 0; k < cls.size(); ++k) {
          const Game& g = cls.game(k);
          const ProfileSet ne = nash(g);
          for (std::size_t s : (*table(name, id))[k]) {
            if (contains(ne, s)) continue;
            const ConstructionReport r = lemma1a_witness(ConceptSpec{id}, g, s);
            ++built;
            const auto bad = r.violated();
            if (r.all_passed() && std::find(bad.begin(), bad.end(), failure) != bad.end()) ++matched;
          }
        }
        const std::string counts = std::to_string(matched) + "/" + std::to_string(built);
        row("lemma1a", std::string(to_string(id)) + " on " + name + " names " +
                           std::string(to_string(failure)),
            std::to_string(built) + "/" + std::to_string(built), counts);
      }
    }
  }

  void lemma1b() {
    for (const std::string name : {"pd_dclosed", "ex2_dclosed", "three_player_dclosed"}) {
      const GameClass& cls = named(name);
      std::size_t built = 0;
      std::size_t passed = 0;
      for (const Game& g : cls.games()) {
        for (std::size_t s : nash(g)) {
          ++built;
          if (lemma1b_verify(g, s).all_passed()) ++passed;
        }
      }
      row("lemma1b", "every equilibrium of " + name, std::to_string(built) + "/" + std::to_string(built),
          std::to_string(passed) + "/" + std::to_string(built));
    }
  }

  void one_player() {
    const OnePlayerLemmaReport r = verify_one_player_lemma(named("chain_strict"), CheckOptions{options_.jobs});
    for (const auto& c : r.concepts) {
      const std::string item = concept_name(c.spec) + " on chain_strict";
      if (!c.applicable) {
        row("one-player", item, "n/a", "n/a");
        continue;
      }
      const bool fails = c.isds->violated || c.jo->violated;
      const bool replays = std::all_of(c.replays.begin(), c.replays.end(),
                                       [](const Assertion& a) { return a.passed; });
      const std::string expected = c.equals_nash ? "isds pass, jo pass" : "fails isds or jo, replay ok";
      std::string observed;
      if (c.equals_nash) {
        observed = "isds " + result_of(*c.isds) + ", jo " + result_of(*c.jo);
      } else {
        observed = fails ? "fails isds or jo" : "passes isds and jo";
        observed += replays && c.part_a_ok() && c.part_b_ok() ? ", replay ok" : ", replay broken";
      }
      row("one-player", item, expected, observed);
    }
    row("one-player", "lemma holds on chain_strict", "holds", r.holds() ? "holds" : "fails");
  }

  SuiteOptions options_;
  SuiteReport report_;
  std::map<std::string, GameClass> classes_;
  std::map<std::string, ClassAnalysis> analyses_;
  std::map<std::pair<std::string, ConceptId>, std::optional<SolutionTable>> tables_;
  std::map<std::tuple<std::string, ConceptId, Axiom>, AxiomVerdict> verdicts_;
  std::size_t verdicts_checked_ = 0;
  std::size_t violated_ = 0;
  std::size_t replayed_ = 0;
};

}  // namespace

bool SuiteReport::all_ok() const { return failures() == 0; }

std::size_t SuiteReport::failures() const {
  return static_cast<std::size_t>(
      std::count_if(rows.begin(), rows.end(), [](const SuiteRow& r) { return !r.ok; }));
}

std::string SuiteReport::table() const {
  const std::vector<std::string> head = {"section", "check", "expected", "observed", "status"};
  std::vector<std::size_t> width(head.size());
  for (std::size_t c = 0; c < head.size(); ++c) width[c] = head[c].size();
  auto cells = [](const SuiteRow& r) {
    return std::vector<std::string>{r.section, r.item, r.expected, r.observed, r.ok ? "PASS" : "FAIL"};
  };
  for (const auto& r : rows) {
    const auto c = cells(r);
    for (std::size_t k = 0; k < c.size(); ++k) width[k] = std::max(width[k], c[k].size());
  }
  auto line = [&](const std::vector<std::string>& c) {
    std::string out;
    for (std::size_t k = 0; k < c.size(); ++k) {
      out += c[k];
      if (k + 1 < c.size()) out += std::string(width[k] - c[k].size() + 2, ' ');
    }
    return out + "\n";
  };
  std::string out = line(head);
  for (const auto& r : rows) out += line(cells(r));
  out += std::to_string(rows.size() - failures()) + "/" + std::to_string(rows.size()) + " rows pass\n";
  return out;
}

SuiteReport run_suite(const SuiteOptions& options) {
  Runner runner(options);
  runner.run();
  return runner.take();
}

}  // namespace nashax
