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


#include "nashax/axioms.hpp"

#include <functional>
#include <random>

#include <gtest/gtest.h>

#include "nashax/closure.hpp"
#include "nashax/errors.hpp"
#include "nashax/fixtures.hpp"
#include "oracles.hpp"

namespace nashax {
namespace {

using oracle::Labeled;
using oracle::LabeledSet;
using oracle::Plain;

std::vector<Plain> plains(const GameClass& cls) {
  std::vector<Plain> out;
  for (const Game& g : cls.games()) out.push_back(oracle::plain(g));
  return out;
}

bool same_game(const Plain& a, const Plain& b) {
  return a.strategies == b.strategies && oracle::is_reduction(a, b);
}

// Player-reduced game: the players in `keep` choose, the rest are pinned to s.
Plain pin(const Plain& g, const std::vector<std::size_t>& keep, const Labeled& s) {
  Plain r;
  for (std::size_t i : keep) r.strategies.push_back(g.strategies[i]);
  for (const auto& t : oracle::product(r.strategies)) {
    Labeled full = s;
    for (std::size_t k = 0; k < keep.size(); ++k) full[keep[k]] = t[k];
    std::vector<int> ranks;
    for (std::size_t i : keep) ranks.push_back(g.rank.at(full)[i]);
    r.rank[t] = ranks;
  }
  return r;
}

struct Literature {
  bool cons = true;
  bool cocons = true;
  bool ciis = true;
};

// CONS, COCONS and CIIS straight from their definitions, over the games
// present in the class. CIIS needs at least one proper reduction holding s.
Literature check_literature(const std::vector<Plain>& cls, const std::vector<LabeledSet>& sol) {
  Literature r;
  auto find = [&](const Plain& h) -> std::optional<std::size_t> {
    for (std::size_t k = 0; k < cls.size(); ++k) {
      if (same_game(cls[k], h)) return k;
    }
    return std::nullopt;
  };
  for (std::size_t a = 0; a < cls.size(); ++a) {
    const Plain& g = cls[a];
    const std::size_t n = g.players();
    const auto profiles = oracle::product(g.strategies);
    if (n >= 2) {
      for (const auto& s : profiles) {
        bool present = false;
        bool all_in = true;
        for (std::size_t mask = 1; mask + 1 < (std::size_t{1} << n); ++mask) {
          std::vector<std::size_t> keep;
          Labeled part;
          for (std::size_t i = 0; i < n; ++i) {
            if (mask >> i & 1) {
              keep.push_back(i);
              part.push_back(s[i]);
            }
          }
          const auto idx = find(pin(g, keep, s));
          if (!idx) continue;
          present = true;
          const bool in = sol[*idx].count(part) > 0;
          all_in = all_in && in;
          if (sol[a].count(s) && !in) r.cons = false;
        }
        if (!sol[a].count(s) && present && all_in) r.cocons = false;
      }
    }
    if (profiles.size() >= 3) {
      for (const auto& s : profiles) {
        if (sol[a].count(s)) continue;
        bool any = false;
        bool all_in = true;
        for (std::size_t b = 0; b < cls.size(); ++b) {
          const Plain& h = cls[b];
          if (!oracle::is_reduction(h, g) || oracle::product(h.strategies).size() == profiles.size()) continue;
          if (!oracle::in_space(h, s)) continue;
          any = true;
          all_in = all_in && sol[b].count(s) > 0;
        }
        if (any && all_in) r.ciis = false;
      }
    }
  }
  return r;
}

std::vector<LabeledSet> solutions(const GameClass& cls, const SolutionTable& t) {
  std::vector<LabeledSet> out;
  for (std::size_t k = 0; k < cls.size(); ++k) out.push_back(oracle::labeled(cls.game(k), t[k]));
  return out;
}

// Deterministic pseudo-random concept: keeps a profile when a hash of the
// game and the profile is odd.
SolutionTable hashed_concept(const GameClass& cls, std::uint64_t salt) {
  std::vector<ProfileSet> sets;
  for (const Game& g : cls.games()) {
    ProfileSet set;
    for (std::size_t s = 0; s < g.num_profiles(); ++s) {
      const auto h = std::hash<std::string>{}(g.id() + g.format_profile(s) + std::to_string(salt));
      if (h % 3 != 0) set.push_back(s);
    }
    sets.push_back(set);
  }
  return SolutionTable({ConceptId::all_profiles}, sets);
}

bool verdict(Axiom axiom, ConceptId id, std::string_view cls_name) {
  return check_axiom(axiom, {id}, build_named_class(cls_name)).violated;
}

TEST(AxiomsTest, ExampleVerdicts) {
  EXPECT_FALSE(verdict(Axiom::iis, ConceptId::nash, "ex2_dclosed"));
  EXPECT_TRUE(verdict(Axiom::iis, ConceptId::ne_indifference_closure, "ex2_dclosed"));
  EXPECT_FALSE(verdict(Axiom::iis, ConceptId::empty, "ex2_dclosed"));
  EXPECT_TRUE(verdict(Axiom::mc, ConceptId::strong_nash, "ex2_dclosed"));
  EXPECT_FALSE(verdict(Axiom::mc, ConceptId::nash, "ex5_dclosed"));
  EXPECT_TRUE(verdict(Axiom::mc, ConceptId::ex5_phi, "ex5"));
  EXPECT_TRUE(verdict(Axiom::isds, ConceptId::all_profiles, "pd_dclosed"));
  EXPECT_FALSE(verdict(Axiom::isds, ConceptId::nash, "pd_dclosed"));
  EXPECT_FALSE(verdict(Axiom::isds, ConceptId::empty, "pd_dclosed"));
  EXPECT_TRUE(verdict(Axiom::jo, ConceptId::empty, "pd_dclosed"));
  EXPECT_FALSE(verdict(Axiom::jo, ConceptId::all_profiles, "pd_dclosed"));
  EXPECT_FALSE(verdict(Axiom::jo, ConceptId::nash, "ex5_dclosed"));
  EXPECT_TRUE(verdict(Axiom::cons, ConceptId::parity_ne, "ex3_cons"));
  EXPECT_TRUE(verdict(Axiom::cocons, ConceptId::ex4_phi, "ex4"));
  EXPECT_FALSE(verdict(Axiom::mc, ConceptId::ex4_phi, "ex4"));
  EXPECT_FALSE(verdict(Axiom::ciis, ConceptId::ex5_phi, "ex5"));
}

TEST(AxiomsTest, StrongNashMcWitness) {
  const GameClass cls = build_named_class("ex2_dclosed");
  const AxiomVerdict v = check_mc({ConceptId::strong_nash}, cls);
  ASSERT_TRUE(v.violated);
  const Witness& w = *v.witness;
  EXPECT_EQ(w.profiles, (std::vector<LabeledProfile>{{"D", "R"}}));
  EXPECT_EQ(w.games.front().id, fixtures::coordination_2x2().id());
  ASSERT_EQ(w.subsets.size(), 2u);
  std::set<std::vector<Labels>> spaces = {w.subsets[0].strategies, w.subsets[1].strategies};
  EXPECT_EQ(spaces, (std::set<std::vector<Labels>>{{{"U", "D"}, {"R"}}, {{"D"}, {"L", "R"}}}));
  EXPECT_TRUE(replay_witness(v, {ConceptId::strong_nash}, cls));
}

TEST(AxiomsTest, StrongNashMcWitnessIsUnique) {
  // Every (G', G'', s) triple the definition admits, by brute force.
  const GameClass cls = build_named_class("ex2_dclosed");
  const auto games = plains(cls);
  std::vector<LabeledSet> sol;
  for (const auto& g : games) sol.push_back(oracle::strong_nash(g));
  std::set<std::pair<std::set<std::vector<std::vector<std::string>>>, Labeled>> found;
  for (std::size_t a = 0; a < games.size(); ++a) {
    for (std::size_t b = 0; b < games.size(); ++b) {
      for (std::size_t c = 0; c < games.size(); ++c) {
        if (!oracle::is_reduction(games[b], games[a]) || !oracle::is_reduction(games[c], games[a])) continue;
        if (!oracle::covers(games[b], games[c], games[a])) continue;
        for (const auto& s : sol[b]) {
          if (sol[c].count(s) && !sol[a].count(s)) {
            found.insert({{games[b].strategies, games[c].strategies}, s});
          }
        }
      }
    }
  }
  ASSERT_EQ(found.size(), 1u);
  EXPECT_EQ(found.begin()->second, (Labeled{"D", "R"}));
}

TEST(AxiomsTest, IndifferenceClosureIisWitness) {
  const GameClass cls = build_named_class("ex2_dclosed");
  const ConceptSpec spec{ConceptId::ne_indifference_closure};
  const AxiomVerdict v = check_iis(spec, cls);
  ASSERT_TRUE(v.violated);
  EXPECT_EQ(v.witness->profiles, (std::vector<LabeledProfile>{{"D", "L"}}));
  ASSERT_EQ(v.witness->subsets.size(), 1u);
  EXPECT_EQ(v.witness->subsets[0].strategies, (std::vector<Labels>{{"U", "D"}, {"L"}}));
  EXPECT_TRUE(replay_witness(v, spec, cls));
  EXPECT_FALSE(check_mc(spec, cls).violated);
  EXPECT_FALSE(check_isds(spec, cls).violated);
  EXPECT_FALSE(check_jo(spec, cls).violated);
}

TEST(AxiomsTest, JoWitnessOnPrisonersDilemma) {
  const GameClass cls = build_named_class("pd_dclosed");
  const AxiomVerdict v = check_jo({ConceptId::empty}, cls);
  ASSERT_TRUE(v.violated);
  EXPECT_EQ(v.witness->games.front().id, fixtures::prisoners_dilemma().id());
  EXPECT_EQ(v.witness->profiles, (std::vector<LabeledProfile>{{"D", "D"}}));
}

TEST(AxiomsTest, ConsWitnessOnParity) {
  const GameClass cls = build_named_class("ex3_cons");
  const AxiomVerdict v = check_literature_axiom(Axiom::cons, {ConceptId::parity_ne}, cls);
  ASSERT_TRUE(v.violated);
  EXPECT_EQ(v.witness->profiles, (std::vector<LabeledProfile>{{"U", "L"}}));
  EXPECT_FALSE(v.coverage.empty());
  EXPECT_TRUE(replay_witness(v, {ConceptId::parity_ne}, cls));
  EXPECT_THROW(check_literature_axiom(Axiom::mc, {ConceptId::nash}, cls), Error);
}

TEST(AxiomsTest, DomainErrorPropagates) {
  const GameClass cls = build_named_class("three_player_dclosed");
  EXPECT_THROW(check_mc({ConceptId::ex4_phi}, cls), DomainError);
}

TEST(AxiomsTest, ScansAgreeWithNaiveOracleOnNamedClasses) {
  for (std::string_view name : named_classes()) {
    const GameClass cls = build_named_class(name);
    const ClassAnalysis analysis(cls);
    const auto games = plains(cls);
    for (ConceptId id : registered_concepts()) {
      std::optional<SolutionTable> table;
      try {
        table.emplace(cls, ConceptSpec{id});
      } catch (const DomainError&) {
        continue;
      }
      const auto sol = solutions(cls, *table);
      const auto expect = oracle::check_axioms(games, [&](const Plain& p) {
        for (std::size_t k = 0; k < games.size(); ++k) {
          if (same_game(games[k], p)) return sol[k];
        }
        return LabeledSet{};
      });
      const Literature lit = check_literature(games, sol);
      const std::string tag = std::string(name) + " " + std::string(to_string(id));
      EXPECT_EQ(check(Axiom::iis, analysis, *table).passed(), expect.iis) << tag;
      EXPECT_EQ(check(Axiom::mc, analysis, *table).passed(), expect.mc) << tag;
      EXPECT_EQ(check(Axiom::isds, analysis, *table).passed(), expect.isds) << tag;
      EXPECT_EQ(check(Axiom::jo, analysis, *table).passed(), expect.jo) << tag;
      EXPECT_EQ(check(Axiom::cons, analysis, *table).passed(), lit.cons) << tag;
      EXPECT_EQ(check(Axiom::cocons, analysis, *table).passed(), lit.cocons) << tag;
      EXPECT_EQ(check(Axiom::ciis, analysis, *table).passed(), lit.ciis) << tag;
    }
  }
}

TEST(AxiomsPropertyTest, ScansAgreeWithNaiveOracleOnRandomClasses) {
  std::mt19937_64 rng(61);
  std::size_t violations = 0;
  for (std::size_t it = 0; it < 120; ++it) {
    const Game g = oracle::random_game(rng, 2, 3, 2);
    const Game seeds[] = {g};
    const GameClass cls = it % 2 == 0 ? d_closure(seeds) : reduction_closure(g);
    const ClassAnalysis analysis(cls);
    const auto games = plains(cls);
    const SolutionTable table = hashed_concept(cls, it);
    const auto sol = solutions(cls, table);
    const auto expect = oracle::check_axioms(games, [&](const Plain& p) {
      for (std::size_t k = 0; k < games.size(); ++k) {
        if (same_game(games[k], p)) return sol[k];
      }
      return LabeledSet{};
    });
    const Literature lit = check_literature(games, sol);
    const bool got[] = {check(Axiom::iis, analysis, table).passed(), check(Axiom::mc, analysis, table).passed(),
                        check(Axiom::isds, analysis, table).passed(), check(Axiom::jo, analysis, table).passed(),
                        check(Axiom::ciis, analysis, table).passed()};
    const bool want[] = {expect.iis, expect.mc, expect.isds, expect.jo, lit.ciis};
    for (std::size_t a = 0; a < 5; ++a) {
      ASSERT_EQ(got[a], want[a]) << "axiom " << a << " class of " << g.id();
      violations += got[a] ? 0 : 1;
    }
  }
  EXPECT_GT(violations, 100u);
}

TEST(AxiomsPropertyTest, RandomClassesNashAndReplay) {
  std::mt19937_64 rng(62);
  for (std::size_t it = 0; it < 60; ++it) {
    const Game g = oracle::random_game(rng, 3, 2, 2);
    const Game seeds[] = {g};
    const GameClass cls = d_closure(seeds);
    const ClassAnalysis analysis(cls);
    for (ConceptId id : registered_concepts()) {
      std::optional<SolutionTable> table;
      try {
        table.emplace(cls, ConceptSpec{id});
      } catch (const DomainError&) {
        continue;
      }
      for (Axiom a : {Axiom::iis, Axiom::mc, Axiom::isds, Axiom::jo, Axiom::cons, Axiom::cocons, Axiom::ciis}) {
        const AxiomVerdict v = check(a, analysis, *table);
        if (id == ConceptId::nash && !is_literature_axiom(a)) ASSERT_FALSE(v.violated) << g.id();
        if (v.violated) ASSERT_TRUE(replay_witness(v, {id}, cls)) << to_string(a) << " " << to_string(id);
      }
      if (!check(Axiom::mc, analysis, *table).violated) {
        ASSERT_FALSE(check(Axiom::ciis, analysis, *table).violated) << to_string(id) << " " << g.id();
      }
    }
  }
}

TEST(AxiomsTest, ReplayRejectsTamperedWitness) {
  const GameClass cls = build_named_class("ex2_dclosed");
  AxiomVerdict v = check_mc({ConceptId::strong_nash}, cls);
  ASSERT_TRUE(replay_witness(v, {ConceptId::strong_nash}, cls));
  v.witness->profiles = {{"U", "L"}};
  EXPECT_FALSE(replay_witness(v, {ConceptId::strong_nash}, cls));
  EXPECT_FALSE(replay_witness(check_mc({ConceptId::nash}, cls), {ConceptId::nash}, cls));
}

TEST(AxiomsTest, VerdictsIndependentOfJobs) {
  for (std::string_view name : named_classes()) {
    const GameClass cls = build_named_class(name);
    for (ConceptId id : registered_concepts()) {
      for (Axiom a : {Axiom::iis, Axiom::mc, Axiom::isds, Axiom::jo, Axiom::cons, Axiom::cocons, Axiom::ciis}) {
        AxiomVerdict one, four;
        try {
          one = check_axiom(a, {id}, cls, {1});
          four = check_axiom(a, {id}, cls, {4});
        } catch (const DomainError&) {
          continue;
        }
        EXPECT_EQ(verdict_to_json(one, name).dump(), verdict_to_json(four, name).dump());
      }
    }
  }
}

TEST(AxiomsTest, VerdictJsonFields) {
  const GameClass cls = build_named_class("ex2_dclosed");
  const auto j = verdict_to_json(check_mc({ConceptId::strong_nash}, cls), "ex2_dclosed");
  EXPECT_EQ(j.at("axiom"), "mc");
  EXPECT_EQ(j.at("concept"), "strong_nash");
  EXPECT_EQ(j.at("class"), "ex2_dclosed");
  EXPECT_EQ(j.at("result"), "violated");
  EXPECT_TRUE(j.at("witness").is_object());
  EXPECT_TRUE(j.at("coverage").is_array());
  const auto pass = verdict_to_json(check_mc({ConceptId::nash}, cls), "ex2_dclosed");
  EXPECT_TRUE(pass.at("witness").is_null());
  EXPECT_NE(format_verdict(check_mc({ConceptId::strong_nash}, cls), cls).find("s=(D,R)"), std::string::npos);
}

}  // namespace
}  // namespace nashax
