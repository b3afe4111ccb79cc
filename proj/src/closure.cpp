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


#include "nashax/closure.hpp"

#include <algorithm>
#include <array>
#include <map>

#include "nashax/fixtures.hpp"
#include "nashax/parallel.hpp"

namespace nashax {

namespace {

struct Child {
  Game game;
  Provenance provenance;
};

void check_budget(std::size_t size, std::size_t frontier, std::size_t budget) {
  if (size > budget) {
    throw BudgetExceeded("closure exceeded the budget of " + std::to_string(budget) +
                         " games with a frontier of " + std::to_string(frontier) + " games");
  }
}

// Adds `batch` sorted by id, skipping games already present. Returns the
// indices of the new members.
std::vector<std::size_t> add_level(GameClass& cls, std::map<std::string, Child> batch,
                                   std::size_t budget) {
  std::vector<std::size_t> added;
  check_budget(cls.size() + batch.size(), batch.size(), budget);
  for (auto& [id, child] : batch) {
    if (cls.insert(std::move(child.game), std::move(child.provenance))) {
      added.push_back(cls.size() - 1);
    }
  }
  return added;
}

GameClass fixpoint(std::span<const Game> seeds, ReductionFilter filter, Origin origin,
                   const ClosureOptions& options) {
  if (seeds.empty()) throw GameError("a closure needs at least one seed");
  GameClass cls;
  std::map<std::string, Child> level;
  for (const auto& g : seeds) level.try_emplace(g.id(), Child{g, Provenance::seed()});
  std::vector<std::size_t> frontier = add_level(cls, std::move(level), options.budget);

  while (!frontier.empty()) {
    std::vector<std::vector<Child>> children(frontier.size());
    parallel_for(frontier.size(), options.jobs, [&](std::size_t k) {
      const Game& parent = cls.game(frontier[k]);
      ReductionEnumerator specs(parent, filter, options.budget);
      while (auto spec = specs.next()) {
        Game child = restrict(parent, *spec);
        if (child == parent) continue;
        children[k].push_back(
            Child{std::move(child), Provenance::reduction_of(origin, parent, std::move(*spec))});
      }
    });
    std::map<std::string, Child> next;
    for (auto& list : children) {
      for (auto& child : list) {
        if (cls.contains(child.game)) continue;
        const std::string id = child.game.id();
        next.try_emplace(id, std::move(child));
      }
      check_budget(cls.size() + next.size(), next.size(), options.budget);
    }
    frontier = add_level(cls, std::move(next), options.budget);
  }
  return cls;
}

void add_player_reductions(const Game& g, std::map<std::string, Child>& out) {
  const std::size_t n = g.num_players();
  for (std::size_t mask = 1; mask + 1 < (std::size_t{1} << n); ++mask) {
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1) keep.push_back(i);
    }
    for (std::size_t p = 0; p < g.num_profiles(); ++p) {
      Profile fixed = g.profile_at(p);
      Game reduced = reduce_players(g, keep, fixed);
      const std::string id = reduced.id();
      out.try_emplace(id, Child{std::move(reduced),
                                Provenance::player_reduction_of(g, keep, std::move(fixed))});
    }
  }
}

constexpr std::array<std::string_view, 8> kNamedClasses = {
    "pd_dclosed", "ex2_dclosed", "ex3_cons",    "ex4",
    "ex5",        "ex5_dclosed", "three_player_dclosed", "chain_strict",
};

}  // namespace

GameClass d_closure(std::span<const Game> seeds, const ClosureOptions& options) {
  GameClass cls = fixpoint(seeds, ReductionFilter::dummy_or_quasi, Origin::dummy_reduction, options);
  cls.params["mode"] = "d";
  return cls;
}

GameClass strict_closure(std::span<const Game> seeds, const ClosureOptions& options) {
  GameClass cls = fixpoint(seeds, ReductionFilter::strict, Origin::strict_reduction, options);
  cls.params["mode"] = "strict";
  return cls;
}

GameClass reduction_closure(const Game& seed, const ClosureOptions& options) {
  GameClass cls;
  cls.insert(seed, Provenance::seed());
  std::map<std::string, Child> level;
  ReductionEnumerator specs(seed, ReductionFilter::all, options.budget);
  while (auto spec = specs.next()) {
    Game child = restrict(seed, *spec);
    if (child == seed) continue;
    const std::string id = child.id();
    level.try_emplace(id, Child{std::move(child), Provenance::reduction_of(Origin::reduction, seed,
                                                                           std::move(*spec))});
  }
  add_level(cls, std::move(level), options.budget);
  cls.params["mode"] = "reductions";
  return cls;
}

std::span<const std::string_view> named_classes() { return kNamedClasses; }

GameClass build_named_class(std::string_view name, const ClosureOptions& options) {
  GameClass cls;
  if (name == "pd_dclosed") {
    const Game seeds[] = {fixtures::prisoners_dilemma()};
    cls = d_closure(seeds, options);
  } else if (name == "ex2_dclosed") {
    const Game seeds[] = {fixtures::coordination_2x2()};
    cls = d_closure(seeds, options);
  } else if (name == "ex3_cons") {
    const Game g = fixtures::coordination_2x2();
    cls.insert(g, Provenance::seed());
    std::map<std::string, Child> level;
    add_player_reductions(g, level);
    add_level(cls, std::move(level), options.budget);
    cls.params["mode"] = "player-reductions";
  } else if (name == "ex4") {
    const Game g = fixtures::coordination_2x2();
    cls = reduction_closure(g, options);
    std::map<std::string, Child> level;
    add_player_reductions(g, level);
    add_level(cls, std::move(level), options.budget);
    cls.params["mode"] = "reductions+player-reductions";
  } else if (name == "ex5") {
    cls = reduction_closure(fixtures::three_by_two(), options);
  } else if (name == "ex5_dclosed") {
    const Game seeds[] = {fixtures::three_by_two()};
    cls = d_closure(seeds, options);
  } else if (name == "three_player_dclosed") {
    const Game seeds[] = {fixtures::three_player()};
    cls = d_closure(seeds, options);
  } else if (name == "chain_strict") {
    const Game seeds[] = {fixtures::one_player_chain()};
    cls = strict_closure(seeds, options);
  } else {
    throw Error("unknown class name '" + std::string(name) + "'");
  }
  cls.params["name"] = std::string(name);
  return cls;
}

std::optional<std::pair<std::size_t, SubsetSpec>> find_closure_gap(const GameClass& cls,
                                                                   ReductionFilter filter) {
  for (std::size_t k = 0; k < cls.size(); ++k) {
    const Game& g = cls.game(k);
    for (auto& spec : enumerate_reductions(g, filter, SIZE_MAX)) {
      if (!cls.contains(restrict(g, spec))) return std::make_pair(k, std::move(spec));
    }
  }
  return std::nullopt;
}

bool is_d_closed(const GameClass& cls) {
  return !find_closure_gap(cls, ReductionFilter::dummy_or_quasi);
}

bool is_strictly_closed(const GameClass& cls) {
  return !find_closure_gap(cls, ReductionFilter::strict);
}

}  // namespace nashax
