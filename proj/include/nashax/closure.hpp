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
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nashax/enumerate.hpp"
#include "nashax/game_class.hpp"

namespace nashax {

struct ClosureOptions {
  std::size_t budget = kDefaultBudget;  // maximum class size
  std::size_t jobs = 1;
};

// Least fixpoints. Seeds come first (sorted by id), then one breadth-first
// level at a time, each level sorted by canonical id. A game's provenance is
// the first (parent, spec) pair that produced it in frontier order.
GameClass d_closure(std::span<const Game> seeds, const ClosureOptions& options = {});
GameClass strict_closure(std::span<const Game> seeds, const ClosureOptions& options = {});
// The seed and every reduction of it.
GameClass reduction_closure(const Game& seed, const ClosureOptions& options = {});

// Named classes:
//   pd_dclosed     d_closure({prisoners_dilemma})
//   ex2_dclosed    d_closure({coordination_2x2})
//   ex3_cons       coordination_2x2 and its one-player player-reductions
//   ex4            coordination_2x2, all its reductions, and the one-player
//                  player-reductions
//   ex5            reduction_closure(three_by_two)
//   ex5_dclosed    d_closure({three_by_two})
//   three_player_dclosed  d_closure({three_player})
//   chain_strict   strict_closure({one_player_chain})
GameClass build_named_class(std::string_view name, const ClosureOptions& options = {});
std::span<const std::string_view> named_classes();

// First (game index, subset spec) whose restriction is a reduction of the
// matching flavor that the class lacks.
std::optional<std::pair<std::size_t, SubsetSpec>> find_closure_gap(const GameClass& cls,
                                                                   ReductionFilter filter);
bool is_d_closed(const GameClass& cls);
bool is_strictly_closed(const GameClass& cls);

}  // namespace nashax
