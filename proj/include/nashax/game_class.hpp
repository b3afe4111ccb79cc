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

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "nashax/game.hpp"

namespace nashax {

enum class Origin { seed, dummy_reduction, strict_reduction, player_reduction, reduction };

std::string_view to_string(Origin origin);
std::optional<Origin> parse_origin(std::string_view name);

// How a game entered a class. Non-seed records name their parent by
// canonical id together with the arguments that regenerate the game.
struct Provenance {
  Origin origin = Origin::seed;
  std::string parent;
  std::optional<SubsetSpec> subsets;       // reductions
  std::vector<std::size_t> kept_players;   // player reductions, 0-based
  std::optional<Profile> fixed;            // player reductions

  static Provenance seed() { return {}; }
  static Provenance reduction_of(Origin origin, const Game& parent, SubsetSpec subsets);
  static Provenance player_reduction_of(const Game& parent, std::vector<std::size_t> keep,
                                        Profile fixed);
};

// A finite set of games, deduplicated by canonical id, in insertion order.
class GameClass {
 public:
  // Returns false and leaves the class unchanged when the game is present.
  bool insert(Game game, Provenance provenance);

  std::size_t size() const { return games_.size(); }
  bool empty() const { return games_.empty(); }
  const Game& game(std::size_t k) const { return games_[k]; }
  const Provenance& provenance(std::size_t k) const { return provenance_[k]; }
  const std::vector<Game>& games() const { return games_; }

  std::optional<std::size_t> find(const std::string& id) const;
  bool contains(const Game& g) const { return find(g.id()).has_value(); }

  // Content hash over the set of member ids (insertion order ignored).
  std::string id() const;

  // Free-form closure parameters, written into the class manifest.
  std::map<std::string, std::string> params;

 private:
  std::vector<Game> games_;
  std::vector<Provenance> provenance_;
  std::unordered_map<std::string, std::size_t> index_;
};

// Regenerates member k from its provenance record. Throws GameError if the
// parent is missing from the class; seeds return themselves.
Game replay_provenance(const GameClass& cls, std::size_t k);

}  // namespace nashax
