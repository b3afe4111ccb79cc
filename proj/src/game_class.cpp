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


#include "nashax/game_class.hpp"

#include <algorithm>

#include "nashax/content_hash.hpp"

namespace nashax {

std::string_view to_string(Origin origin) {
  switch (origin) {
    case Origin::seed: return "seed";
    case Origin::dummy_reduction: return "dummy-reduction";
    case Origin::strict_reduction: return "strict-reduction";
    case Origin::player_reduction: return "player-reduction";
    case Origin::reduction: return "reduction";
  }
  return "?";
}

std::optional<Origin> parse_origin(std::string_view name) {
  for (Origin o : {Origin::seed, Origin::dummy_reduction, Origin::strict_reduction,
                   Origin::player_reduction, Origin::reduction}) {
    if (to_string(o) == name) return o;
  }
  return std::nullopt;
}

Provenance Provenance::reduction_of(Origin origin, const Game& parent, SubsetSpec subsets) {
  Provenance p;
  p.origin = origin;
  p.parent = parent.id();
  p.subsets = std::move(subsets);
  return p;
}

Provenance Provenance::player_reduction_of(const Game& parent, std::vector<std::size_t> keep,
                                           Profile fixed) {
  Provenance p;
  p.origin = Origin::player_reduction;
  p.parent = parent.id();
  p.kept_players = std::move(keep);
  p.fixed = std::move(fixed);
  return p;
}

bool GameClass::insert(Game game, Provenance provenance) {
  auto [it, fresh] = index_.try_emplace(game.id(), games_.size());
  if (!fresh) {
    if (!(games_[it->second] == game)) {
      throw Error("canonical id collision on " + game.id());
    }
    return false;
  }
  games_.push_back(std::move(game));
  provenance_.push_back(std::move(provenance));
  return true;
}

std::optional<std::size_t> GameClass::find(const std::string& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::string GameClass::id() const {
  std::vector<std::string> ids;
  ids.reserve(games_.size());
  for (const auto& g : games_) ids.push_back(g.id());
  std::sort(ids.begin(), ids.end());
  ContentHash h;
  h.add(static_cast<std::uint64_t>(ids.size()));
  for (const auto& id : ids) h.add(id);
  return h.hex();
}

Game replay_provenance(const GameClass& cls, std::size_t k) {
  const Provenance& prov = cls.provenance(k);
  if (prov.origin == Origin::seed) return cls.game(k);
  auto parent = cls.find(prov.parent);
  if (!parent) throw GameError("provenance parent " + prov.parent + " is not in the class");
  const Game& g = cls.game(*parent);
  if (prov.origin == Origin::player_reduction) {
    if (!prov.fixed) throw GameError("player reduction without a fixed profile");
    return reduce_players(g, prov.kept_players, *prov.fixed);
  }
  if (!prov.subsets) throw GameError("reduction provenance without a subset spec");
  return restrict(g, *prov.subsets);
}

}  // namespace nashax
