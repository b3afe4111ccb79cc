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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nashax/errors.hpp"

namespace nashax {

// Ordinal rank of a profile for one player. Lower is strictly better, equal
// ranks are indifferent. Stored dense: the used values are {0, 1, ..., k}.
using Rank = std::uint32_t;

using Labels = std::vector<std::string>;
using LabeledProfile = std::vector<std::string>;

// One strategy index per player. Player 0 is the most significant digit of
// the linear index.
struct Profile {
  std::vector<std::size_t> indices;

  friend auto operator<=>(const Profile&, const Profile&) = default;
};

// A finite normal-form game with ordinal preferences.
//
// Preferences are held as one rank table per player, indexed by the linear
// profile index. Completeness and transitivity hold by construction. Games
// are immutable; equality is structural and agrees with id().
class Game {
 public:
  // Validates shapes and labels, then dense-normalizes every rank table.
  Game(std::vector<Labels> strategies, std::vector<std::vector<Rank>> ranks);

  std::size_t num_players() const { return strategies_.size(); }
  const Labels& strategies(std::size_t player) const;
  std::size_t num_strategies(std::size_t player) const;
  std::size_t num_profiles() const { return num_profiles_; }

  Rank rank(std::size_t player, std::size_t profile) const {
    return ranks_[player][profile];
  }
  std::span<const Rank> ranks(std::size_t player) const { return ranks_[player]; }

  bool weakly_prefers(std::size_t player, std::size_t a, std::size_t b) const {
    return rank(player, a) <= rank(player, b);
  }
  bool strictly_prefers(std::size_t player, std::size_t a, std::size_t b) const {
    return rank(player, a) < rank(player, b);
  }
  bool indifferent(std::size_t player, std::size_t a, std::size_t b) const {
    return rank(player, a) == rank(player, b);
  }

  // Mixed-radix encoding: ((i1 * |S2| + i2) * |S3| + ...).
  std::size_t linear_index(std::span<const std::size_t> indices) const;
  std::size_t linear_index(const Profile& p) const { return linear_index(p.indices); }
  Profile profile_at(std::size_t linear) const;
  std::size_t stride(std::size_t player) const { return strides_[player]; }
  // Strategy index of `player` inside the profile with the given linear index.
  std::size_t component(std::size_t linear, std::size_t player) const {
    return (linear / strides_[player]) % strategies_[player].size();
  }

  std::optional<std::size_t> strategy_index(std::size_t player,
                                            const std::string& label) const;
  std::optional<std::size_t> find_profile(const LabeledProfile& labels) const;
  LabeledProfile labels_of(std::size_t linear) const;
  // "(U,L)"
  std::string format_profile(std::size_t linear) const;

  // Hex content hash over player count, labels and normalized ranks.
  const std::string& id() const { return id_; }

  friend bool operator==(const Game& a, const Game& b) {
    return a.strategies_ == b.strategies_ && a.ranks_ == b.ranks_;
  }

 private:
  std::vector<Labels> strategies_;
  std::vector<std::vector<Rank>> ranks_;
  std::vector<std::size_t> strides_;
  std::size_t num_profiles_ = 0;
  std::string id_;
};

// Dense-normalizes a rank table in place (smallest value becomes 0, ...).
void normalize_ranks(std::vector<Rank>& ranks);

Game build_game_from_ranks(std::size_t player_count, std::vector<Labels> strategies,
                           std::vector<std::vector<Rank>> ranks);

// Higher payoff maps to a lower rank; the numeric values are discarded.
Game build_game_from_payoffs(std::size_t player_count, std::vector<Labels> strategies,
                             const std::vector<std::vector<double>>& payoffs);

// Per-player non-empty subsets of strategy indices, kept sorted ascending.
struct SubsetSpec {
  std::vector<std::vector<std::size_t>> kept;

  static SubsetSpec full(const Game& g);
  // Sorts and deduplicates each list; does not validate against a game.
  static SubsetSpec from_indices(std::vector<std::vector<std::size_t>> kept);
  static SubsetSpec from_labels(const Game& g, const std::vector<Labels>& labels);

  std::size_t size(std::size_t player) const { return kept[player].size(); }
  bool contains(std::size_t player, std::size_t strategy) const;

  friend bool operator==(const SubsetSpec&, const SubsetSpec&) = default;
};

// Throws GameError unless every player subset is non-empty and in range.
void validate(const SubsetSpec& subsets, const Game& parent);
bool is_full(const SubsetSpec& subsets, const Game& parent);
SubsetSpec join(const SubsetSpec& a, const SubsetSpec& b);
std::vector<Labels> labels_of(const SubsetSpec& subsets, const Game& parent);
// Whether the parent profile lies inside the restricted profile space.
bool contains_profile(const SubsetSpec& subsets, const Game& parent, std::size_t linear);
// Linear index in restrict(parent, subsets) of a parent profile it contains.
std::size_t child_index(const SubsetSpec& subsets, const Game& parent, std::size_t linear);
// Linear index in the parent of a child profile.
std::size_t parent_index(const SubsetSpec& subsets, const Game& parent,
                         const Game& child, std::size_t child_linear);

Game restrict(const Game& parent, const SubsetSpec& subsets);

// The subset spec that maps `candidate` into `parent`, when candidate is a
// reduction of parent (labels matched exactly, order preserved).
std::optional<SubsetSpec> reduction_spec(const Game& candidate, const Game& parent);
bool is_reduction(const Game& candidate, const Game& parent);

enum class ReductionFlavor { plain, dummy, quasi_dummy, dummy_and_quasi };

const char* to_string(ReductionFlavor f);
ReductionFlavor reduction_flavor(const Game& parent, const SubsetSpec& subsets);
inline bool has_dummy_or_quasi(ReductionFlavor f) { return f != ReductionFlavor::plain; }

// a strictly beats b for `player` against every opponent sub-profile of g.
bool strictly_dominates(const Game& g, std::size_t player, std::size_t a, std::size_t b);

// dominates[a][b] == strictly_dominates(g, player, a, b).
std::vector<std::vector<bool>> dominance_table(const Game& g, std::size_t player);

// True when restrict(parent, subsets) is a strict reduction of parent.
bool is_strict_subset(const Game& parent, const SubsetSpec& subsets);
bool is_strict_reduction(const Game& candidate, const Game& parent);

Game merge(const Game& parent, const SubsetSpec& a, const SubsetSpec& b);

// Players outside `keep` leave the game committed to their component of
// `fixed`. keep holds 0-based player indices and must be a non-empty proper
// subset.
Game reduce_players(const Game& g, std::span<const std::size_t> keep, const Profile& fixed);

}  // namespace nashax
