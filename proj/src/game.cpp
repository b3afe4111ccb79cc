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


#include "nashax/game.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>

#include "nashax/content_hash.hpp"

namespace nashax {

std::string ContentHash::hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out(16, '0');
  std::uint64_t v = state_;
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = kDigits[v & 0xf];
    v >>= 4;
  }
  return out;
}

void normalize_ranks(std::vector<Rank>& ranks) {
  std::vector<Rank> used(ranks);
  std::sort(used.begin(), used.end());
  used.erase(std::unique(used.begin(), used.end()), used.end());
  for (Rank& r : ranks) {
    r = static_cast<Rank>(std::lower_bound(used.begin(), used.end(), r) - used.begin());
  }
}

Game::Game(std::vector<Labels> strategies, std::vector<std::vector<Rank>> ranks)
    : strategies_(std::move(strategies)), ranks_(std::move(ranks)) {
  if (strategies_.empty()) throw GameError("a game needs at least one player");
  if (ranks_.size() != strategies_.size()) {
    throw GameError("expected " + std::to_string(strategies_.size()) +
                    " rank tables, got " + std::to_string(ranks_.size()));
  }
  num_profiles_ = 1;
  for (std::size_t i = 0; i < strategies_.size(); ++i) {
    const Labels& labels = strategies_[i];
    if (labels.empty()) {
      throw GameError("player " + std::to_string(i + 1) + " has an empty strategy list");
    }
    std::set<std::string> seen;
    for (const auto& l : labels) {
      if (!seen.insert(l).second) {
        throw GameError("player " + std::to_string(i + 1) + " has duplicate label '" + l + "'");
      }
    }
    num_profiles_ *= labels.size();
  }
  strides_.assign(strategies_.size(), 1);
  for (std::size_t i = strategies_.size() - 1; i > 0; --i) {
    strides_[i - 1] = strides_[i] * strategies_[i].size();
  }
  for (std::size_t i = 0; i < ranks_.size(); ++i) {
    if (ranks_[i].size() != num_profiles_) {
      throw GameError("rank table of player " + std::to_string(i + 1) + " has " +
                      std::to_string(ranks_[i].size()) + " entries, expected " +
                      std::to_string(num_profiles_));
    }
    normalize_ranks(ranks_[i]);
  }

  ContentHash h;
  h.add(static_cast<std::uint64_t>(strategies_.size()));
  for (const auto& labels : strategies_) {
    h.add(static_cast<std::uint64_t>(labels.size()));
    for (const auto& l : labels) h.add(l);
  }
  for (const auto& table : ranks_) {
    for (Rank r : table) h.add(static_cast<std::uint64_t>(r));
  }
  id_ = h.hex();
}

const Labels& Game::strategies(std::size_t player) const {
  if (player >= strategies_.size()) throw GameError("player index out of range");
  return strategies_[player];
}

std::size_t Game::num_strategies(std::size_t player) const {
  return strategies(player).size();
}

std::size_t Game::linear_index(std::span<const std::size_t> indices) const {
  if (indices.size() != strategies_.size()) {
    throw GameError("profile has " + std::to_string(indices.size()) + " entries for a " +
                    std::to_string(strategies_.size()) + "-player game");
  }
  std::size_t linear = 0;
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (indices[i] >= strategies_[i].size()) {
      throw GameError("strategy index out of range for player " + std::to_string(i + 1));
    }
    linear += indices[i] * strides_[i];
  }
  return linear;
}

Profile Game::profile_at(std::size_t linear) const {
  if (linear >= num_profiles_) throw GameError("profile index out of range");
  Profile p;
  p.indices.resize(strategies_.size());
  for (std::size_t i = 0; i < strategies_.size(); ++i) p.indices[i] = component(linear, i);
  return p;
}

std::optional<std::size_t> Game::strategy_index(std::size_t player,
                                                const std::string& label) const {
  const Labels& labels = strategies(player);
  auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels.begin());
}

std::optional<std::size_t> Game::find_profile(const LabeledProfile& labels) const {
  if (labels.size() != strategies_.size()) return std::nullopt;
  std::size_t linear = 0;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    auto idx = strategy_index(i, labels[i]);
    if (!idx) return std::nullopt;
    linear += *idx * strides_[i];
  }
  return linear;
}

LabeledProfile Game::labels_of(std::size_t linear) const {
  LabeledProfile out(strategies_.size());
  for (std::size_t i = 0; i < strategies_.size(); ++i) {
    out[i] = strategies_[i][component(linear, i)];
  }
  return out;
}

std::string Game::format_profile(std::size_t linear) const {
  std::string out = "(";
  for (std::size_t i = 0; i < strategies_.size(); ++i) {
    if (i) out += ',';
    out += strategies_[i][component(linear, i)];
  }
  return out + ")";
}

Game build_game_from_ranks(std::size_t player_count, std::vector<Labels> strategies,
                           std::vector<std::vector<Rank>> ranks) {
  if (player_count == 0) throw GameError("player count must be at least 1");
  if (strategies.size() != player_count) {
    throw GameError("player count is " + std::to_string(player_count) + " but " +
                    std::to_string(strategies.size()) + " strategy lists were given");
  }
  return Game(std::move(strategies), std::move(ranks));
}

Game build_game_from_payoffs(std::size_t player_count, std::vector<Labels> strategies,
                             const std::vector<std::vector<double>>& payoffs) {
  std::vector<std::vector<Rank>> ranks;
  ranks.reserve(payoffs.size());
  for (std::size_t i = 0; i < payoffs.size(); ++i) {
    std::vector<double> levels;
    for (double v : payoffs[i]) {
      if (!std::isfinite(v)) {
        throw GameError("payoff table of player " + std::to_string(i + 1) +
                        " contains a non-finite value");
      }
      levels.push_back(v);
    }
    std::sort(levels.begin(), levels.end(), std::greater<>());
    levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
    std::vector<Rank> table;
    table.reserve(payoffs[i].size());
    for (double v : payoffs[i]) {
      auto pos = std::lower_bound(levels.begin(), levels.end(), v, std::greater<>());
      table.push_back(static_cast<Rank>(pos - levels.begin()));
    }
    ranks.push_back(std::move(table));
  }
  return build_game_from_ranks(player_count, std::move(strategies), std::move(ranks));
}

// ---------------------------------------------------------------------------
// Subsets

SubsetSpec SubsetSpec::full(const Game& g) {
  SubsetSpec s;
  s.kept.resize(g.num_players());
  for (std::size_t i = 0; i < g.num_players(); ++i) {
    s.kept[i].resize(g.num_strategies(i));
    std::iota(s.kept[i].begin(), s.kept[i].end(), std::size_t{0});
  }
  return s;
}

SubsetSpec SubsetSpec::from_indices(std::vector<std::vector<std::size_t>> kept) {
  for (auto& k : kept) {
    std::sort(k.begin(), k.end());
    k.erase(std::unique(k.begin(), k.end()), k.end());
  }
  return SubsetSpec{std::move(kept)};
}

SubsetSpec SubsetSpec::from_labels(const Game& g, const std::vector<Labels>& labels) {
  if (labels.size() != g.num_players()) {
    throw GameError("subset lists do not match the player count");
  }
  std::vector<std::vector<std::size_t>> kept(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    for (const auto& l : labels[i]) {
      auto idx = g.strategy_index(i, l);
      if (!idx) throw GameError("player " + std::to_string(i + 1) + " has no strategy '" + l + "'");
      kept[i].push_back(*idx);
    }
  }
  return from_indices(std::move(kept));
}

bool SubsetSpec::contains(std::size_t player, std::size_t strategy) const {
  return std::binary_search(kept[player].begin(), kept[player].end(), strategy);
}

void validate(const SubsetSpec& subsets, const Game& parent) {
  if (subsets.kept.size() != parent.num_players()) {
    throw GameError("subset spec has " + std::to_string(subsets.kept.size()) +
                    " entries for a " + std::to_string(parent.num_players()) + "-player game");
  }
  for (std::size_t i = 0; i < subsets.kept.size(); ++i) {
    const auto& k = subsets.kept[i];
    if (k.empty()) throw GameError("empty strategy subset for player " + std::to_string(i + 1));
    for (std::size_t j = 0; j < k.size(); ++j) {
      if (k[j] >= parent.num_strategies(i)) {
        throw GameError("strategy index out of range for player " + std::to_string(i + 1));
      }
      if (j > 0 && k[j] <= k[j - 1]) {
        throw GameError("subset of player " + std::to_string(i + 1) +
                        " is not strictly ascending");
      }
    }
  }
}

bool is_full(const SubsetSpec& subsets, const Game& parent) {
  for (std::size_t i = 0; i < subsets.kept.size(); ++i) {
    if (subsets.kept[i].size() != parent.num_strategies(i)) return false;
  }
  return true;
}

SubsetSpec join(const SubsetSpec& a, const SubsetSpec& b) {
  if (a.kept.size() != b.kept.size()) throw GameError("joining subset specs of different arity");
  SubsetSpec out;
  out.kept.resize(a.kept.size());
  for (std::size_t i = 0; i < a.kept.size(); ++i) {
    std::set_union(a.kept[i].begin(), a.kept[i].end(), b.kept[i].begin(), b.kept[i].end(),
                   std::back_inserter(out.kept[i]));
  }
  return out;
}

std::vector<Labels> labels_of(const SubsetSpec& subsets, const Game& parent) {
  std::vector<Labels> out(subsets.kept.size());
  for (std::size_t i = 0; i < subsets.kept.size(); ++i) {
    for (std::size_t idx : subsets.kept[i]) out[i].push_back(parent.strategies(i)[idx]);
  }
  return out;
}

bool contains_profile(const SubsetSpec& subsets, const Game& parent, std::size_t linear) {
  for (std::size_t i = 0; i < parent.num_players(); ++i) {
    if (!subsets.contains(i, parent.component(linear, i))) return false;
  }
  return true;
}

std::size_t child_index(const SubsetSpec& subsets, const Game& parent, std::size_t linear) {
  std::size_t out = 0;
  for (std::size_t i = 0; i < parent.num_players(); ++i) {
    const auto& k = subsets.kept[i];
    auto it = std::lower_bound(k.begin(), k.end(), parent.component(linear, i));
    out = out * k.size() + static_cast<std::size_t>(it - k.begin());
  }
  return out;
}

std::size_t parent_index(const SubsetSpec& subsets, const Game& parent, const Game& child,
                         std::size_t child_linear) {
  std::size_t out = 0;
  for (std::size_t i = 0; i < parent.num_players(); ++i) {
    out += subsets.kept[i][child.component(child_linear, i)] * parent.stride(i);
  }
  return out;
}

Game restrict(const Game& parent, const SubsetSpec& subsets) {
  validate(subsets, parent);
  const std::size_t n = parent.num_players();
  std::vector<Labels> labels = labels_of(subsets, parent);
  std::size_t count = 1;
  for (const auto& k : subsets.kept) count *= k.size();

  std::vector<std::vector<Rank>> ranks(n, std::vector<Rank>(count));
  std::vector<std::size_t> digit(n, 0);
  for (std::size_t child = 0; child < count; ++child) {
    std::size_t p = 0;
    for (std::size_t i = 0; i < n; ++i) p += subsets.kept[i][digit[i]] * parent.stride(i);
    for (std::size_t i = 0; i < n; ++i) ranks[i][child] = parent.rank(i, p);
    for (std::size_t i = n; i-- > 0;) {
      if (++digit[i] < subsets.kept[i].size()) break;
      digit[i] = 0;
    }
  }
  return Game(std::move(labels), std::move(ranks));
}

std::optional<SubsetSpec> reduction_spec(const Game& candidate, const Game& parent) {
  const std::size_t n = parent.num_players();
  if (candidate.num_players() != n) return std::nullopt;
  SubsetSpec spec;
  spec.kept.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& label : candidate.strategies(i)) {
      auto idx = parent.strategy_index(i, label);
      if (!idx) return std::nullopt;
      if (!spec.kept[i].empty() && *idx <= spec.kept[i].back()) return std::nullopt;
      spec.kept[i].push_back(*idx);
    }
  }
  // Normalized restricted ranks coincide with the candidate's exactly when the
  // pairwise order agrees on every profile pair.
  std::vector<std::size_t> to_parent(candidate.num_profiles());
  for (std::size_t c = 0; c < candidate.num_profiles(); ++c) {
    to_parent[c] = parent_index(spec, parent, candidate, c);
  }
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Rank> restricted(candidate.num_profiles());
    for (std::size_t c = 0; c < candidate.num_profiles(); ++c) {
      restricted[c] = parent.rank(i, to_parent[c]);
    }
    normalize_ranks(restricted);
    if (!std::equal(restricted.begin(), restricted.end(), candidate.ranks(i).begin())) {
      return std::nullopt;
    }
  }
  return spec;
}

bool is_reduction(const Game& candidate, const Game& parent) {
  return reduction_spec(candidate, parent).has_value();
}

const char* to_string(ReductionFlavor f) {
  switch (f) {
    case ReductionFlavor::plain: return "plain";
    case ReductionFlavor::dummy: return "dummy";
    case ReductionFlavor::quasi_dummy: return "quasi_dummy";
    case ReductionFlavor::dummy_and_quasi: return "dummy_and_quasi";
  }
  return "?";
}

ReductionFlavor reduction_flavor(const Game& parent, const SubsetSpec& subsets) {
  validate(subsets, parent);
  const std::size_t n = parent.num_players();
  auto full = [&](std::size_t i) { return subsets.size(i) == parent.num_strategies(i); };

  bool dummy = false;
  bool quasi = false;
  for (std::size_t j = 0; j < n && !(dummy && quasi); ++j) {
    if (subsets.size(j) == 1 && !dummy) {
      dummy = true;
      for (std::size_t i = 0; i < n; ++i) {
        if (i != j && !full(i) && subsets.size(i) != 1) {
          dummy = false;
          break;
        }
      }
    }
    if (subsets.size(j) == 2 && !quasi) {
      quasi = true;
      for (std::size_t i = 0; i < n; ++i) {
        if (i != j && !full(i) && subsets.size(i) > 2) {
          quasi = false;
          break;
        }
      }
    }
  }
  if (dummy && quasi) return ReductionFlavor::dummy_and_quasi;
  if (dummy) return ReductionFlavor::dummy;
  if (quasi) return ReductionFlavor::quasi_dummy;
  return ReductionFlavor::plain;
}

bool strictly_dominates(const Game& g, std::size_t player, std::size_t a, std::size_t b) {
  const std::size_t m = g.num_strategies(player);
  if (a >= m || b >= m) throw GameError("strategy index out of range");
  if (a == b) return false;
  const std::size_t stride = g.stride(player);
  const std::ptrdiff_t shift =
      (static_cast<std::ptrdiff_t>(b) - static_cast<std::ptrdiff_t>(a)) *
      static_cast<std::ptrdiff_t>(stride);
  for (std::size_t p = 0; p < g.num_profiles(); ++p) {
    if (g.component(p, player) != a) continue;
    const auto q = static_cast<std::size_t>(static_cast<std::ptrdiff_t>(p) + shift);
    if (!g.strictly_prefers(player, p, q)) return false;
  }
  return true;
}

std::vector<std::vector<bool>> dominance_table(const Game& g, std::size_t player) {
  const std::size_t m = g.num_strategies(player);
  std::vector<std::vector<bool>> table(m, std::vector<bool>(m, false));
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) table[a][b] = strictly_dominates(g, player, a, b);
  }
  return table;
}

bool is_strict_subset(const Game& parent, const SubsetSpec& subsets) {
  validate(subsets, parent);
  if (is_full(subsets, parent)) return false;
  for (std::size_t i = 0; i < parent.num_players(); ++i) {
    for (std::size_t removed = 0; removed < parent.num_strategies(i); ++removed) {
      if (subsets.contains(i, removed)) continue;
      bool dominated = false;
      for (std::size_t kept : subsets.kept[i]) {
        if (strictly_dominates(parent, i, kept, removed)) {
          dominated = true;
          break;
        }
      }
      if (!dominated) return false;
    }
  }
  return true;
}

bool is_strict_reduction(const Game& candidate, const Game& parent) {
  auto spec = reduction_spec(candidate, parent);
  return spec && is_strict_subset(parent, *spec);
}

Game merge(const Game& parent, const SubsetSpec& a, const SubsetSpec& b) {
  validate(a, parent);
  validate(b, parent);
  return restrict(parent, join(a, b));
}

Game reduce_players(const Game& g, std::span<const std::size_t> keep, const Profile& fixed) {
  const std::size_t n = g.num_players();
  std::vector<std::size_t> players(keep.begin(), keep.end());
  std::sort(players.begin(), players.end());
  players.erase(std::unique(players.begin(), players.end()), players.end());
  if (players.empty()) throw GameError("player reduction must keep at least one player");
  if (players.size() >= n) throw GameError("player reduction must remove at least one player");
  if (players.back() >= n) throw GameError("player index out of range");
  const std::size_t base = g.linear_index(fixed);

  std::vector<Labels> labels;
  for (std::size_t i : players) labels.push_back(g.strategies(i));
  std::size_t count = 1;
  for (const auto& l : labels) count *= l.size();

  std::vector<std::vector<Rank>> ranks(players.size(), std::vector<Rank>(count));
  std::vector<std::size_t> digit(players.size(), 0);
  for (std::size_t c = 0; c < count; ++c) {
    std::size_t p = base;
    for (std::size_t k = 0; k < players.size(); ++k) {
      const std::size_t i = players[k];
      p = p - g.component(base, i) * g.stride(i) + digit[k] * g.stride(i);
    }
    for (std::size_t k = 0; k < players.size(); ++k) ranks[k][c] = g.rank(players[k], p);
    for (std::size_t k = players.size(); k-- > 0;) {
      if (++digit[k] < labels[k].size()) break;
      digit[k] = 0;
    }
  }
  return Game(std::move(labels), std::move(ranks));
}

}  // namespace nashax
