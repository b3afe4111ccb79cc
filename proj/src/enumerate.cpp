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


#include "nashax/enumerate.hpp"

#include <limits>
#include <string>

namespace nashax {

namespace {

constexpr std::size_t kMaxStrategiesPerPlayer = 63;

}  // namespace

const char* to_string(ReductionFilter f) {
  switch (f) {
    case ReductionFilter::all: return "all";
    case ReductionFilter::dummy_or_quasi: return "dummy-or-quasi";
    case ReductionFilter::strict: return "strict";
  }
  return "?";
}

std::size_t reduction_count(const Game& game) {
  constexpr std::size_t kMax = std::numeric_limits<std::size_t>::max();
  std::size_t total = 1;
  for (std::size_t i = 0; i < game.num_players(); ++i) {
    const std::size_t m = game.num_strategies(i);
    if (m > kMaxStrategiesPerPlayer) return kMax;
    const std::size_t per = (std::size_t{1} << m) - 1;
    if (total > kMax / per) return kMax;
    total *= per;
  }
  return total;
}

ReductionEnumerator::ReductionEnumerator(const Game& game, ReductionFilter filter,
                                         std::size_t budget)
    : game_(&game), filter_(filter), budget_(budget) {
  const std::size_t n = game.num_players();
  for (std::size_t i = 0; i < n; ++i) {
    if (game.num_strategies(i) > kMaxStrategiesPerPlayer) {
      throw BudgetExceeded("player " + std::to_string(i + 1) + " has " +
                           std::to_string(game.num_strategies(i)) +
                           " strategies; subset enumeration is limited to " +
                           std::to_string(kMaxStrategiesPerPlayer));
    }
  }
  if (filter == ReductionFilter::all && reduction_count(game) > budget) {
    throw BudgetExceeded("game has more reductions than the budget of " +
                         std::to_string(budget));
  }

  masks_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t m = game.num_strategies(i);
    const std::uint64_t full = (std::uint64_t{1} << m) - 1;
    if (filter != ReductionFilter::strict) {
      for (std::uint64_t mask = 1; mask <= full; ++mask) masks_[i].push_back(mask);
      continue;
    }
    // Player-wise condition of a strict reduction: every removed strategy is
    // strictly dominated by some kept one. The "something removed" clause is
    // checked on the whole spec.
    const auto dominated_by = dominance_table(game, i);
    for (std::uint64_t mask = 1; mask <= full; ++mask) {
      bool ok = true;
      for (std::size_t removed = 0; removed < m && ok; ++removed) {
        if (mask >> removed & 1) continue;
        bool covered = false;
        for (std::size_t kept = 0; kept < m; ++kept) {
          if ((mask >> kept & 1) && dominated_by[kept][removed]) {
            covered = true;
            break;
          }
        }
        ok = covered;
      }
      if (ok) masks_[i].push_back(mask);
    }
  }
  reset();
}

void ReductionEnumerator::reset() {
  cursor_.assign(masks_.size(), 0);
  yielded_ = 0;
  done_ = false;
  for (const auto& m : masks_) {
    if (m.empty()) done_ = true;
  }
}

SubsetSpec ReductionEnumerator::current() const {
  SubsetSpec spec;
  spec.kept.resize(masks_.size());
  for (std::size_t i = 0; i < masks_.size(); ++i) {
    const std::uint64_t mask = masks_[i][cursor_[i]];
    for (std::size_t k = 0; k < 64; ++k) {
      if (mask >> k & 1) spec.kept[i].push_back(k);
    }
  }
  return spec;
}

void ReductionEnumerator::advance() {
  for (std::size_t i = masks_.size(); i-- > 0;) {
    if (++cursor_[i] < masks_[i].size()) return;
    cursor_[i] = 0;
  }
  done_ = true;
}

bool ReductionEnumerator::accept(const SubsetSpec& spec) const {
  switch (filter_) {
    case ReductionFilter::all: return true;
    case ReductionFilter::dummy_or_quasi:
      return has_dummy_or_quasi(reduction_flavor(*game_, spec));
    case ReductionFilter::strict: return !is_full(spec, *game_);
  }
  return false;
}

std::optional<SubsetSpec> ReductionEnumerator::next() {
  while (!done_) {
    SubsetSpec spec = current();
    advance();
    if (!accept(spec)) continue;
    if (yielded_ >= budget_) {
      throw BudgetExceeded("reduction stream exceeded the budget of " + std::to_string(budget_));
    }
    ++yielded_;
    return spec;
  }
  return std::nullopt;
}

std::vector<SubsetSpec> enumerate_reductions(const Game& game, ReductionFilter filter,
                                             std::size_t budget) {
  ReductionEnumerator e(game, filter, budget);
  std::vector<SubsetSpec> out;
  while (auto spec = e.next()) out.push_back(std::move(*spec));
  return out;
}

}  // namespace nashax
