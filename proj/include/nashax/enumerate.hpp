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
#include <cstdint>
#include <optional>
#include <vector>

#include "nashax/game.hpp"

namespace nashax {

inline constexpr std::size_t kDefaultBudget = 100000;

enum class ReductionFilter {
  all,             // every SubsetSpec
  dummy_or_quasi,  // reductions with a dummy or a quasi-dummy player
  strict,          // strict reductions (only strictly dominated strategies removed)
};

const char* to_string(ReductionFilter f);

// Streams the SubsetSpecs of a game in ascending player-wise bitmask order,
// player 0 most significant, bit k standing for strategy k.
//
// The budget caps the number of specs yielded; next() throws BudgetExceeded
// once it would be crossed. An unfiltered stream whose total length
// prod_i (2^|S_i| - 1) exceeds the budget fails on construction.
class ReductionEnumerator {
 public:
  ReductionEnumerator(const Game& game, ReductionFilter filter,
                      std::size_t budget = kDefaultBudget);

  std::optional<SubsetSpec> next();
  void reset();
  std::size_t yielded() const { return yielded_; }

 private:
  bool accept(const SubsetSpec& spec) const;
  SubsetSpec current() const;
  void advance();

  const Game* game_;
  ReductionFilter filter_;
  std::size_t budget_;
  // Candidate masks per player, ascending.
  std::vector<std::vector<std::uint64_t>> masks_;
  std::vector<std::size_t> cursor_;
  bool done_ = false;
  std::size_t yielded_ = 0;
};

std::vector<SubsetSpec> enumerate_reductions(const Game& game,
                                             ReductionFilter filter = ReductionFilter::all,
                                             std::size_t budget = kDefaultBudget);

// prod_i (2^|S_i| - 1), saturating at SIZE_MAX.
std::size_t reduction_count(const Game& game);

}  // namespace nashax
