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
#include <vector>

#include "nashax/game.hpp"

namespace nashax {

// Sorted, duplicate-free linear profile indices of one game.
using ProfileSet = std::vector<std::size_t>;

enum class ConceptId {
  nash,
  strong_nash,
  empty,
  all_profiles,
  ne_indifference_closure,
  parity_ne,
  ex4_phi,
  ex4_phi_prime,
  ex5_phi,
};

// How a coalition blocks a profile in strong_nash.
//   strict: every member strictly improves (default).
//   weak:   every member weakly improves and at least one strictly.
enum class Blocking { strict, weak };

struct ConceptSpec {
  ConceptId id = ConceptId::nash;
  Blocking blocking = Blocking::strict;

  friend bool operator==(const ConceptSpec&, const ConceptSpec&) = default;
};

// Stable id strings, as accepted by the CLI and written into reports.
std::string_view to_string(ConceptId id);
std::optional<ConceptId> parse_concept_id(std::string_view name);
std::string concept_name(const ConceptSpec& spec);
std::span<const ConceptId> registered_concepts();

ProfileSet nash(const Game& g);
ProfileSet strong_nash(const Game& g, Blocking blocking = Blocking::strict);
// Profiles whose every component is weakly dominant.
ProfileSet jointly_optimal(const Game& g);

// Throws DomainError when the concept is not defined for g's player count.
ProfileSet eval_concept(const ConceptSpec& spec, const Game& g);

bool contains(const ProfileSet& set, std::size_t profile);
std::string format_profiles(const Game& g, const ProfileSet& set);

}  // namespace nashax
