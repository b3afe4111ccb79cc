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


#include "nashax/concepts.hpp"

#include <algorithm>
#include <array>
#include <limits>

namespace nashax {

namespace {

constexpr std::array kRegistry = {
    ConceptId::nash,          ConceptId::strong_nash, ConceptId::empty,
    ConceptId::all_profiles,  ConceptId::ne_indifference_closure,
    ConceptId::parity_ne,     ConceptId::ex4_phi,     ConceptId::ex4_phi_prime,
    ConceptId::ex5_phi,
};

ProfileSet all_of(const Game& g) {
  ProfileSet out(g.num_profiles());
  for (std::size_t p = 0; p < out.size(); ++p) out[p] = p;
  return out;
}

// t blocks s when some coalition containing every player whose strategy
// differs profits jointly. Under strict blocking the movers alone are the
// weakest coalition. Under weak blocking a player who stays put may join
// and supply the strict gain.
bool blocks(const Game& g, std::size_t t, std::size_t s, Blocking blocking) {
  bool any_strict = false;
  bool moved = false;
  for (std::size_t i = 0; i < g.num_players(); ++i) {
    const bool strict = g.strictly_prefers(i, t, s);
    if (g.component(t, i) == g.component(s, i)) {
      any_strict = any_strict || (blocking == Blocking::weak && strict);
      continue;
    }
    moved = true;
    if (strict) {
      any_strict = true;
    } else if (blocking == Blocking::strict || !g.weakly_prefers(i, t, s)) {
      return false;
    }
  }
  return moved && any_strict;
}

ProfileSet ne_indifference_closure(const Game& g) {
  const ProfileSet ne = nash(g);
  ProfileSet out;
  for (std::size_t s = 0; s < g.num_profiles(); ++s) {
    for (std::size_t t : ne) {
      bool tied = true;
      for (std::size_t i = 0; i < g.num_players() && tied; ++i) tied = g.indifferent(i, s, t);
      if (tied) {
        out.push_back(s);
        break;
      }
    }
  }
  return out;
}

ProfileSet ex5_phi(const Game& g) {
  const Labels& second = g.strategies(1);
  if (second.size() == 1 && second.front() == "R" && g.num_profiles() == 2) return {};
  const ProfileSet ne = nash(g);
  ProfileSet out;
  for (std::size_t s : ne) {
    bool beaten = std::any_of(ne.begin(), ne.end(),
                              [&](std::size_t t) { return g.strictly_prefers(0, t, s); });
    if (!beaten) out.push_back(s);
  }
  return out;
}

[[noreturn]] void outside_domain(ConceptId id, const Game& g, std::string_view domain) {
  throw DomainError(std::string(to_string(id)) + " is only defined on " + std::string(domain) +
                        "; game " + g.id() + " has " + std::to_string(g.num_players()) +
                        " players",
                    g.id());
}

}  // namespace

std::string_view to_string(ConceptId id) {
  switch (id) {
    case ConceptId::nash: return "nash";
    case ConceptId::strong_nash: return "strong_nash";
    case ConceptId::empty: return "empty";
    case ConceptId::all_profiles: return "all_profiles";
    case ConceptId::ne_indifference_closure: return "ne_indifference_closure";
    case ConceptId::parity_ne: return "parity_ne";
    case ConceptId::ex4_phi: return "ex4_phi";
    case ConceptId::ex4_phi_prime: return "ex4_phi_prime";
    case ConceptId::ex5_phi: return "ex5_phi";
  }
  return "?";
}

std::optional<ConceptId> parse_concept_id(std::string_view name) {
  for (ConceptId id : kRegistry) {
    if (to_string(id) == name) return id;
  }
  return std::nullopt;
}

std::string concept_name(const ConceptSpec& spec) {
  std::string name(to_string(spec.id));
  if (spec.id == ConceptId::strong_nash && spec.blocking == Blocking::weak) name += "[weak]";
  return name;
}

std::span<const ConceptId> registered_concepts() { return kRegistry; }

ProfileSet nash(const Game& g) {
  const std::size_t n = g.num_players();
  const std::size_t count = g.num_profiles();
  // best[i][p]: best rank player i can reach against the opponents of p.
  std::vector<Rank> best(count);
  std::vector<char> stable(count, 1);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t stride = g.stride(i);
    std::fill(best.begin(), best.end(), std::numeric_limits<Rank>::max());
    for (std::size_t p = 0; p < count; ++p) {
      const std::size_t key = p - g.component(p, i) * stride;
      best[key] = std::min(best[key], g.rank(i, p));
    }
    for (std::size_t p = 0; p < count; ++p) {
      const std::size_t key = p - g.component(p, i) * stride;
      if (g.rank(i, p) != best[key]) stable[p] = 0;
    }
  }
  ProfileSet out;
  for (std::size_t p = 0; p < count; ++p) {
    if (stable[p]) out.push_back(p);
  }
  return out;
}

ProfileSet strong_nash(const Game& g, Blocking blocking) {
  ProfileSet out;
  for (std::size_t s = 0; s < g.num_profiles(); ++s) {
    bool blocked = false;
    for (std::size_t t = 0; t < g.num_profiles() && !blocked; ++t) {
      blocked = t != s && blocks(g, t, s, blocking);
    }
    if (!blocked) out.push_back(s);
  }
  return out;
}

ProfileSet jointly_optimal(const Game& g) {
  const std::size_t n = g.num_players();
  std::vector<std::vector<std::size_t>> dominant(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t m = g.num_strategies(i);
    const std::size_t stride = g.stride(i);
    for (std::size_t a = 0; a < m; ++a) {
      bool ok = true;
      for (std::size_t p = 0; p < g.num_profiles() && ok; ++p) {
        if (g.component(p, i) != a) continue;
        const std::size_t base = p - a * stride;
        for (std::size_t b = 0; b < m && ok; ++b) {
          ok = g.weakly_prefers(i, p, base + b * stride);
        }
      }
      if (ok) dominant[i].push_back(a);
    }
    if (dominant[i].empty()) return {};
  }
  ProfileSet out;
  std::vector<std::size_t> digit(n, 0);
  while (true) {
    std::size_t p = 0;
    for (std::size_t i = 0; i < n; ++i) p += dominant[i][digit[i]] * g.stride(i);
    out.push_back(p);
    std::size_t i = n;
    while (i-- > 0) {
      if (++digit[i] < dominant[i].size()) break;
      digit[i] = 0;
    }
    if (i == static_cast<std::size_t>(-1)) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

ProfileSet eval_concept(const ConceptSpec& spec, const Game& g) {
  const std::size_t n = g.num_players();
  switch (spec.id) {
    case ConceptId::nash: return nash(g);
    case ConceptId::strong_nash: return strong_nash(g, spec.blocking);
    case ConceptId::empty: return {};
    case ConceptId::all_profiles: return all_of(g);
    case ConceptId::ne_indifference_closure: return ne_indifference_closure(g);
    case ConceptId::parity_ne: return n % 2 == 0 ? nash(g) : ProfileSet{};
    case ConceptId::ex4_phi:
      if (n == 1) return all_of(g);
      if (n == 2) return nash(g);
      outside_domain(spec.id, g, "one- and two-player games");
    case ConceptId::ex4_phi_prime:
      if (n == 1) return {};
      if (n == 2) return strong_nash(g, spec.blocking);
      outside_domain(spec.id, g, "one- and two-player games");
    case ConceptId::ex5_phi:
      if (n == 2) return ex5_phi(g);
      outside_domain(spec.id, g, "two-player games");
  }
  throw Error("unregistered solution concept");
}

bool contains(const ProfileSet& set, std::size_t profile) {
  return std::binary_search(set.begin(), set.end(), profile);
}

std::string format_profiles(const Game& g, const ProfileSet& set) {
  if (set.empty()) return "{}";
  std::string out;
  for (std::size_t p : set) {
    if (!out.empty()) out += ' ';
    out += g.format_profile(p);
  }
  return out;
}

}  // namespace nashax
