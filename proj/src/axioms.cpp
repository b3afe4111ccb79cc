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


#include "nashax/axioms.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <sstream>

#include "nashax/enumerate.hpp"
#include "nashax/parallel.hpp"

namespace nashax {

using nlohmann::ordered_json;

namespace {

constexpr std::array kAxioms = {Axiom::iis,  Axiom::mc,     Axiom::isds, Axiom::jo,
                                Axiom::cons, Axiom::cocons, Axiom::ciis};

using Link = ClassAnalysis::Link;

bool is_strict_link(const std::vector<std::vector<std::vector<bool>>>& dominance,
                    const SubsetSpec& spec, const Game& g) {
  if (is_full(spec, g)) return false;
  for (std::size_t i = 0; i < g.num_players(); ++i) {
    for (std::size_t removed = 0; removed < g.num_strategies(i); ++removed) {
      if (spec.contains(i, removed)) continue;
      const bool covered = std::any_of(spec.kept[i].begin(), spec.kept[i].end(),
                                       [&](std::size_t kept) { return dominance[i][kept][removed]; });
      if (!covered) return false;
    }
  }
  return true;
}

bool joins_to_full(const SubsetSpec& a, const SubsetSpec& b, const Game& g) {
  for (std::size_t i = 0; i < g.num_players(); ++i) {
    std::size_t covered = 0;
    for (std::size_t s = 0; s < g.num_strategies(i); ++s) {
      if (a.contains(i, s) || b.contains(i, s)) ++covered;
    }
    if (covered != g.num_strategies(i)) return false;
  }
  return true;
}

WitnessSubsets subsets_of(std::string role, const Link& link, const Game& g) {
  return WitnessSubsets{std::move(role), labels_of(link.spec, g)};
}

std::vector<std::size_t> players_of_mask(std::size_t mask, std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n; ++i) {
    if (mask >> i & 1) out.push_back(i);
  }
  return out;
}

// Linear index in reduce_players(g, keep, .) of the profile s restricted to keep.
std::size_t kept_profile_index(const Game& g, const std::vector<std::size_t>& keep, std::size_t s) {
  std::size_t out = 0;
  for (std::size_t i : keep) out = out * g.num_strategies(i) + g.component(s, i);
  return out;
}

// For every member with n >= 2: per subgroup mask and per profile, the class
// index of the corresponding player-reduced game, if present.
struct PlayerReductions {
  // [k][mask - 1][profile]
  std::vector<std::vector<std::vector<std::optional<std::size_t>>>> index;
};

PlayerReductions player_reductions(const GameClass& cls, std::size_t jobs) {
  PlayerReductions out;
  out.index.resize(cls.size());
  parallel_for(cls.size(), jobs, [&](std::size_t k) {
    const Game& g = cls.game(k);
    const std::size_t n = g.num_players();
    if (n < 2) return;
    const std::size_t masks = (std::size_t{1} << n) - 2;
    auto& table = out.index[k];
    table.assign(masks, std::vector<std::optional<std::size_t>>(g.num_profiles()));
    for (std::size_t mask = 1; mask <= masks; ++mask) {
      const auto keep = players_of_mask(mask, n);
      // The reduced game depends only on the departed players' strategies.
      std::vector<std::optional<std::size_t>> by_pin(g.num_profiles());
      std::vector<char> done(g.num_profiles(), 0);
      for (std::size_t s = 0; s < g.num_profiles(); ++s) {
        std::size_t pin = s;
        for (std::size_t i : keep) pin -= g.component(s, i) * g.stride(i);
        if (!done[pin]) {
          done[pin] = 1;
          Game reduced = reduce_players(g, keep, g.profile_at(pin));
          auto idx = cls.find(reduced.id());
          if (idx && cls.game(*idx) == reduced) by_pin[pin] = idx;
        }
        table[mask - 1][s] = by_pin[pin];
      }
    }
  });
  return out;
}

// ---------------------------------------------------------------------------
// Per-game scans. Each returns the first witness at member k in the
// deterministic order, or nothing.

std::optional<Witness> scan_iis(const ClassAnalysis& a, const SolutionTable& phi, std::size_t k) {
  const GameClass& cls = a.game_class();
  const Game& g = cls.game(k);
  for (const Link& link : a.reductions(k)) {
    for (std::size_t s : phi[k]) {
      if (!contains_profile(link.spec, g, s)) continue;
      if (phi.contains(link.game, child_index(link.spec, g, s))) continue;
      Witness w;
      w.clause = "s in S' and s in phi(G), but s not in phi(G')";
      w.games = {{"G", g.id()}, {"G'", cls.game(link.game).id()}};
      w.subsets = {subsets_of("G'", link, g)};
      w.profiles = {g.labels_of(s)};
      return w;
    }
  }
  return std::nullopt;
}

std::optional<Witness> scan_mc(const ClassAnalysis& a, const SolutionTable& phi, std::size_t k) {
  const GameClass& cls = a.game_class();
  const Game& g = cls.game(k);
  const auto& links = a.reductions(k);
  for (const Link& first : links) {
    for (const Link& second : links) {
      if (!joins_to_full(first.spec, second.spec, g)) continue;
      for (std::size_t c : phi[first.game]) {
        const std::size_t s = first.to_parent[c];
        if (phi.contains(k, s)) continue;
        if (!contains_profile(second.spec, g, s)) continue;
        if (!phi.contains(second.game, child_index(second.spec, g, s))) continue;
        Witness w;
        w.clause = "s in phi(G') and s in phi(G'') with S' v S'' = S, but s not in phi(G)";
        w.games = {{"G", g.id()},
                   {"G'", cls.game(first.game).id()},
                   {"G''", cls.game(second.game).id()}};
        w.subsets = {subsets_of("G'", first, g), subsets_of("G''", second, g)};
        w.profiles = {g.labels_of(s)};
        return w;
      }
    }
  }
  return std::nullopt;
}

std::optional<Witness> scan_isds(const ClassAnalysis& a, const SolutionTable& phi, std::size_t k) {
  const GameClass& cls = a.game_class();
  const Game& g = cls.game(k);
  for (const Link& link : a.reductions(k)) {
    if (!link.strict) continue;
    ProfileSet mapped;
    for (std::size_t c : phi[link.game]) mapped.push_back(link.to_parent[c]);
    std::sort(mapped.begin(), mapped.end());
    if (mapped == phi[k]) continue;
    ProfileSet diff;
    std::set_symmetric_difference(phi[k].begin(), phi[k].end(), mapped.begin(), mapped.end(),
                                  std::back_inserter(diff));
    Witness w;
    w.clause = "G' is a strict reduction of G, but phi(G) != phi(G')";
    w.games = {{"G", g.id()}, {"G'", cls.game(link.game).id()}};
    w.subsets = {subsets_of("G'", link, g)};
    for (std::size_t s : diff) w.profiles.push_back(g.labels_of(s));
    return w;
  }
  return std::nullopt;
}

std::optional<Witness> scan_jo(const ClassAnalysis& a, const SolutionTable& phi, std::size_t k) {
  const Game& g = a.game_class().game(k);
  for (std::size_t s : jointly_optimal(g)) {
    if (phi.contains(k, s)) continue;
    Witness w;
    w.clause = "every component of s is weakly dominant, but s not in phi(G)";
    w.games = {{"G", g.id()}};
    w.profiles = {g.labels_of(s)};
    return w;
  }
  return std::nullopt;
}

std::optional<Witness> scan_cons(const ClassAnalysis& a, const SolutionTable& phi,
                                 const PlayerReductions& pr, std::size_t k) {
  const GameClass& cls = a.game_class();
  const Game& g = cls.game(k);
  const std::size_t n = g.num_players();
  if (n < 2) return std::nullopt;
  for (std::size_t s : phi[k]) {
    for (std::size_t mask = 1; mask + 1 < (std::size_t{1} << n); ++mask) {
      const auto idx = pr.index[k][mask - 1][s];
      if (!idx) continue;
      const auto keep = players_of_mask(mask, n);
      if (phi.contains(*idx, kept_profile_index(g, keep, s))) continue;
      Witness w;
      w.clause = "s in phi(G), but s restricted to I' is not in phi of the reduced game";
      w.games = {{"G", g.id()}, {"reduced", cls.game(*idx).id()}};
      w.profiles = {g.labels_of(s)};
      w.players = keep;
      return w;
    }
  }
  return std::nullopt;
}

std::optional<Witness> scan_cocons(const ClassAnalysis& a, const SolutionTable& phi,
                                   const PlayerReductions& pr, std::size_t k) {
  const GameClass& cls = a.game_class();
  const Game& g = cls.game(k);
  const std::size_t n = g.num_players();
  if (n < 2) return std::nullopt;
  for (std::size_t s = 0; s < g.num_profiles(); ++s) {
    if (phi.contains(k, s)) continue;
    std::vector<WitnessGame> reduced;
    bool all_solved = true;
    for (std::size_t mask = 1; mask + 1 < (std::size_t{1} << n) && all_solved; ++mask) {
      const auto idx = pr.index[k][mask - 1][s];
      if (!idx) continue;
      all_solved = phi.contains(*idx, kept_profile_index(g, players_of_mask(mask, n), s));
      reduced.push_back({"reduced", cls.game(*idx).id()});
    }
    if (!all_solved || reduced.empty()) continue;
    Witness w;
    w.clause = "s not in phi(G), yet s restricted to every present subgroup solves the reduced game";
    w.games = {{"G", g.id()}};
    w.games.insert(w.games.end(), reduced.begin(), reduced.end());
    w.profiles = {g.labels_of(s)};
    return w;
  }
  return std::nullopt;
}

std::optional<Witness> scan_ciis(const ClassAnalysis& a, const SolutionTable& phi, std::size_t k) {
  const GameClass& cls = a.game_class();
  const Game& g = cls.game(k);
  if (g.num_profiles() < 3) return std::nullopt;
  for (std::size_t s = 0; s < g.num_profiles(); ++s) {
    if (phi.contains(k, s)) continue;
    std::vector<const Link*> holding;
    bool all_solved = true;
    for (const Link& link : a.reductions(k)) {
      if (!link.proper || !contains_profile(link.spec, g, s)) continue;
      holding.push_back(&link);
      if (!phi.contains(link.game, child_index(link.spec, g, s))) {
        all_solved = false;
        break;
      }
    }
    if (!all_solved || holding.empty()) continue;
    Witness w;
    w.clause = "s not in phi(G), yet s solves every proper reduction of G in the class containing it";
    w.games = {{"G", g.id()}};
    for (const Link* link : holding) {
      w.games.push_back({"proper reduction", cls.game(link->game).id()});
      w.subsets.push_back(subsets_of("proper reduction", *link, g));
    }
    w.profiles = {g.labels_of(s)};
    return w;
  }
  return std::nullopt;
}

std::vector<std::string> literature_coverage(Axiom axiom, const ClassAnalysis& a,
                                             const SolutionTable& phi, const PlayerReductions* pr) {
  const GameClass& cls = a.game_class();
  std::vector<std::string> notes;
  if (axiom == Axiom::cons || axiom == Axiom::cocons) {
    std::size_t present = 0, absent = 0, bare = 0, games = 0;
    for (std::size_t k = 0; k < cls.size(); ++k) {
      const Game& g = cls.game(k);
      const std::size_t n = g.num_players();
      if (n < 2) continue;
      ++games;
      for (std::size_t s = 0; s < g.num_profiles(); ++s) {
        std::size_t here = 0;
        for (std::size_t mask = 1; mask + 1 < (std::size_t{1} << n); ++mask) {
          if (pr->index[k][mask - 1][s]) {
            ++present;
            ++here;
          } else {
            ++absent;
          }
        }
        if (axiom == Axiom::cocons && here == 0 && !phi.contains(k, s)) ++bare;
      }
    }
    std::ostringstream note;
    note << "player-reduced games: " << present << " (game, subgroup, profile) combinations present, "
         << absent << " absent, over " << games << " games with at least two players";
    notes.push_back(note.str());
    if (axiom == Axiom::cocons) {
      notes.push_back(std::to_string(bare) +
                      " unsolved profiles had no player-reduced game in the class");
    }
    if (games == 0) notes.push_back("no game with at least two players; quantifier is empty");
  } else if (axiom == Axiom::ciis) {
    std::size_t bare = 0, candidates = 0;
    for (std::size_t k = 0; k < cls.size(); ++k) {
      const Game& g = cls.game(k);
      if (g.num_profiles() < 3) continue;
      for (std::size_t s = 0; s < g.num_profiles(); ++s) {
        if (phi.contains(k, s)) continue;
        ++candidates;
        const auto& links = a.reductions(k);
        const bool any = std::any_of(links.begin(), links.end(), [&](const Link& l) {
          return l.proper && contains_profile(l.spec, g, s);
        });
        if (!any) ++bare;
      }
    }
    notes.push_back(std::to_string(bare) + " of " + std::to_string(candidates) +
                    " unsolved profiles had no proper reduction in the class containing them");
  }
  return notes;
}

}  // namespace

std::string_view to_string(Axiom axiom) {
  switch (axiom) {
    case Axiom::iis: return "iis";
    case Axiom::mc: return "mc";
    case Axiom::isds: return "isds";
    case Axiom::jo: return "jo";
    case Axiom::cons: return "cons";
    case Axiom::cocons: return "cocons";
    case Axiom::ciis: return "ciis";
  }
  return "?";
}

std::optional<Axiom> parse_axiom(std::string_view name) {
  for (Axiom a : kAxioms) {
    if (to_string(a) == name) return a;
  }
  return std::nullopt;
}

bool is_literature_axiom(Axiom axiom) {
  return axiom == Axiom::cons || axiom == Axiom::cocons || axiom == Axiom::ciis;
}

ClassAnalysis::ClassAnalysis(const GameClass& cls, std::size_t jobs)
    : cls_(&cls), links_(cls.size()) {
  parallel_for(cls.size(), jobs, [&](std::size_t k) {
    const Game& g = cls.game(k);
    std::vector<std::vector<std::vector<bool>>> dominance;
    for (std::size_t i = 0; i < g.num_players(); ++i) dominance.push_back(dominance_table(g, i));

    std::vector<Link> links;
    auto add = [&](std::size_t h, SubsetSpec spec) {
      const Game& child = cls.game(h);
      Link link;
      link.game = h;
      link.to_parent.resize(child.num_profiles());
      for (std::size_t c = 0; c < child.num_profiles(); ++c) {
        link.to_parent[c] = parent_index(spec, g, child, c);
      }
      link.strict = is_strict_link(dominance, spec, g);
      link.proper = !is_full(spec, g);
      link.spec = std::move(spec);
      links.push_back(std::move(link));
    };

    if (reduction_count(g) <= cls.size()) {
      ReductionEnumerator specs(g, ReductionFilter::all, SIZE_MAX);
      while (auto spec = specs.next()) {
        Game r = restrict(g, *spec);
        auto h = cls.find(r.id());
        if (h && cls.game(*h) == r) add(*h, std::move(*spec));
      }
    } else {
      for (std::size_t h = 0; h < cls.size(); ++h) {
        if (auto spec = reduction_spec(cls.game(h), g)) add(h, std::move(*spec));
      }
    }
    std::sort(links.begin(), links.end(),
              [](const Link& x, const Link& y) { return x.game < y.game; });
    links_[k] = std::move(links);
  });
}

SolutionTable::SolutionTable(const GameClass& cls, const ConceptSpec& spec, std::size_t jobs)
    : spec_(spec), sets_(cls.size()) {
  parallel_for(cls.size(), jobs, [&](std::size_t k) { sets_[k] = eval_concept(spec, cls.game(k)); });
}

AxiomVerdict check(Axiom axiom, const ClassAnalysis& analysis, const SolutionTable& solutions,
                   const CheckOptions& options) {
  const GameClass& cls = analysis.game_class();
  AxiomVerdict verdict;
  verdict.axiom = axiom;
  verdict.concept_id = concept_name(solutions.spec());

  std::optional<PlayerReductions> pr;
  if (axiom == Axiom::cons || axiom == Axiom::cocons) pr = player_reductions(cls, options.jobs);

  auto scan = [&](std::size_t k) -> std::optional<Witness> {
    switch (axiom) {
      case Axiom::iis: return scan_iis(analysis, solutions, k);
      case Axiom::mc: return scan_mc(analysis, solutions, k);
      case Axiom::isds: return scan_isds(analysis, solutions, k);
      case Axiom::jo: return scan_jo(analysis, solutions, k);
      case Axiom::cons: return scan_cons(analysis, solutions, *pr, k);
      case Axiom::cocons: return scan_cocons(analysis, solutions, *pr, k);
      case Axiom::ciis: return scan_ciis(analysis, solutions, k);
    }
    return std::nullopt;
  };
  if (auto hit = parallel_first<Witness>(cls.size(), options.jobs, scan)) {
    verdict.violated = true;
    verdict.witness = std::move(hit->second);
  }
  if (is_literature_axiom(axiom)) {
    verdict.coverage = literature_coverage(axiom, analysis, solutions, pr ? &*pr : nullptr);
  }
  return verdict;
}

AxiomVerdict check_axiom(Axiom axiom, const ConceptSpec& spec, const GameClass& cls,
                         const CheckOptions& options) {
  const ClassAnalysis analysis(cls, options.jobs);
  const SolutionTable solutions(cls, spec, options.jobs);
  return check(axiom, analysis, solutions, options);
}

AxiomVerdict check_iis(const ConceptSpec& spec, const GameClass& cls, const CheckOptions& options) {
  return check_axiom(Axiom::iis, spec, cls, options);
}
AxiomVerdict check_mc(const ConceptSpec& spec, const GameClass& cls, const CheckOptions& options) {
  return check_axiom(Axiom::mc, spec, cls, options);
}
AxiomVerdict check_isds(const ConceptSpec& spec, const GameClass& cls, const CheckOptions& options) {
  return check_axiom(Axiom::isds, spec, cls, options);
}
AxiomVerdict check_jo(const ConceptSpec& spec, const GameClass& cls, const CheckOptions& options) {
  return check_axiom(Axiom::jo, spec, cls, options);
}

AxiomVerdict check_literature_axiom(Axiom which, const ConceptSpec& spec, const GameClass& cls,
                                    const CheckOptions& options) {
  if (!is_literature_axiom(which)) {
    throw Error(std::string(to_string(which)) + " is not one of cons, cocons, ciis");
  }
  return check_axiom(which, spec, cls, options);
}

// ---------------------------------------------------------------------------
// Replay

namespace {

const Game* lookup(const GameClass& cls, const Witness& w, std::string_view role,
                   std::size_t nth = 0) {
  for (const auto& entry : w.games) {
    if (entry.role != role) continue;
    if (nth-- > 0) continue;
    auto idx = cls.find(entry.id);
    return idx ? &cls.game(*idx) : nullptr;
  }
  return nullptr;
}

bool solves(const ConceptSpec& spec, const Game& g, const LabeledProfile& s) {
  auto p = g.find_profile(s);
  return p && contains(eval_concept(spec, g), *p);
}

LabeledProfile restrict_profile(const LabeledProfile& s, const std::vector<std::size_t>& keep) {
  LabeledProfile out;
  for (std::size_t i : keep) out.push_back(s[i]);
  return out;
}

bool replay(const AxiomVerdict& v, const ConceptSpec& spec, const GameClass& cls) {
  const Witness& w = *v.witness;
  const Game* g = lookup(cls, w, "G");
  if (!g || w.profiles.empty()) return false;
  const LabeledProfile& s = w.profiles.front();

  switch (v.axiom) {
    case Axiom::iis: {
      const Game* gp = lookup(cls, w, "G'");
      return gp && is_reduction(*gp, *g) && gp->find_profile(s) && solves(spec, *g, s) &&
             !solves(spec, *gp, s);
    }
    case Axiom::mc: {
      const Game* g1 = lookup(cls, w, "G'");
      const Game* g2 = lookup(cls, w, "G''");
      if (!g1 || !g2 || !is_reduction(*g1, *g) || !is_reduction(*g2, *g)) return false;
      for (std::size_t i = 0; i < g->num_players(); ++i) {
        for (const auto& label : g->strategies(i)) {
          if (!g1->strategy_index(i, label) && !g2->strategy_index(i, label)) return false;
        }
      }
      return solves(spec, *g1, s) && solves(spec, *g2, s) && !solves(spec, *g, s);
    }
    case Axiom::isds: {
      const Game* gp = lookup(cls, w, "G'");
      if (!gp || !is_strict_reduction(*gp, *g)) return false;
      std::vector<LabeledProfile> a, b;
      for (std::size_t p : eval_concept(spec, *g)) a.push_back(g->labels_of(p));
      for (std::size_t p : eval_concept(spec, *gp)) b.push_back(gp->labels_of(p));
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      if (a == b) return false;
      // Every reported profile lies in exactly one of the two sets.
      return std::all_of(w.profiles.begin(), w.profiles.end(), [&](const LabeledProfile& x) {
        return std::binary_search(a.begin(), a.end(), x) != std::binary_search(b.begin(), b.end(), x);
      });
    }
    case Axiom::jo: {
      auto p = g->find_profile(s);
      return p && contains(jointly_optimal(*g), *p) && !solves(spec, *g, s);
    }
    case Axiom::cons: {
      const Game* reduced = lookup(cls, w, "reduced");
      auto p = g->find_profile(s);
      if (!reduced || !p || !solves(spec, *g, s)) return false;
      if (w.players.empty() || w.players.size() >= g->num_players()) return false;
      const Game expected = reduce_players(*g, w.players, g->profile_at(*p));
      return expected == *reduced && !solves(spec, *reduced, restrict_profile(s, w.players));
    }
    case Axiom::cocons: {
      auto p = g->find_profile(s);
      if (!p || g->num_players() < 2 || solves(spec, *g, s)) return false;
      const std::size_t n = g->num_players();
      std::size_t present = 0;
      for (std::size_t mask = 1; mask + 1 < (std::size_t{1} << n); ++mask) {
        std::vector<std::size_t> keep;
        for (std::size_t i = 0; i < n; ++i) {
          if (mask >> i & 1) keep.push_back(i);
        }
        const Game reduced = reduce_players(*g, keep, g->profile_at(*p));
        auto idx = cls.find(reduced.id());
        if (!idx) continue;
        ++present;
        if (!solves(spec, cls.game(*idx), restrict_profile(s, keep))) return false;
      }
      return present > 0;
    }
    case Axiom::ciis: {
      if (g->num_profiles() < 3 || !g->find_profile(s) || solves(spec, *g, s)) return false;
      std::size_t present = 0;
      for (const Game& h : cls.games()) {
        auto sub = reduction_spec(h, *g);
        if (!sub || is_full(*sub, *g) || !h.find_profile(s)) continue;
        ++present;
        if (!solves(spec, h, s)) return false;
      }
      return present > 0;
    }
  }
  return false;
}

}  // namespace

bool replay_witness(const AxiomVerdict& verdict, const ConceptSpec& spec, const GameClass& cls) {
  if (!verdict.violated || !verdict.witness) return false;
  return replay(verdict, spec, cls);
}

ordered_json verdict_to_json(const AxiomVerdict& verdict, std::string_view class_name) {
  ordered_json out;
  out["axiom"] = std::string(to_string(verdict.axiom));
  out["concept"] = verdict.concept_id;
  out["class"] = std::string(class_name);
  out["result"] = verdict.violated ? "violated" : "pass";
  if (verdict.witness) {
    const Witness& w = *verdict.witness;
    ordered_json wj;
    wj["clause"] = w.clause;
    ordered_json games = ordered_json::array();
    for (const auto& g : w.games) games.push_back({{"role", g.role}, {"id", g.id}});
    wj["games"] = std::move(games);
    ordered_json subsets = ordered_json::array();
    for (const auto& s : w.subsets) subsets.push_back({{"role", s.role}, {"strategies", s.strategies}});
    wj["subsets"] = std::move(subsets);
    wj["profiles"] = w.profiles;
    if (!w.players.empty()) {
      std::vector<std::size_t> one_based;
      for (std::size_t i : w.players) one_based.push_back(i + 1);
      wj["players"] = one_based;
    }
    out["witness"] = std::move(wj);
  } else {
    out["witness"] = nullptr;
  }
  out["coverage"] = verdict.coverage;
  return out;
}

namespace {

std::string format_labels(const LabeledProfile& p) {
  std::string out = "(";
  for (std::size_t i = 0; i < p.size(); ++i) out += (i ? "," : "") + p[i];
  return out + ")";
}

std::string format_space(const std::vector<Labels>& strategies) {
  std::string out;
  for (std::size_t i = 0; i < strategies.size(); ++i) {
    if (i) out += "x";
    out += "{";
    for (std::size_t k = 0; k < strategies[i].size(); ++k) out += (k ? "," : "") + strategies[i][k];
    out += "}";
  }
  return out;
}

}  // namespace

std::string format_verdict(const AxiomVerdict& verdict, const GameClass& cls) {
  std::string out = std::string(to_string(verdict.axiom)) + " " + verdict.concept_id + " " +
                    (verdict.violated ? "violated" : "pass");
  if (!verdict.witness) return out;
  const Witness& w = *verdict.witness;
  auto space_of = [&](const std::string& id) -> std::string {
    auto idx = cls.find(id);
    if (!idx) return id;
    std::vector<Labels> s;
    for (std::size_t i = 0; i < cls.game(*idx).num_players(); ++i) {
      s.push_back(cls.game(*idx).strategies(i));
    }
    return format_space(s);
  };
  out += ":";
  std::size_t shown = 0;
  for (const auto& g : w.games) {
    if (++shown > 4) {
      out += " ...";
      break;
    }
    out += " " + g.role + "=" + space_of(g.id);
  }
  if (!w.players.empty()) {
    out += " I'={";
    for (std::size_t k = 0; k < w.players.size(); ++k) out += (k ? "," : "") + std::to_string(w.players[k] + 1);
    out += "}";
  }
  out += " s=";
  for (std::size_t k = 0; k < w.profiles.size(); ++k) out += (k ? " " : "") + format_labels(w.profiles[k]);
  return out;
}

}  // namespace nashax
