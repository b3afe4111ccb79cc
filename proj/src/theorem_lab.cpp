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


#include "nashax/theorem_lab.hpp"

#include <algorithm>

#include "nashax/closure.hpp"
#include "nashax/errors.hpp"

namespace nashax {

using nlohmann::ordered_json;

namespace {

std::string space_of(const Game& g) {
  std::string out;
  for (std::size_t i = 0; i < g.num_players(); ++i) {
    if (i) out += "x";
    out += "{";
    const auto& l = g.strategies(i);
    for (std::size_t k = 0; k < l.size(); ++k) out += (k ? "," : "") + l[k];
    out += "}";
  }
  return out;
}

void add_step(ConstructionReport& r, std::string name, bool passed, std::string detail = {}) {
  r.steps.push_back({std::move(name), passed, std::move(detail)});
}

// Labeled solution sets of a reduction and of its parent restricted to it.
std::vector<LabeledProfile> labeled(const Game& g, const ProfileSet& set) {
  std::vector<LabeledProfile> out;
  for (std::size_t s : set) out.push_back(g.labels_of(s));
  std::sort(out.begin(), out.end());
  return out;
}

// Singleton spec {s_i} for every player except `open`, which keeps `kept`.
SubsetSpec around(const Game& g, std::size_t s, std::size_t open, std::vector<std::size_t> kept) {
  SubsetSpec spec;
  for (std::size_t i = 0; i < g.num_players(); ++i) {
    spec.kept.push_back(i == open ? kept : std::vector<std::size_t>{g.component(s, i)});
  }
  return SubsetSpec::from_indices(std::move(spec.kept));
}

bool has_dummy(ReductionFlavor f) {
  return f == ReductionFlavor::dummy || f == ReductionFlavor::dummy_and_quasi;
}

ConstructionReport new_report(std::string construction, const Game& g, std::size_t s) {
  ConstructionReport r;
  r.construction = std::move(construction);
  r.game_id = g.id();
  r.profile = g.labels_of(s);
  return r;
}

}  // namespace

bool ConstructionReport::all_passed() const {
  return std::all_of(steps.begin(), steps.end(), [](const Assertion& a) { return a.passed; });
}

std::vector<Axiom> ConstructionReport::violated() const {
  std::vector<Axiom> out;
  for (const auto& p : probes) {
    if (!p.holds) out.push_back(p.axiom);
  }
  return out;
}

ConstructionReport lemma1a_witness(const ConceptSpec& spec, const Game& g, std::size_t s) {
  if (s >= g.num_profiles()) throw GameError("profile index out of range");
  const ProfileSet phi = eval_concept(spec, g);
  if (!contains(phi, s)) {
    throw PreconditionError(g.format_profile(s) + " is not in " + concept_name(spec) + "(G)");
  }

  std::optional<std::pair<std::size_t, std::size_t>> deviation;
  for (std::size_t j = 0; j < g.num_players() && !deviation; ++j) {
    const std::size_t sj = g.component(s, j);
    for (std::size_t t = 0; t < g.num_strategies(j); ++t) {
      const std::size_t dev = s - sj * g.stride(j) + t * g.stride(j);
      if (g.strictly_prefers(j, dev, s)) {
        deviation.emplace(j, t);
        break;
      }
    }
  }
  if (!deviation) throw PreconditionError(g.format_profile(s) + " is a Nash equilibrium");
  const auto [j, t] = *deviation;
  const std::size_t sj = g.component(s, j);
  const std::size_t dev = s - sj * g.stride(j) + t * g.stride(j);

  ConstructionReport r = new_report("lemma1a", g, s);
  r.concept_id = concept_name(spec);

  const SubsetSpec spec1 = around(g, s, j, {sj, t});
  const SubsetSpec spec2 = around(g, s, j, {t});
  const Game g1 = restrict(g, spec1);
  const Game g2 = restrict(g, spec2);
  r.games.push_back({"G'", spec1, g1});
  r.games.push_back({"G''", spec2, g2});

  add_step(r, "deviation is profitable", g.strictly_prefers(j, dev, s),
           "player " + std::to_string(j + 1) + " prefers " + g.format_profile(dev) + " to " +
               g.format_profile(s));
  const ReductionFlavor f1 = reduction_flavor(g, spec1);
  const ReductionFlavor f2 = reduction_flavor(g, spec2);
  add_step(r, "G' is a dummy or quasi-dummy reduction of G",
           is_reduction(g1, g) && has_dummy_or_quasi(f1), to_string(f1));
  add_step(r, "G'' is a dummy or quasi-dummy reduction of G",
           is_reduction(g2, g) && has_dummy_or_quasi(f2), to_string(f2));
  add_step(r, "G'' is a strict reduction of G'", is_strict_reduction(g2, g1), space_of(g2));
  const ProfileSet jo2 = jointly_optimal(g2);
  add_step(r, "JO forces the deviation in G''", jo2 == ProfileSet{0},
           "jointly_optimal(G'')=" + format_profiles(g2, jo2));

  const ProfileSet phi1 = eval_concept(spec, g1);
  const ProfileSet phi2 = eval_concept(spec, g2);

  r.probes.push_back({Axiom::jo, contains(phi2, 0),
                      "phi(G'')=" + format_profiles(g2, phi2) + ", JO requires " +
                          g2.format_profile(0)});
  r.probes.push_back({Axiom::isds, labeled(g1, phi1) == labeled(g2, phi2),
                      "phi(G')=" + format_profiles(g1, phi1) + ", phi(G'')=" +
                          format_profiles(g2, phi2)});
  r.probes.push_back({Axiom::iis, contains(phi1, child_index(spec1, g, s)),
                      "s=" + g.format_profile(s) + ", phi(G')=" + format_profiles(g1, phi1)});

  const auto bad = r.violated();
  std::string names;
  for (Axiom a : bad) names += (names.empty() ? "" : ",") + std::string(to_string(a));
  add_step(r, "at least one of JO, ISDS, IIS is violated", !bad.empty(),
           names.empty() ? "none" : names);
  return r;
}

ConstructionReport lemma1b_construct(const Game& g, std::size_t s) {
  if (s >= g.num_profiles()) throw GameError("profile index out of range");
  const std::size_t n = g.num_players();
  if (n < 2) throw PreconditionError("the merge construction needs at least two players");
  if (!contains(nash(g), s)) {
    throw PreconditionError(g.format_profile(s) + " is not a Nash equilibrium");
  }

  ConstructionReport r = new_report("lemma1b", g, s);
  std::vector<SubsetSpec> parts;
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<std::size_t> all(g.num_strategies(k));
    for (std::size_t x = 0; x < all.size(); ++x) all[x] = x;
    parts.push_back(around(g, s, k, std::move(all)));
    const Game gk = restrict(g, parts.back());
    const std::string role = "G^" + std::to_string(k + 1);
    r.games.push_back({role, parts.back(), gk});

    const ReductionFlavor f = reduction_flavor(g, parts.back());
    add_step(r, role + " is a reduction of G with a dummy player",
             is_reduction(gk, g) && has_dummy(f), to_string(f));
    const ProfileSet jo = jointly_optimal(gk);
    add_step(r, "s is jointly optimal in " + role,
             contains(jo, child_index(parts.back(), g, s)),
             "jointly_optimal=" + format_profiles(gk, jo));
  }

  SubsetSpec t = parts[0];
  for (std::size_t l = 1; l < n; ++l) {
    const SubsetSpec prev = t;
    t = join(prev, parts[l]);
    const std::string role = "H^" + std::to_string(l);

    // Expected player-wise union: players 0..l keep everything, the rest s_i.
    bool algebra = true;
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t expect = i <= l ? g.num_strategies(i) : 1;
      algebra = algebra && t.size(i) == expect && contains_profile(t, g, s);
    }
    add_step(r, role + " strategy sets are the player-wise union", algebra);

    const Game h = restrict(g, t);
    r.games.push_back({role, t, h});
    add_step(r, role + " equals the merge of its parts", h == merge(g, prev, parts[l]));
    if (l + 1 < n) {
      const ReductionFlavor f = reduction_flavor(g, t);
      add_step(r, role + " is a reduction of G with a dummy player",
               is_reduction(h, g) && has_dummy(f), to_string(f));
    } else {
      add_step(r, role + " equals G", h.id() == g.id() && h == g, h.id());
    }
  }
  return r;
}

ConstructionReport lemma1b_verify(const Game& g, std::size_t s) {
  if (g.num_players() >= 2) return lemma1b_construct(g, s);
  if (s >= g.num_profiles()) throw GameError("profile index out of range");
  if (!contains(nash(g), s)) {
    throw PreconditionError(g.format_profile(s) + " is not a Nash equilibrium");
  }
  ConstructionReport r = new_report("lemma1b", g, s);
  const ProfileSet jo = jointly_optimal(g);
  add_step(r, "s is jointly optimal in G", contains(jo, s),
           "jointly_optimal=" + format_profiles(g, jo));
  return r;
}

ProfileSet brute_force_nash(const Game& g) {
  ProfileSet out;
  for (std::size_t s = 0; s < g.num_profiles(); ++s) {
    const Profile p = g.profile_at(s);
    bool stable = true;
    for (std::size_t i = 0; i < g.num_players() && stable; ++i) {
      for (std::size_t t = 0; t < g.num_strategies(i) && stable; ++t) {
        Profile q = p;
        q.indices[i] = t;
        stable = g.weakly_prefers(i, s, g.linear_index(q));
      }
    }
    if (stable) out.push_back(s);
  }
  return out;
}

bool Theorem1Report::holds() const {
  return oracle_mismatches.empty() &&
         std::none_of(verdicts.begin(), verdicts.end(), [](const AxiomVerdict& v) { return v.violated; });
}

Theorem1Report verify_theorem1(const GameClass& cls, const CheckOptions& options) {
  if (auto gap = find_closure_gap(cls, ReductionFilter::dummy_or_quasi)) {
    const Game& g = cls.game(gap->first);
    throw Error("class is not d-closed: " + g.id() + " lacks its reduction " +
                space_of(restrict(g, gap->second)));
  }
  Theorem1Report r;
  const ClassAnalysis analysis(cls, options.jobs);
  const SolutionTable table(cls, ConceptSpec{ConceptId::nash}, options.jobs);
  for (Axiom a : {Axiom::iis, Axiom::mc, Axiom::isds, Axiom::jo}) {
    r.verdicts.push_back(check(a, analysis, table, options));
  }
  for (std::size_t k = 0; k < cls.size(); ++k) {
    if (table[k] != brute_force_nash(cls.game(k))) r.oracle_mismatches.push_back(cls.game(k).id());
  }
  r.games_checked = cls.size();
  return r;
}

bool OnePlayerLemmaReport::holds() const {
  for (const auto& c : concepts) {
    if (!c.applicable) continue;
    if (!c.part_a_ok() || !c.part_b_ok()) return false;
    for (const auto& a : c.replays) {
      if (!a.passed) return false;
    }
    if (!c.replays.empty() && !(c.isds && c.isds->violated)) return false;
  }
  return true;
}

OnePlayerLemmaReport verify_one_player_lemma(const GameClass& cls, const CheckOptions& options) {
  for (const Game& g : cls.games()) {
    if (g.num_players() != 1) throw Error("class is not one-player: " + g.id());
  }
  if (auto gap = find_closure_gap(cls, ReductionFilter::strict)) {
    const Game& g = cls.game(gap->first);
    throw Error("class is not strictly closed: " + g.id() + " lacks its reduction " +
                space_of(restrict(g, gap->second)));
  }

  OnePlayerLemmaReport report;
  const ClassAnalysis analysis(cls, options.jobs);
  std::vector<ProfileSet> ne;
  for (const Game& g : cls.games()) ne.push_back(nash(g));

  for (ConceptId id : registered_concepts()) {
    OnePlayerConceptResult c;
    c.spec = ConceptSpec{id};
    std::optional<SolutionTable> table;
    try {
      table.emplace(cls, c.spec, options.jobs);
    } catch (const DomainError& e) {
      c.applicable = false;
      c.skip_reason = e.what();
      report.concepts.push_back(std::move(c));
      continue;
    }
    c.isds = check(Axiom::isds, analysis, *table, options);
    c.jo = check(Axiom::jo, analysis, *table, options);
    c.equals_nash = true;
    for (std::size_t k = 0; k < cls.size(); ++k) {
      const Game& g = cls.game(k);
      const ProfileSet& phi = (*table)[k];
      c.equals_nash = c.equals_nash && phi == ne[k];
      for (std::size_t s : phi) {
        if (!contains(ne[k], s) && c.subset_of_nash) {
          c.subset_of_nash = false;
          c.subset_witness = g.id() + " " + g.format_profile(s);
        }
      }
      for (std::size_t s : ne[k]) {
        if (!contains(phi, s) && c.superset_of_nash) {
          c.superset_of_nash = false;
          c.superset_witness = g.id() + " " + g.format_profile(s);
        }
      }
      for (std::size_t s : phi) {
        if (contains(ne[k], s)) continue;
        std::vector<std::size_t> rest;
        for (std::size_t x = 0; x < g.num_profiles(); ++x) {
          if (x != s) rest.push_back(x);
        }
        const SubsetSpec spec{{rest}};
        const Game reduced = restrict(g, spec);
        const std::string removed = g.strategies(0)[s];
        const auto present = cls.find(reduced.id());
        const bool strict = is_strict_reduction(reduced, g);
        c.replays.push_back({"removing " + removed + " from " + space_of(g) +
                                 " is a strict reduction in the class",
                             strict && present.has_value(), space_of(reduced)});
        if (!present) continue;
        const ProfileSet& after = (*table)[*present];
        c.replays.push_back({"removing " + removed + " changes the solution set",
                             labeled(g, phi) != labeled(reduced, after),
                             "phi(G)=" + format_profiles(g, phi) + ", phi(G')=" +
                                 format_profiles(reduced, after)});
      }
    }
    report.concepts.push_back(std::move(c));
  }
  return report;
}

ordered_json report_to_json(const ConstructionReport& report) {
  ordered_json out;
  out["construction"] = report.construction;
  if (!report.concept_id.empty()) out["concept"] = report.concept_id;
  out["game"] = report.game_id;
  out["profile"] = report.profile;
  out["result"] = report.all_passed() ? "pass" : "failed";
  ordered_json games = ordered_json::array();
  for (const auto& g : report.games) {
    ordered_json gj;
    gj["role"] = g.role;
    gj["id"] = g.game.id();
    gj["strategies"] = [&] {
      std::vector<Labels> s;
      for (std::size_t i = 0; i < g.game.num_players(); ++i) s.push_back(g.game.strategies(i));
      return s;
    }();
    games.push_back(std::move(gj));
  }
  out["games"] = std::move(games);
  ordered_json steps = ordered_json::array();
  for (const auto& s : report.steps) {
    steps.push_back({{"name", s.name}, {"result", s.passed ? "pass" : "failed"}, {"detail", s.detail}});
  }
  out["steps"] = std::move(steps);
  if (!report.probes.empty()) {
    ordered_json probes = ordered_json::array();
    for (const auto& p : report.probes) {
      probes.push_back({{"axiom", std::string(to_string(p.axiom))},
                        {"result", p.holds ? "pass" : "violated"},
                        {"detail", p.detail}});
    }
    out["axioms"] = std::move(probes);
  }
  return out;
}

}  // namespace nashax
