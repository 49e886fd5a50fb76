#include "hatlab/constructions.hpp"

#include <algorithm>
#include <deque>

#include "hatlab/error.hpp"
#include "hatlab/game_json.hpp"

namespace hatlab {
namespace {



class RuleStrategy final : public Strategy {
 public:
  using Rule = std::function<Color(const PartialColoring&, const PartialColoring&)>;
  explicit RuleStrategy(Rule rule) : rule_(std::move(rule)) {}

  Color declare(const PartialColoring& history, const PartialColoring& view) const override {
    return rule_(history, view);
  }

 private:
  Rule rule_;
};

Predictor::StrategyPtr rule(RuleStrategy::Rule r) { return std::make_shared<RuleStrategy>(std::move(r)); }

// Sum of every value of a partial coloring; cofinite domains need base zero.
Color sum_of(const ColorSpace& space, const PartialColoring& p) {
  if (!p.domain().is_finite() && p.base() != 0) {
    fail(ErrorCode::kInvalidArgument, "sum over infinitely many nonzero values");
  }
  Color s = 0;
  for (const auto& [a, c] : p.explicit_values()) s = space.add(s, c);
  return s;
}

void require_multi_inning(const Game& game) {
  if (game.num_innings() < 2) fail(ErrorCode::kRequiresMultiInning, "IN = 1");
}

Prisoner only_member(const PrisonerSet& s) { return s.listed().front(); }

// Finite games get one strategy per prisoner; omega games list the explicit
// prisoners and build everyone else on demand.
Predictor assemble(const Game& game, std::string name, Json params,
                   const std::function<Predictor::StrategyPtr(Prisoner)>& make) {
  std::map<Prisoner, Predictor::StrategyPtr> strategies;
  for (Prisoner a : game.explicit_prisoners()) strategies.emplace(a, make(a));
  Predictor::GenericFactory generic;
  if (!game.is_finite()) generic = make;
  return Predictor(game, std::move(name), std::move(params), std::move(strategies), std::move(generic));
}

}  // namespace

Predictor mod_sum_predictor(const Game& game) {
  if (!game.is_finite()) fail(ErrorCode::kRequiresFiniteGame, "mod-sum needs finitely many prisoners");
  const ColorSpace space = game.colors();
  if (!space.is_finite() || space.modulus() != game.size()) {
    fail(ErrorCode::kRequiresSquareGame, std::to_string(game.size()) + " prisoners with colors " + space.describe());
  }
  if (!game.has_complete_visibility()) fail(ErrorCode::kRequiresCompleteVisibility, "mod-sum");
  if (!game.is_simultaneous()) fail(ErrorCode::kRequiresSimultaneous, "mod-sum");
  return assemble(game, "mod-sum", Json::object(), [space](Prisoner m) {
    return rule([space, m](const PartialColoring&, const PartialColoring& view) {
      return space.sub(Color(m), sum_of(space, view));
    });
  });
}

Predictor cycle_parity_predictor(const Game& game, const std::vector<Prisoner>& cycle) {
  const ColorSpace space = game.colors();
  if (!space.is_finite() || space.modulus() != 2) fail(ErrorCode::kRequiresTwoColors, space.describe());
  if (!game.is_simultaneous()) fail(ErrorCode::kRequiresSimultaneous, "cycle-parity");
  if (cycle.size() < 2) fail(ErrorCode::kNotACycle, "a cycle needs at least two prisoners");
  std::map<Prisoner, std::size_t> position;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    game.require_prisoner(cycle[i]);
    if (!position.emplace(cycle[i], i).second) fail(ErrorCode::kNotACycle, "prisoner " + std::to_string(cycle[i]) + " repeats");
  }
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    const Prisoner next = cycle[(i + 1) % cycle.size()];
    if (!game.visibility().sees(cycle[i], next)) {
      fail(ErrorCode::kNotACycle, std::to_string(cycle[i]) + " does not see " + std::to_string(next));
    }
  }
  return assemble(game, "cycle-parity", Json{{"cycle", cycle}}, [cycle, position](Prisoner a) {
    auto it = position.find(a);
    if (it == position.end()) {
      return rule([](const PartialColoring&, const PartialColoring&) { return Color(0); });
    }
    const std::size_t i = it->second;
    const Prisoner next = cycle[(i + 1) % cycle.size()];
    if (i == 0) return rule([next](const PartialColoring&, const PartialColoring& view) { return view.at(next); });
    return rule([next](const PartialColoring&, const PartialColoring& view) { return Color(1 - view.at(next)); });
  });
}

Predictor hint_sum_predictor(const Game& game) {
  require_multi_inning(game);
  const ConditionProfile prof = condition_profile(game);
  if (!prof.s1 || !prof.s2) fail(ErrorCode::kRequiresS1S2, "hint-sum");
  const Prisoner s = only_member(derive_structure(game).first_speakers);
  if (!(game.seen_by(s) == game.prisoners().minus(PrisonerSet::single(s)))) {
    fail(ErrorCode::kRequiresS1S2, "the first speaker must see every other hat");
  }
  const ColorSpace space = game.colors();
  return assemble(game, "hint-sum", Json::object(), [space, s](Prisoner a) {
    if (a == s) {
      return rule([space](const PartialColoring&, const PartialColoring& view) { return sum_of(space, view); });
    }
    return rule([space, s](const PartialColoring& history, const PartialColoring& view) {
      // each other prisoner is counted once, by declaration when heard
      const Color heard = sum_of(space, history.without(s));
      const Color seen = sum_of(space, view.restricted_to(history.domain().complement()));
      return space.sub(space.sub(history.at(s), heard), seen);
    });
  });
}

Predictor dual_hint_predictor(const Game& game) {
  const ColorSpace space = game.colors();
  if (!space.is_finite() || space.modulus() != 2) fail(ErrorCode::kRequiresTwoColors, space.describe());
  require_multi_inning(game);
  const ConditionProfile prof = condition_profile(game);
  if (!prof.s4 || !prof.s5 || !prof.s6) fail(ErrorCode::kRequiresS4S5S6, "dual-hint");
  const PrisonerSet first = derive_structure(game).first_speakers;
  const Prisoner s0 = first.listed()[0];
  const Prisoner s1 = first.listed()[1];
  return assemble(game, "dual-hint", Json::object(), [space, first, s0, s1](Prisoner a) {
    if (a == s0 || a == s1) {
      const Prisoner other = a == s0 ? s1 : s0;
      const Color index = a == s0 ? 0 : 1;
      return rule([space, other, index](const PartialColoring&, const PartialColoring& view) {
        return space.sub(space.add(sum_of(space, view.without(other)), index), view.at(other));
      });
    }
    return rule([space, first, s0, s1](const PartialColoring& history, const PartialColoring& view) {
      // the first speaker whose declaration matches its hat knows the parity
      Color parity = 0;
      if (history.at(s1) == view.at(s1)) parity = space.add(parity, 1);
      Color decl = space.sub(space.sub(parity, view.at(s0)), view.at(s1));
      decl = space.sub(decl, sum_of(space, history.restricted_to(first.complement())));
      const PrisonerSet unheard = history.domain().unite(first).complement();
      return space.sub(decl, sum_of(space, view.restricted_to(unheard)));
    });
  });
}

Predictor bijection_hint_predictor(const Game& game) {
  if (game.colors().is_finite()) fail(ErrorCode::kRequiresIntColors, game.colors().describe());
  if (!game.is_finite()) fail(ErrorCode::kRequiresFiniteGame, "bijection-hint encodes finitely many hats");
  require_multi_inning(game);
  const ConditionProfile prof = condition_profile(game);
  if (!prof.s1 || !prof.s4) fail(ErrorCode::kRequiresS1S4, "bijection-hint");
  const Prisoner s = only_member(derive_structure(game).first_speakers);
  std::vector<Prisoner> others = game.prisoners().minus(PrisonerSet::single(s)).listed();
  const Tupler tupler = nat_tupler(others.size());
  return assemble(game, "bijection-hint", Json::object(), [s, others, tupler](Prisoner a) {
    if (a == s) {
      return rule([others, tupler](const PartialColoring&, const PartialColoring& view) {
        std::vector<Color> tuple;
        for (Prisoner b : others) tuple.push_back(zigzag(view.at(b)));
        return tupler.encode(tuple);
      });
    }
    const std::size_t slot = static_cast<std::size_t>(std::find(others.begin(), others.end(), a) - others.begin());
    return rule([s, slot, tupler](const PartialColoring& history, const PartialColoring&) {
      const Color& code = history.at(s);
      if (code < 0) return Color(0);
      return unzigzag(tupler.decode(code)[slot]);
    });
  });
}

Predictor parity_hint_predictor(const Game& game, const ParityFunction& phi) {
  require_multi_inning(game);
  if (!phi.matches(game)) fail(ErrorCode::kParityDomainMismatch, "parity function built for another domain");
  const ConditionProfile prof = condition_profile(game);
  if (!prof.s1 || !prof.s2) fail(ErrorCode::kRequiresS1S2, "parity-hint");
  const Prisoner s = only_member(derive_structure(game).first_speakers);
  const ColorSpace space = game.colors();
  const PrisonerCount count = game.prisoner_count();
  Json params{{"phi", to_string(phi.provenance())}};
  return assemble(game, "parity-hint", params, [space, count, phi, s](Prisoner a) {
    if (a == s) {
      return rule([count, phi, s](const PartialColoring&, const PartialColoring& view) {
        return phi(view.merged(PartialColoring::of({{s, Color(0)}})).to_coloring(count));
      });
    }
    return rule([space, count, phi, s, a](const PartialColoring& history, const PartialColoring& view) {
      const PartialColoring unheard = view.restricted_to(history.domain().complement());
      const Coloring guess = history.with(s, 0).merged(PartialColoring::of({{a, Color(0)}})).merged(unheard).to_coloring(count);
      return space.sub(phi(guess), history.at(s));
    });
  });
}

Predictor finite_support_fep(const Game& game) {
  if (game.is_finite() || !game.has_complete_visibility() || !game.is_simultaneous()) {
    fail(ErrorCode::kRequiresOmegaCompleteSimultaneous, "fep-zero");
  }
  return assemble(game, "fep-zero", Json::object(), [](Prisoner) {
    return rule([](const PartialColoring&, const PartialColoring&) { return Color(0); });
  });
}

Restriction restrict_to_first_inning(const Game& game, const Predictor& p, const Color& fill) {
  require_multi_inning(game);
  if (!game.colors().contains(fill)) fail(ErrorCode::kColorOutOfSpace, "fill " + to_string(fill));
  if (!(p.game() == game)) fail(ErrorCode::kMismatchedPredictor, "predictor built for another game");
  const PrisonerSet first = derive_structure(game).first_speakers;
  if (!first.is_finite()) fail(ErrorCode::kRequiresFiniteGame, "the first inning is infinite");
  const std::vector<Prisoner> original = first.listed();

  std::vector<std::vector<Prisoner>> seen(original.size());
  std::vector<std::string> names;
  for (std::size_t i = 0; i < original.size(); ++i) {
    names.push_back(game.name_of(original[i]));
    for (std::size_t j = 0; j < original.size(); ++j) {
      if (game.visibility().sees(original[i], original[j])) seen[i].push_back(j);
    }
  }
  Game sub = Game::make(original.size(), game.colors(), VisibilityGraph::lists(std::move(seen)),
                        InningFunction::list(std::vector<Inning>(original.size(), 1)), std::move(names), 1);

  std::map<Prisoner, Predictor::StrategyPtr> strategies;
  for (std::size_t i = 0; i < original.size(); ++i) {
    const Prisoner a = original[i];
    auto inner = p.strategy_for(a);
    const PrisonerSet inner_seen = game.seen_by(a);
    strategies.emplace(i, rule([game, original, fill, inner, inner_seen](const PartialColoring&, const PartialColoring& view) {
      // extend the subgame view by `fill` on every prisoner it does not cover
      Coloring full;
      if (game.is_finite()) {
        full = Coloring::dense(std::vector<Color>(game.size(), fill));
      } else {
        full = Coloring::sparse({}, fill);
      }
      for (const auto& [j, c] : view.explicit_values()) full = full.with(original[j], c);
      return inner->declare(PartialColoring(), PartialColoring::restrict(full, inner_seen));
    }));
  }
  Predictor induced(sub, "first-inning", Json{{"of", p.name()}, {"fill", color_to_json(fill)}},
                    std::move(strategies));
  return {std::move(sub), std::move(induced), original};
}

Predictor restrict_colors(const Game& game, const Predictor& p, const std::set<Color>& subcolors, const Color& fill) {
  if (!subcolors.count(fill)) fail(ErrorCode::kFillOutsideSubcolors, to_string(fill));
  for (const Color& c : subcolors) {
    if (!game.colors().contains(c)) fail(ErrorCode::kColorOutOfSpace, to_string(c));
  }
  if (!(p.game() == game)) fail(ErrorCode::kMismatchedPredictor, "predictor built for another game");
  Json sub = Json::array();
  for (const Color& c : subcolors) sub.push_back(color_to_json(c));
  auto wrap = [p, subcolors, fill](Prisoner a) {
    auto inner = p.strategy_for(a);
    return rule([inner, subcolors, fill](const PartialColoring& history, const PartialColoring& view) {
      Color c = inner->declare(history, view);
      return subcolors.count(c) ? c : fill;
    });
  };
  return assemble(game, "restrict-colors", Json{{"of", p.name()}, {"subcolors", sub}, {"fill", color_to_json(fill)}}, wrap);
}

std::vector<Prisoner> find_cycle(const Game& game) {
  const std::size_t n = game.size();
  for (Prisoner start = 0; start < n; ++start) {
    // shortest path start -> ... -> start
    std::vector<long> parent(n, -1);
    std::deque<Prisoner> queue;
    for (Prisoner b : game.seen_by(start).listed()) {
      if (b == start) continue;
      if (parent[b] < 0) {
        parent[b] = static_cast<long>(start);
        queue.push_back(b);
      }
    }
    while (!queue.empty()) {
      const Prisoner x = queue.front();
      queue.pop_front();
      if (game.visibility().sees(x, start)) {
        std::vector<Prisoner> path{x};
        while (path.back() != start) path.push_back(static_cast<Prisoner>(parent[path.back()]));
        return {path.rbegin(), path.rend()};
      }
      for (Prisoner b : game.seen_by(x).listed()) {
        if (b != start && parent[b] < 0) {
          parent[b] = static_cast<long>(x);
          queue.push_back(b);
        }
      }
    }
  }
  return {};
}

Predictor build_named_predictor(const Game& game, const std::string& name, const std::vector<Prisoner>& cycle) {
  if (name == "mod-sum") return mod_sum_predictor(game);
  if (name == "cycle-parity") {
    if (!cycle.empty()) return cycle_parity_predictor(game, cycle);
    if (!game.is_finite()) fail(ErrorCode::kRequiresFiniteGame, "cycle-parity needs an explicit cycle");
    const std::vector<Prisoner> found = find_cycle(game);
    if (found.empty()) fail(ErrorCode::kNotACycle, "the visibility graph is acyclic");
    return cycle_parity_predictor(game, found);
  }
  if (name == "hint-sum") return hint_sum_predictor(game);
  if (name == "dual-hint") return dual_hint_predictor(game);
  if (name == "bijection-hint") return bijection_hint_predictor(game);
  if (name == "parity-hint") return parity_hint_predictor(game, finite_parity(game.colors(), game.prisoner_count()));
  if (name == "fep-zero") return finite_support_fep(game);
  fail(ErrorCode::kInvalidArgument, "unknown predictor \"" + name + "\"");
}

}  // namespace hatlab
