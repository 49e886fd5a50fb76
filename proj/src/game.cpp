#include "hatlab/game.hpp"

#include <algorithm>
#include <set>

#include "hatlab/error.hpp"

namespace hatlab {

VisibilityGraph VisibilityGraph::lists(std::vector<std::vector<Prisoner>> seen) {
  VisibilityGraph v;
  v.finite_ = true;
  v.seen_.reserve(seen.size());
  for (auto& s : seen) v.seen_.push_back(PrisonerSet::finite(std::move(s)));
  return v;
}

VisibilityGraph VisibilityGraph::complete(std::size_t n) {
  std::vector<std::vector<Prisoner>> seen(n);
  for (Prisoner a = 0; a < n; ++a) {
    for (Prisoner b = 0; b < n; ++b) {
      if (a != b) seen[a].push_back(b);
    }
  }
  return lists(std::move(seen));
}

VisibilityGraph VisibilityGraph::omega_complete(std::map<Prisoner, std::vector<Prisoner>> unseen) {
  VisibilityGraph v;
  v.finite_ = false;
  for (auto& [a, list] : unseen) {
    std::vector<Prisoner> others;
    for (Prisoner b : list) {
      if (b != a) others.push_back(b);
    }
    if (!others.empty()) v.unseen_.emplace(a, PrisonerSet::finite(std::move(others)));
  }
  return v;
}

PrisonerSet VisibilityGraph::seen_by(Prisoner a) const {
  if (finite_) {
    if (a >= seen_.size()) fail(ErrorCode::kUnknownPrisonerId, std::to_string(a));
    return seen_[a];
  }
  PrisonerSet excluded = PrisonerSet::single(a);
  if (auto it = unseen_.find(a); it != unseen_.end()) excluded = excluded.unite(it->second);
  return excluded.complement();
}

InningFunction InningFunction::list(std::vector<Inning> innings) {
  InningFunction f;
  f.finite_ = true;
  f.list_ = std::move(innings);
  return f;
}

InningFunction InningFunction::omega(Inning default_inning, std::map<Prisoner, Inning> exceptions) {
  InningFunction f;
  f.finite_ = false;
  f.default_ = default_inning;
  for (const auto& [a, beta] : exceptions) {
    if (beta != default_inning) f.exceptions_.emplace(a, beta);
  }
  return f;
}

Inning InningFunction::of(Prisoner a) const {
  if (finite_) {
    if (a >= list_.size()) fail(ErrorCode::kUnknownPrisonerId, std::to_string(a));
    return list_[a];
  }
  auto it = exceptions_.find(a);
  return it == exceptions_.end() ? default_ : it->second;
}

Inning InningFunction::count() const {
  Inning m = finite_ ? 0 : default_;
  for (Inning beta : list_) m = std::max(m, beta);
  for (const auto& [a, beta] : exceptions_) m = std::max(m, beta);
  return m;
}

Game Game::make(PrisonerCount prisoners, ColorSpace colors, VisibilityGraph visibility,
                InningFunction innings, std::vector<std::string> names, std::size_t min_prisoners) {
  if (prisoners && *prisoners < min_prisoners) {
    fail(ErrorCode::kTooFewPrisoners, std::to_string(*prisoners) + " prisoner(s)");
  }
  if (visibility.is_finite() != prisoners.has_value() || innings.is_finite() != prisoners.has_value()) {
    fail(ErrorCode::kInvalidGameSpec, "visibility and innings must match the prisoner set");
  }
  if (prisoners) {
    const std::size_t n = *prisoners;
    if (visibility.size() != n) {
      fail(ErrorCode::kInvalidGameSpec, "visibility lists " + std::to_string(visibility.size()) +
                                            " prisoners, expected " + std::to_string(n));
    }
    if (innings.values().size() != n) {
      fail(ErrorCode::kInvalidGameSpec, "innings list " + std::to_string(innings.values().size()) +
                                            " prisoners, expected " + std::to_string(n));
    }
    for (Prisoner a = 0; a < n; ++a) {
      for (Prisoner b : visibility.seen_by(a).listed()) {
        if (b >= n) fail(ErrorCode::kUnknownPrisonerId, std::to_string(b) + " (seen by " + std::to_string(a) + ")");
        if (b == a) fail(ErrorCode::kLoopInVisibility, std::to_string(a));
      }
    }
    if (!names.empty() && names.size() != n) {
      fail(ErrorCode::kInvalidGameSpec, "names must list every prisoner");
    }
  } else if (!names.empty()) {
    fail(ErrorCode::kInvalidGameSpec, "omega games cannot name prisoners");
  }

  std::set<Inning> used;
  if (innings.is_finite()) {
    used.insert(innings.values().begin(), innings.values().end());
  } else {
    used.insert(innings.default_inning());
    for (const auto& [a, beta] : innings.exceptions()) used.insert(beta);
  }
  if (used.count(0)) fail(ErrorCode::kInvalidGameSpec, "inning indices start at 1");
  const Inning in = innings.count();
  for (Inning beta = 1; beta <= in; ++beta) {
    if (!used.count(beta)) fail(ErrorCode::kNonSurjectiveInnings, "missing inning " + std::to_string(beta));
  }

  Game g;
  g.prisoners_ = prisoners;
  g.colors_ = colors;
  g.visibility_ = std::move(visibility);
  g.innings_ = std::move(innings);
  g.names_ = std::move(names);
  return g;
}

std::size_t Game::size() const {
  if (!prisoners_) fail(ErrorCode::kRequiresFiniteGame, "omega game has no finite size");
  return *prisoners_;
}

std::string Game::name_of(Prisoner a) const {
  if (a < names_.size()) return names_[a];
  return std::to_string(a);
}

void Game::require_prisoner(Prisoner a) const {
  if (!has_prisoner(a)) fail(ErrorCode::kUnknownPrisonerId, std::to_string(a));
}

PrisonerSet Game::prisoners() const {
  return prisoners_ ? PrisonerSet::range(*prisoners_) : PrisonerSet::everyone();
}

PrisonerSet Game::heard_by(Prisoner a) const {
  require_prisoner(a);
  const Inning mine = inning(a);
  if (prisoners_) {
    std::vector<Prisoner> heard;
    for (Prisoner b = 0; b < *prisoners_; ++b) {
      if (innings_.of(b) < mine) heard.push_back(b);
    }
    return PrisonerSet::finite(std::move(heard));
  }
  std::vector<Prisoner> listed;
  if (innings_.default_inning() < mine) {
    // everyone but the exceptions that speak at or after `mine`
    for (const auto& [b, beta] : innings_.exceptions()) {
      if (beta >= mine) listed.push_back(b);
    }
    return PrisonerSet::cofinite(std::move(listed));
  }
  for (const auto& [b, beta] : innings_.exceptions()) {
    if (beta < mine) listed.push_back(b);
  }
  return PrisonerSet::finite(std::move(listed));
}

bool Game::has_complete_visibility() const {
  if (!prisoners_) return visibility_.unseen_exceptions().empty();
  for (Prisoner a = 0; a < *prisoners_; ++a) {
    if (visibility_.seen_by(a).size() != *prisoners_ - 1) return false;
  }
  return true;
}

std::vector<Prisoner> Game::explicit_prisoners() const {
  if (prisoners_) {
    std::vector<Prisoner> all(*prisoners_);
    for (Prisoner a = 0; a < all.size(); ++a) all[a] = a;
    return all;
  }
  std::set<Prisoner> out;
  for (const auto& [a, unseen] : visibility_.unseen_exceptions()) {
    out.insert(a);
    out.insert(unseen.listed().begin(), unseen.listed().end());
  }
  for (const auto& [a, beta] : innings_.exceptions()) out.insert(a);
  return {out.begin(), out.end()};
}

Prisoner Game::generic_prisoner(const PrisonerSet& avoid) const {
  if (prisoners_) fail(ErrorCode::kInternal, "finite games have no generic prisoner");
  if (!avoid.is_finite()) fail(ErrorCode::kInternal, "cannot avoid a cofinite set");
  const PrisonerSet blocked = avoid.unite(PrisonerSet::finite(explicit_prisoners()));
  Prisoner g = 0;
  while (blocked.contains(g)) ++g;
  return g;
}

GameStructure derive_structure(const Game& game) {
  GameStructure s;
  s.num_innings = game.num_innings();
  const InningFunction& inn = game.innings();
  if (game.is_finite()) {
    std::vector<std::vector<Prisoner>> sets(s.num_innings);
    for (Prisoner a = 0; a < game.size(); ++a) sets[inn.of(a) - 1].push_back(a);
    for (auto& members : sets) s.inning_sets.push_back(PrisonerSet::finite(std::move(members)));
  } else {
    std::vector<Prisoner> keys;
    std::vector<std::vector<Prisoner>> sets(s.num_innings);
    for (const auto& [a, beta] : inn.exceptions()) {
      keys.push_back(a);
      sets[beta - 1].push_back(a);
    }
    for (Inning beta = 1; beta <= s.num_innings; ++beta) {
      PrisonerSet set = PrisonerSet::finite(sets[beta - 1]);
      if (beta == inn.default_inning()) set = set.unite(PrisonerSet::cofinite(keys));
      s.inning_sets.push_back(std::move(set));
    }
  }
  s.first_speakers = s.inning_sets.front();
  PrisonerSet acc;
  for (Inning beta = 1; beta <= s.num_innings; ++beta) {
    s.heard_before.push_back(acc);
    acc = acc.unite(s.inning_sets[beta - 1]);
  }
  return s;
}

ConditionProfile condition_profile(const Game& game) {
  if (game.num_innings() < 2) {
    fail(ErrorCode::kInapplicableConditions, "the game is simultaneous (IN = 1)");
  }
  const GameStructure st = derive_structure(game);
  const PrisonerSet all = game.prisoners();

  std::vector<Prisoner> probes = game.explicit_prisoners();
  if (!game.is_finite()) probes.push_back(game.generic_prisoner(PrisonerSet::finite(probes)));

  // A_{n-} = A_n u ... u A_IN
  std::vector<PrisonerSet> from(st.num_innings + 1);
  for (Inning beta = st.num_innings; beta >= 1; --beta) from[beta - 1] = from[beta].unite(st.inning_set(beta));

  ConditionProfile p;
  const PrisonerSet& first = st.first_speakers;
  p.s1 = first.is_finite() && first.size() == 1;
  p.s5 = first.is_finite() && first.size() == 2;
  p.s2 = p.s3 = p.s4 = p.s6 = true;
  for (Prisoner a : probes) {
    const PrisonerSet self = PrisonerSet::single(a);
    const PrisonerSet seen = game.seen_by(a);
    const PrisonerSet heard = st.hearing_of_inning(game.inning(a));
    const PrisonerSet others = all.minus(self);
    if (!(seen.unite(heard) == others)) p.s2 = false;
    if (!seen.intersect(heard).empty()) p.s3 = false;
    const Inning beta = game.inning(a);
    if (beta == 1) {
      if (!(seen == others)) p.s4 = false;
    } else if (!first.unite(from[beta - 1]).minus(self).subset_of(seen)) {
      p.s6 = false;
    }
  }
  return p;
}

PartialColoring view_of(const Game& game, Prisoner a, const Coloring& f) {
  game.require_prisoner(a);
  return PartialColoring::restrict(f, game.seen_by(a));
}

void require_coloring(const Game& game, const Coloring& f) {
  const ColorSpace& space = game.colors();
  if (game.is_finite()) {
    if (!f.is_finite() || f.size() != game.size()) {
      fail(ErrorCode::kInvalidArgument, "coloring does not assign every prisoner of a " +
                                            std::to_string(game.size()) + "-prisoner game");
    }
    for (Prisoner a = 0; a < f.size(); ++a) {
      if (!space.contains(f.at(a))) {
        fail(ErrorCode::kColorOutOfSpace, to_string(f.at(a)) + " at prisoner " + std::to_string(a));
      }
    }
    return;
  }
  if (f.is_finite()) fail(ErrorCode::kInvalidArgument, "omega games need an omega coloring");
  if (!space.contains(f.base())) fail(ErrorCode::kColorOutOfSpace, "base " + to_string(f.base()));
  for (const auto& [a, c] : f.exceptions()) {
    if (!space.contains(c)) fail(ErrorCode::kColorOutOfSpace, to_string(c) + " at prisoner " + std::to_string(a));
  }
}

Coloring mutate_coloring(const Game& game, const Coloring& f,
                         const std::vector<std::pair<Prisoner, Color>>& changes) {
  if (changes.empty() || changes.size() > 2) {
    fail(ErrorCode::kInvalidArgument, "one or two changes expected");
  }
  if (changes.size() == 2 && changes[0].first == changes[1].first) {
    fail(ErrorCode::kDuplicateTarget, std::to_string(changes[0].first));
  }
  Coloring g = f;
  for (const auto& [a, c] : changes) {
    game.require_prisoner(a);
    if (!game.colors().contains(c)) fail(ErrorCode::kColorOutOfSpace, to_string(c));
    g = g.with(a, c);
  }
  return g;
}

}  // namespace hatlab
