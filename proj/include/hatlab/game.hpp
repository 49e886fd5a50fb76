#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hatlab/color.hpp"
#include "hatlab/coloring.hpp"
#include "hatlab/prisoner_set.hpp"

namespace hatlab {

// Number of prisoners; std::nullopt stands for omega.
using PrisonerCount = std::optional<std::size_t>;
inline constexpr std::nullopt_t kOmega = std::nullopt;

using Inning = unsigned;

// Who sees whom. Finite games list V(a) per prisoner; omega games are
// complete except for finitely many prisoners with a finite unseen list.
class VisibilityGraph {
 public:
  VisibilityGraph() = default;

  static VisibilityGraph lists(std::vector<std::vector<Prisoner>> seen);
  static VisibilityGraph complete(std::size_t n);
  static VisibilityGraph omega_complete(std::map<Prisoner, std::vector<Prisoner>> unseen = {});

  bool is_finite() const { return finite_; }
  std::size_t size() const { return seen_.size(); }
  PrisonerSet seen_by(Prisoner a) const;
  bool sees(Prisoner a, Prisoner b) const { return seen_by(a).contains(b); }

  const std::vector<PrisonerSet>& seen_lists() const { return seen_; }
  const std::map<Prisoner, PrisonerSet>& unseen_exceptions() const { return unseen_; }

  friend bool operator==(const VisibilityGraph&, const VisibilityGraph&) = default;

 private:
  bool finite_ = true;
  std::vector<PrisonerSet> seen_;
  std::map<Prisoner, PrisonerSet> unseen_;
};

// The inning function I: A -> {1, ..., IN}.
class InningFunction {
 public:
  InningFunction() = default;

  static InningFunction list(std::vector<Inning> innings);
  static InningFunction omega(Inning default_inning, std::map<Prisoner, Inning> exceptions = {});

  bool is_finite() const { return finite_; }
  Inning of(Prisoner a) const;
  Inning count() const;

  const std::vector<Inning>& values() const { return list_; }
  Inning default_inning() const { return default_; }
  const std::map<Prisoner, Inning>& exceptions() const { return exceptions_; }

  friend bool operator==(const InningFunction&, const InningFunction&) = default;

 private:
  bool finite_ = true;
  std::vector<Inning> list_;
  Inning default_ = 1;
  std::map<Prisoner, Inning> exceptions_;
};

// The validated quadruple <A, K, V, I>.
class Game {
 public:
  // Checks every invariant and throws hatlab::Error naming the offending
  // element. `min_prisoners` is 2 for user-facing games; derived subgames
  // may have a single prisoner.
  static Game make(PrisonerCount prisoners, ColorSpace colors, VisibilityGraph visibility,
                   InningFunction innings, std::vector<std::string> names = {},
                   std::size_t min_prisoners = 2);

  bool is_finite() const { return prisoners_.has_value(); }
  PrisonerCount prisoner_count() const { return prisoners_; }
  // Finite games only.
  std::size_t size() const;
  const ColorSpace& colors() const { return colors_; }
  const VisibilityGraph& visibility() const { return visibility_; }
  const InningFunction& innings() const { return innings_; }
  const std::vector<std::string>& names() const { return names_; }
  std::string name_of(Prisoner a) const;

  bool has_prisoner(Prisoner a) const { return !prisoners_ || a < *prisoners_; }
  void require_prisoner(Prisoner a) const;
  PrisonerSet prisoners() const;
  PrisonerSet seen_by(Prisoner a) const { return visibility_.seen_by(a); }
  PrisonerSet heard_by(Prisoner a) const;
  Inning inning(Prisoner a) const { return innings_.of(a); }
  Inning num_innings() const { return innings_.count(); }
  bool is_simultaneous() const { return num_innings() == 1; }
  bool has_complete_visibility() const;

  // Prisoners with individually specified visibility or inning. For finite
  // games this is every prisoner.
  std::vector<Prisoner> explicit_prisoners() const;
  // A prisoner of an omega game outside every exception list and `avoid`.
  Prisoner generic_prisoner(const PrisonerSet& avoid) const;

  friend bool operator==(const Game&, const Game&) = default;

 private:
  Game() = default;

  PrisonerCount prisoners_;
  ColorSpace colors_ = ColorSpace::integers();
  VisibilityGraph visibility_;
  InningFunction innings_;
  std::vector<std::string> names_;
};

// Inning sets A_1..A_IN and hearing sets H(a) = A_1 u ... u A_{I(a)-1}.
struct GameStructure {
  std::vector<PrisonerSet> inning_sets;  // index 0 is A_1
  PrisonerSet first_speakers;
  Inning num_innings = 1;
  std::vector<PrisonerSet> heard_before;  // heard_before[b-1] = union of A_g for g < b

  const PrisonerSet& inning_set(Inning beta) const { return inning_sets.at(beta - 1); }
  const PrisonerSet& hearing_of_inning(Inning beta) const { return heard_before.at(beta - 1); }
};

GameStructure derive_structure(const Game& game);

struct ConditionProfile {
  bool s1 = false;
  bool s2 = false;
  bool s3 = false;
  bool s4 = false;
  bool s5 = false;
  bool s6 = false;

  friend bool operator==(const ConditionProfile&, const ConditionProfile&) = default;
};

// Throws kInapplicableConditions for simultaneous games.
ConditionProfile condition_profile(const Game& game);

PartialColoring view_of(const Game& game, Prisoner a, const Coloring& f);

// f[x|c] or f[x,x'|c,c']; targets must be distinct prisoners of the game.
Coloring mutate_coloring(const Game& game, const Coloring& f,
                         const std::vector<std::pair<Prisoner, Color>>& changes);

// Checks that `f` is a coloring of `game`.
void require_coloring(const Game& game, const Coloring& f);

}  // namespace hatlab
