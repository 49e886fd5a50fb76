#pragma once

#include <set>
#include <utility>
#include <vector>

#include "hatlab/game.hpp"
#include "hatlab/parity.hpp"
#include "hatlab/strategy.hpp"

namespace hatlab {

// Prisoner m declares m - (sum of seen hats) in Z/nZ. Complete visibility,
// |A| = |K| = n, one inning.
Predictor mod_sum_predictor(const Game& game);

// `cycle` = a_0 -> a_1 -> ... -> a_n -> a_0 in V. a_0 guesses a_1's hat;
// every other member guesses 1 minus its successor's hat. Everyone else
// declares 0.
Predictor cycle_parity_predictor(const Game& game, const std::vector<Prisoner>& cycle);

// The single first speaker announces the sum of all other hats; later
// prisoners subtract what they heard and saw.
Predictor hint_sum_predictor(const Game& game);

// Two first speakers over two colors; exactly one of them is right and
// every later prisoner is right.
Predictor dual_hint_predictor(const Game& game);

// Integer colors: the first speaker announces a single integer that
// encodes every other hat.
Predictor bijection_hint_predictor(const Game& game);

Predictor parity_hint_predictor(const Game& game, const ParityFunction& phi);

// Omega, complete, simultaneous: every prisoner declares 0, the
// representative of the single finite-support =* class.
Predictor finite_support_fep(const Game& game);

struct Restriction {
  Game game;
  Predictor predictor;
  std::vector<Prisoner> original;  // subgame prisoner i is original[i]
};

// The simultaneous subgame on A_1 and the predictor induced by filling every
// unseen hat with `fill`.
Restriction restrict_to_first_inning(const Game& game, const Predictor& p, const Color& fill);

// Declares p's guess when it lies in `subcolors`, otherwise `fill`.
Predictor restrict_colors(const Game& game, const Predictor& p, const std::set<Color>& subcolors,
                          const Color& fill);

// Builds a predictor by its CLI constructor name (mod-sum, cycle-parity,
// hint-sum, dual-hint, bijection-hint, parity-hint, fep-zero). `cycle` is
// only used by cycle-parity; parity-hint uses the negative-sum parity.
Predictor build_named_predictor(const Game& game, const std::string& name,
                                const std::vector<Prisoner>& cycle = {});

// First directed cycle of a finite visibility graph, if any.
std::vector<Prisoner> find_cycle(const Game& game);

}  // namespace hatlab
