#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "hatlab/error.hpp"
#include "hatlab/game.hpp"
#include "hatlab/strategy.hpp"

namespace testkit {

using namespace hatlab;

inline ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::kInternal;
}

inline std::vector<Inning> all_first(std::size_t n) { return std::vector<Inning>(n, 1); }

inline Game complete_game(std::size_t n, std::uint32_t k, std::vector<Inning> innings) {
  return Game::make(n, ColorSpace::modular(k), VisibilityGraph::complete(n), InningFunction::list(std::move(innings)));
}

inline Game lists_game(std::uint32_t k, std::vector<std::vector<Prisoner>> seen, std::vector<Inning> innings) {
  const std::size_t n = seen.size();
  return Game::make(n, ColorSpace::modular(k), VisibilityGraph::lists(std::move(seen)),
                    InningFunction::list(std::move(innings)));
}

inline Game g22() { return complete_game(2, 2, {1, 1}); }
inline Game g52() { return complete_game(5, 2, {1, 2, 2, 2, 2}); }

// Each prisoner sees every larger id and declares in id order.
inline Game chain_game(std::size_t n, std::uint32_t k) {
  std::vector<std::vector<Prisoner>> seen(n);
  std::vector<Inning> innings(n);
  for (Prisoner a = 0; a < n; ++a) {
    for (Prisoner b = a + 1; b < n; ++b) seen[a].push_back(b);
    innings[a] = static_cast<Inning>(a + 1);
  }
  return lists_game(k, std::move(seen), std::move(innings));
}

inline Game g52chain() { return chain_game(5, 2); }
inline Game g3dual() { return complete_game(3, 2, {1, 1, 2}); }
inline Game g5dual() { return complete_game(5, 2, {1, 1, 2, 2, 3}); }

inline Game omega_flat() {
  return Game::make(kOmega, ColorSpace::integers(), VisibilityGraph::omega_complete(), InningFunction::omega(1));
}

// Prisoner 0 speaks first; everyone else sees everyone and speaks second.
inline Game omega_staged() {
  return Game::make(kOmega, ColorSpace::integers(), VisibilityGraph::omega_complete(), InningFunction::omega(2, {{0, 1}}));
}

inline Coloring hats(std::vector<int> values) {
  std::vector<Color> out(values.begin(), values.end());
  return Coloring::dense(std::move(out));
}

inline std::vector<int> ints(const Coloring& f) {
  std::vector<int> out;
  for (const Color& c : f.values()) out.push_back(static_cast<int>(c));
  return out;
}

// Every coloring of a finite mod(k) game, prisoner 0 most significant.
inline std::vector<std::vector<int>> all_colorings(std::size_t n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> f(n, 0);
  while (true) {
    out.push_back(f);
    std::size_t d = n;
    while (d > 0 && f[d - 1] == k - 1) f[--d] = 0;
    if (d == 0) return out;
    ++f[d - 1];
  }
}

// Reference play of a finite game: declarations computed inning by inning
// straight from the definitions, without PredictorRunner.
inline std::vector<int> reference_guesses(const Game& game, const Predictor& p, const std::vector<int>& f) {
  const std::size_t n = game.size();
  std::vector<int> decl(n, 0);
  for (Inning beta = 1; beta <= game.num_innings(); ++beta) {
    for (Prisoner a = 0; a < n; ++a) {
      if (game.inning(a) != beta) continue;
      std::map<Prisoner, Color> heard, seen;
      for (Prisoner b = 0; b < n; ++b) {
        if (game.inning(b) < beta) heard[b] = decl[b];
        if (game.visibility().sees(a, b)) seen[b] = f[b];
      }
      decl[a] = static_cast<int>(p.strategy_for(a)->declare(PartialColoring::of(heard), PartialColoring::of(seen)));
    }
  }
  return decl;
}

inline std::size_t count_correct(const std::vector<int>& f, const std::vector<int>& g) {
  std::size_t c = 0;
  for (std::size_t i = 0; i < f.size(); ++i) c += f[i] == g[i];
  return c;
}

// Uniformly random tables for every prisoner of a finite game.
inline std::vector<TableStrategy> random_tables(const Game& game, std::mt19937_64& rng) {
  const std::uint32_t k = game.colors().modulus();
  std::vector<TableStrategy> out;
  for (Prisoner a = 0; a < game.size(); ++a) {
    const TableStrategy layout = empty_table(game, a);
    std::vector<std::uint32_t> entries(layout.table().size());
    for (auto& e : entries) e = std::uniform_int_distribution<std::uint32_t>(0, k - 1)(rng);
    out.emplace_back(a, layout.heard(), layout.seen(), k, std::move(entries));
  }
  return out;
}

// Random loop-free digraph on n nodes.
inline std::vector<std::vector<Prisoner>> random_digraph(std::size_t n, std::mt19937_64& rng) {
  std::vector<std::vector<Prisoner>> seen(n);
  for (Prisoner a = 0; a < n; ++a) {
    for (Prisoner b = 0; b < n; ++b) {
      if (a != b && rng() % 2) seen[a].push_back(b);
    }
  }
  return seen;
}

}  // namespace testkit
