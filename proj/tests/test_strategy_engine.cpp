#include <algorithm>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "hatlab/constructions.hpp"
#include "hatlab/evaluator.hpp"
#include "support.hpp"

using namespace hatlab;
using namespace testkit;

namespace {

Game int_game(std::size_t n, std::vector<Inning> innings) {
  return Game::make(n, ColorSpace::integers(), VisibilityGraph::complete(n), InningFunction::list(std::move(innings)));
}

std::vector<int> play(const Game& game, const Predictor& p, const std::vector<int>& f) {
  return ints(run_predictor(game, p, hats(f)).guesses);
}

int mod(int x, int k) { return ((x % k) + k) % k; }

int sum(const std::vector<int>& f) {
  int s = 0;
  for (int x : f) s += x;
  return s;
}

std::vector<Prisoner> wrong(const std::vector<int>& f, const std::vector<int>& g) {
  std::vector<Prisoner> out;
  for (Prisoner a = 0; a < f.size(); ++a) {
    if (f[a] != g[a]) out.push_back(a);
  }
  return out;
}

// A predictor that always declares `c`, built from an arbitrary rule.
class ConstantStrategy final : public Strategy {
 public:
  explicit ConstantStrategy(Color c) : c_(std::move(c)) {}
  Color declare(const PartialColoring&, const PartialColoring&) const override { return c_; }

 private:
  Color c_;
};

class SumMod3 final : public Strategy {
 public:
  Color declare(const PartialColoring&, const PartialColoring& view) const override {
    Color s = 0;
    for (const auto& [b, c] : view.explicit_values()) s += c;
    return s % 3;
  }
};

Predictor constant_predictor(const Game& game, int c) {
  std::map<Prisoner, Predictor::StrategyPtr> strategies;
  for (Prisoner a = 0; a < game.size(); ++a) strategies[a] = std::make_shared<ConstantStrategy>(c);
  return Predictor(game, "constant", c, std::move(strategies));
}

// Random finite game over mod(k): random loop-free digraph, random surjective
// innings.
Game random_game(std::mt19937_64& rng, std::size_t n, std::uint32_t k) {
  const Inning levels = 1 + rng() % n;
  std::vector<Inning> innings(n);
  for (Prisoner a = 0; a < n; ++a) innings[a] = a < levels ? a + 1 : 1 + rng() % levels;
  std::shuffle(innings.begin(), innings.end(), rng);
  return lists_game(k, random_digraph(n, rng), innings);
}

}  // namespace

TEST(RunPredictor, HintSumOnCompleteFiveExample) {
  const Game game = g52();
  const GuessRecord r = run_predictor(game, hint_sum_predictor(game), hats({1, 0, 1, 1, 0}));
  EXPECT_EQ(ints(r.guesses), (std::vector<int>{0, 0, 1, 1, 0}));
  EXPECT_EQ(r.match, PrisonerSet::finite({1, 2, 3, 4}));
  EXPECT_EQ(r.errors, PrisonerSet::single(0));
}

TEST(RunPredictor, CycleParityOnTwoPrisoners) {
  const Game game = g22();
  const GuessRecord r = run_predictor(game, cycle_parity_predictor(game, {0, 1}), hats({0, 0}));
  EXPECT_EQ(ints(r.guesses), (std::vector<int>{0, 1}));
  EXPECT_EQ(r.match, PrisonerSet::single(0));
}

TEST(RunPredictor, FepZeroOnAllZero) {
  const Game game = omega_flat();
  const GuessRecord r = run_predictor(game, finite_support_fep(game), Coloring::sparse({}));
  EXPECT_TRUE(r.errors.empty());
  EXPECT_EQ(r.guesses, Coloring::sparse({}));
}

TEST(RunPredictor, AgreesWithReferencePlayOnRandomTables) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 2 + rng() % 3;
    const std::uint32_t k = 2 + rng() % 2;
    const Game game = random_game(rng, n, k);
    const Predictor p = table_predictor(game, random_tables(game, rng));
    for (const auto& f : all_colorings(n, static_cast<int>(k))) {
      const GuessRecord r = run_predictor(game, p, hats(f));
      const std::vector<int> g = reference_guesses(game, p, f);
      ASSERT_EQ(ints(r.guesses), g);
      std::vector<Prisoner> right;
      for (Prisoner a = 0; a < n; ++a) {
        if (f[a] == g[a]) right.push_back(a);
      }
      ASSERT_EQ(r.match, PrisonerSet::finite(right));
      ASSERT_EQ(r.errors, PrisonerSet::finite(wrong(f, g)));
    }
  }
}

TEST(RunPredictor, PredictorForAnotherGameRejected) {
  const Predictor p = mod_sum_predictor(g22());
  EXPECT_EQ(code_of([&] { run_predictor(complete_game(3, 3, all_first(3)), p, hats({0, 0, 0})); }),
            ErrorCode::kMismatchedPredictor);
}

// Prisoner a's declaration depends only on its view and on what it heard.
TEST(RunPredictor, InningCausality) {
  const std::vector<std::pair<Game, Predictor>> cases = {
      {g52(), hint_sum_predictor(g52())},
      {g52chain(), hint_sum_predictor(g52chain())},
      {g5dual(), dual_hint_predictor(g5dual())},
  };
  for (const auto& [game, p] : cases) {
    const auto colorings = all_colorings(game.size(), 2);
    std::vector<std::vector<int>> plays;
    for (const auto& f : colorings) plays.push_back(play(game, p, f));
    for (Prisoner a = 0; a < game.size(); ++a) {
      const PrisonerSet seen = game.seen_by(a);
      const PrisonerSet heard = game.heard_by(a);
      for (std::size_t i = 0; i < colorings.size(); ++i) {
        for (std::size_t j = i + 1; j < colorings.size(); ++j) {
          bool same = true;
          for (Prisoner b = 0; b < game.size() && same; ++b) {
            if (seen.contains(b) && colorings[i][b] != colorings[j][b]) same = false;
            if (heard.contains(b) && plays[i][b] != plays[j][b]) same = false;
          }
          if (same) ASSERT_EQ(plays[i][a], plays[j][a]) << "prisoner " << a;
        }
      }
    }
  }
}

TEST(ModSum, Examples) {
  EXPECT_EQ(play(complete_game(3, 3, all_first(3)), mod_sum_predictor(complete_game(3, 3, all_first(3))), {0, 1, 2}),
            (std::vector<int>{0, 2, 1}));
  EXPECT_EQ(play(g22(), mod_sum_predictor(g22()), {0, 1}), (std::vector<int>{1, 1}));
}

TEST(ModSum, Preconditions) {
  EXPECT_EQ(code_of([] { mod_sum_predictor(lists_game(2, {{}, {0}}, {1, 1})); }),
            ErrorCode::kRequiresCompleteVisibility);
  EXPECT_EQ(code_of([] { mod_sum_predictor(complete_game(3, 2, all_first(3))); }), ErrorCode::kRequiresSquareGame);
  EXPECT_EQ(code_of([] { mod_sum_predictor(complete_game(2, 2, {1, 2})); }), ErrorCode::kRequiresSimultaneous);
}

TEST(ModSum, ExactlyTheSumIndexIsRight) {
  for (std::size_t n = 2; n <= 5; ++n) {
    const Game game = complete_game(n, static_cast<std::uint32_t>(n), all_first(n));
    const Predictor p = mod_sum_predictor(game);
    for (const auto& f : all_colorings(n, static_cast<int>(n))) {
      const std::vector<int> g = play(game, p, f);
      const int lucky = mod(sum(f), static_cast<int>(n));
      for (Prisoner a = 0; a < n; ++a) ASSERT_EQ(f[a] == g[a], static_cast<int>(a) == lucky);
    }
  }
}

TEST(CycleParity, Examples) {
  const Predictor p = cycle_parity_predictor(g22(), {0, 1});
  EXPECT_EQ(play(g22(), p, {1, 0}), (std::vector<int>{0, 0}));
  EXPECT_EQ(play(g22(), p, {1, 1}), (std::vector<int>{1, 0}));
}

TEST(CycleParity, ChainIsNotACycle) {
  EXPECT_EQ(code_of([] { cycle_parity_predictor(lists_game(2, {{1}, {2}, {}}, all_first(3)), {0, 1, 2}); }),
            ErrorCode::kNotACycle);
}

TEST(CycleParity, SomeCycleMemberRight) {
  std::mt19937_64 rng(5);
  int checked = 0;
  while (checked < 40) {
    const std::size_t n = 2 + rng() % 3;
    const Game game = lists_game(2, random_digraph(n, rng), all_first(n));
    const std::vector<Prisoner> cycle = find_cycle(game);
    if (cycle.empty()) continue;
    ++checked;
    const Predictor p = cycle_parity_predictor(game, cycle);
    for (const auto& f : all_colorings(n, 2)) {
      const std::vector<int> g = play(game, p, f);
      bool hit = false;
      for (Prisoner a : cycle) hit = hit || f[a] == g[a];
      ASSERT_TRUE(hit);
      for (Prisoner a = 0; a < n; ++a) {
        if (std::find(cycle.begin(), cycle.end(), a) == cycle.end()) ASSERT_EQ(g[a], 0);
      }
    }
  }
}

TEST(HintSum, Examples) {
  const std::vector<int> g = play(g52chain(), hint_sum_predictor(g52chain()), {1, 0, 1, 1, 0});
  EXPECT_EQ(g[2], 1);
  for (Prisoner a = 1; a < 5; ++a) EXPECT_EQ(g[a], (std::vector<int>{1, 0, 1, 1, 0})[a]);
  EXPECT_TRUE(wrong({0, 0, 0, 0, 0}, play(g52(), hint_sum_predictor(g52()), {0, 0, 0, 0, 0})).empty());
}

TEST(HintSum, RequiresSingleFirstSpeaker) {
  EXPECT_EQ(code_of([] { hint_sum_predictor(g3dual()); }), ErrorCode::kRequiresS1S2);
  EXPECT_EQ(code_of([] { hint_sum_predictor(g22()); }), ErrorCode::kRequiresMultiInning);
}

TEST(HintSum, OnlyFirstSpeakerMayErr) {
  const std::vector<Game> games = {g52(), g52chain(), chain_game(4, 3), complete_game(4, 3, {1, 2, 3, 3}),
                                   lists_game(3, {{1, 2, 3}, {2, 3}, {1, 3}, {}}, {1, 2, 2, 3})};
  for (const Game& game : games) {
    const Predictor p = hint_sum_predictor(game);
    for (const auto& f : all_colorings(game.size(), static_cast<int>(game.colors().modulus()))) {
      const auto errs = wrong(f, play(game, p, f));
      ASSERT_TRUE(errs.empty() || errs == std::vector<Prisoner>{0});
    }
  }
}

TEST(DualHint, Examples) {
  const Predictor p = dual_hint_predictor(g3dual());
  EXPECT_EQ(play(g3dual(), p, {1, 0, 1}), (std::vector<int>{1, 1, 1}));
  EXPECT_EQ(play(g3dual(), p, {0, 0, 0}), (std::vector<int>{0, 1, 0}));
}

TEST(DualHint, Preconditions) {
  EXPECT_EQ(code_of([] { dual_hint_predictor(g52()); }), ErrorCode::kRequiresS4S5S6);
  EXPECT_EQ(code_of([] { dual_hint_predictor(complete_game(3, 3, {1, 1, 2})); }), ErrorCode::kRequiresTwoColors);
}

TEST(DualHint, ExactlyOneErrorInFirstInning) {
  const std::vector<Game> games = {g3dual(), g5dual(), complete_game(4, 2, {1, 1, 2, 2}),
                                   complete_game(4, 2, {1, 2, 1, 2})};
  for (const Game& game : games) {
    const Predictor p = dual_hint_predictor(game);
    std::vector<Prisoner> first;
    for (Prisoner a = 0; a < game.size(); ++a) {
      if (game.inning(a) == 1) first.push_back(a);
    }
    for (const auto& f : all_colorings(game.size(), 2)) {
      const std::vector<int> g = play(game, p, f);
      const auto errs = wrong(f, g);
      ASSERT_EQ(errs.size(), 1u);
      ASSERT_NE(std::find(first.begin(), first.end(), errs[0]), first.end());
      ASSERT_EQ(f[first[0]] == g[first[0]], mod(sum(f), 2) == 0);
      ASSERT_EQ(f[first[1]] == g[first[1]], mod(sum(f), 2) == 1);
    }
  }
}

TEST(BijectionHint, DecodesEveryOtherHat) {
  const Game game = int_game(3, {1, 2, 2});
  const std::vector<int> g = play(game, bijection_hint_predictor(game), {0, 2, 1});
  // zigzag(2) = 4, zigzag(1) = 2; pairing (4 + 2)(4 + 2 + 1)/2 + 2.
  EXPECT_EQ(g, (std::vector<int>{23, 2, 1}));
  EXPECT_EQ(play(game, bijection_hint_predictor(game), {5, 0, 0}), (std::vector<int>{0, 0, 0}));
}

TEST(BijectionHint, Preconditions) {
  EXPECT_EQ(code_of([] { bijection_hint_predictor(g52()); }), ErrorCode::kRequiresIntColors);
  EXPECT_EQ(code_of([] { bijection_hint_predictor(int_game(3, {1, 1, 2})); }), ErrorCode::kRequiresS1S4);
}

TEST(BijectionHint, SampledErrorsOnlyAtFirstSpeaker) {
  const Game game = int_game(4, {1, 2, 2, 3});
  const Predictor p = bijection_hint_predictor(game);
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<int> f(4);
    for (int& x : f) x = static_cast<int>(rng() % 2001) - 1000;
    const auto errs = wrong(f, play(game, p, f));
    ASSERT_TRUE(errs.empty() || errs == std::vector<Prisoner>{0});
  }
}

TEST(ParityHint, OmegaExample) {
  const Game game = omega_staged();
  const Predictor p = parity_hint_predictor(game, finite_parity(ColorSpace::integers(), kOmega));
  const GuessRecord r = run_predictor(game, p, Coloring::sparse({{1, 3}, {2, 7}}));
  EXPECT_EQ(r.guesses.at(0), -10);
  EXPECT_EQ(r.guesses.at(1), 3);
  EXPECT_EQ(r.guesses.at(2), 7);
  EXPECT_EQ(r.guesses.at(500), 0);
  EXPECT_TRUE(r.errors.subset_of(PrisonerSet::single(0)));
  const GuessRecord zero = run_predictor(game, p, Coloring::sparse({}));
  EXPECT_TRUE(zero.errors.empty());
  EXPECT_EQ(zero.guesses, Coloring::sparse({}));
}

TEST(ParityHint, FiniteTwoColors) {
  const Game game = g52();
  const Predictor p = parity_hint_predictor(game, finite_parity(ColorSpace::modular(2), 5));
  for (const auto& f : all_colorings(5, 2)) ASSERT_LE(wrong(f, play(game, p, f)).size(), 1u);
}

TEST(ParityHint, DomainMismatch) {
  EXPECT_EQ(code_of([] { parity_hint_predictor(g52(), finite_parity(ColorSpace::modular(2), 4)); }),
            ErrorCode::kParityDomainMismatch);
  EXPECT_EQ(code_of([] { parity_hint_predictor(g3dual(), finite_parity(ColorSpace::modular(2), 3)); }),
            ErrorCode::kRequiresS1S2);
}

TEST(FepZero, ErrorsAreTheSupport) {
  const Game game = omega_flat();
  const Predictor p = finite_support_fep(game);
  EXPECT_EQ(run_predictor(game, p, Coloring::sparse({{2, 5}})).errors, PrisonerSet::single(2));
  EXPECT_EQ(run_predictor(game, p, Coloring::sparse({{0, 1}, {3, 2}, {9, 9}})).errors,
            PrisonerSet::finite({0, 3, 9}));
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 200; ++trial) {
    std::map<Prisoner, Color> ex;
    for (int i = rng() % 6; i > 0; --i) ex[rng() % 50] = static_cast<int>(rng() % 21) - 10;
    const Coloring f = Coloring::sparse(ex);
    ASSERT_EQ(run_predictor(game, p, f).errors, f.support());
  }
}

TEST(FepZero, RequiresOmegaCompleteSimultaneous) {
  EXPECT_EQ(code_of([] { finite_support_fep(g22()); }), ErrorCode::kRequiresOmegaCompleteSimultaneous);
  EXPECT_EQ(code_of([] { finite_support_fep(omega_staged()); }), ErrorCode::kRequiresOmegaCompleteSimultaneous);
}

TEST(RestrictToFirstInning, DualHintSubgame) {
  const Restriction r = restrict_to_first_inning(g3dual(), dual_hint_predictor(g3dual()), 0);
  ASSERT_EQ(r.game.size(), 2u);
  EXPECT_TRUE(r.game.is_simultaneous());
  EXPECT_EQ(r.original, (std::vector<Prisoner>{0, 1}));
  for (const auto& f : all_colorings(2, 2)) EXPECT_LE(wrong(f, play(r.game, r.predictor, f)).size(), 1u);
}

TEST(RestrictToFirstInning, SingleSpeakerSubgames) {
  for (const auto& [game, fill] : std::vector<std::pair<Game, int>>{{g52(), 0}, {g52chain(), 1}}) {
    const Restriction r = restrict_to_first_inning(game, hint_sum_predictor(game), fill);
    EXPECT_EQ(r.game.size(), 1u);
    for (const auto& f : all_colorings(1, 2)) EXPECT_LE(wrong(f, play(r.game, r.predictor, f)).size(), 1u);
  }
}

TEST(RestrictToFirstInning, InducedPredictorFillsUnseenHats) {
  // Reference: the subgame declaration of a equals p's declaration in the
  // full game when every prisoner outside A_1 wears `fill`.
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 30; ++trial) {
    const Game game = complete_game(4, 2, {1, 1, 2, 3});
    const Predictor p = table_predictor(game, random_tables(game, rng));
    const int fill = static_cast<int>(rng() % 2);
    const Restriction r = restrict_to_first_inning(game, p, fill);
    for (const auto& f : all_colorings(2, 2)) {
      const std::vector<int> full = reference_guesses(game, p, {f[0], f[1], fill, fill});
      ASSERT_EQ(play(r.game, r.predictor, f), (std::vector<int>{full[0], full[1]}));
    }
  }
}

TEST(RestrictToFirstInning, RequiresMultiInning) {
  EXPECT_EQ(code_of([] { restrict_to_first_inning(g22(), mod_sum_predictor(g22()), 0); }),
            ErrorCode::kRequiresMultiInning);
}

TEST(RestrictColors, ConstantSevenBecomesZero) {
  const Game game = int_game(3, all_first(3));
  const Predictor p = restrict_colors(game, constant_predictor(game, 7), {0, 1, 2}, 0);
  EXPECT_EQ(play(game, p, {4, 1, 2}), (std::vector<int>{0, 0, 0}));
}

TEST(RestrictColors, FullSubsetIsIdentity) {
  const Game game = complete_game(3, 3, all_first(3));
  const Predictor base = mod_sum_predictor(game);
  const Predictor p = restrict_colors(game, base, {0, 1, 2}, 0);
  for (const auto& f : all_colorings(3, 3)) ASSERT_EQ(play(game, p, f), play(game, base, f));
}

TEST(RestrictColors, PreservesBehaviourOnSubcolors) {
  // Everyone guesses the sum of the hats it sees, mod 3.
  const Game game = int_game(3, all_first(3));
  std::map<Prisoner, Predictor::StrategyPtr> strategies;
  for (Prisoner a = 0; a < 3; ++a) strategies[a] = std::make_shared<SumMod3>();
  const Predictor base(game, "sum-mod-3", nullptr, std::move(strategies));
  const Predictor p = restrict_colors(game, base, {0, 1}, 0);
  for (const auto& f : all_colorings(3, 2)) {
    const std::vector<int> g = play(game, base, f);
    const std::vector<int> h = play(game, p, f);
    for (Prisoner a = 0; a < 3; ++a) {
      ASSERT_EQ(h[a], g[a] == 2 ? 0 : g[a]);
      if (g[a] == f[a]) ASSERT_EQ(h[a], f[a]);
    }
  }
}

TEST(RestrictColors, FillMustBeASubcolor) {
  EXPECT_EQ(code_of([] { restrict_colors(g22(), mod_sum_predictor(g22()), {1}, 0); }),
            ErrorCode::kFillOutsideSubcolors);
}

TEST(Tables, JsonRoundTrip) {
  std::mt19937_64 rng(2);
  const Game game = g3dual();
  for (const TableStrategy& t : random_tables(game, rng)) {
    const auto j = table_to_json(t);
    EXPECT_EQ(j["radix"].size(), t.heard().size() + t.seen().size());
    const TableStrategy back = table_from_json(game, j);
    EXPECT_EQ(back.table(), t.table());
    EXPECT_EQ(back.heard(), t.heard());
    EXPECT_EQ(back.seen(), t.seen());
  }
}

TEST(Tables, MixedRadixIndexHeardFirst) {
  // Prisoner 2 of G3dual hears {0,1} and sees {0,1}: digits h0 h1 v0 v1.
  const TableStrategy t = empty_table(g3dual(), 2);
  EXPECT_EQ(t.table().size(), 16u);
  const auto h = PartialColoring::of({{0, 1}, {1, 0}});
  const auto v = PartialColoring::of({{0, 1}, {1, 1}});
  EXPECT_EQ(t.index_of(h, v), 8u + 0u + 2u + 1u);
}

TEST(Tables, WrongSizeRejected) {
  const TableStrategy t = empty_table(g22(), 0);
  nlohmann::json j = table_to_json(t);
  j["table"].push_back(0);
  EXPECT_EQ(code_of([&] { table_from_json(g22(), j); }), ErrorCode::kMismatchedPredictor);
}

TEST(NamedPredictors, BuildByName) {
  EXPECT_EQ(build_named_predictor(g22(), "mod-sum").name(), "mod-sum");
  EXPECT_EQ(build_named_predictor(g22(), "cycle-parity").name(), "cycle-parity");
  EXPECT_EQ(build_named_predictor(g52(), "parity-hint").name(), "parity-hint");
  EXPECT_EQ(code_of([] { build_named_predictor(g22(), "oracle"); }), ErrorCode::kInvalidArgument);
}
