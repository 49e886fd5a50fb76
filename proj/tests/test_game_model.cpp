#include <random>

#include <gtest/gtest.h>

#include "hatlab/error.hpp"
#include "hatlab/game_json.hpp"
#include "support.hpp"

using namespace hatlab;
using namespace testkit;

namespace {

PrisonerSet random_set(std::mt19937_64& rng) {
  std::vector<Prisoner> members;
  const std::size_t k = rng() % 5;
  for (std::size_t i = 0; i < k; ++i) members.push_back(rng() % 8);
  return rng() % 2 ? PrisonerSet::finite(members) : PrisonerSet::cofinite(members);
}

}  // namespace

TEST(ColorSpace, ModularArithmeticWraps) {
  const ColorSpace m5 = ColorSpace::modular(5);
  EXPECT_EQ(m5.add(3, 4), 2);
  EXPECT_EQ(m5.sub(1, 3), 3);
  EXPECT_EQ(m5.negate(0), 0);
  EXPECT_EQ(m5.normalize(-7), 3);
  EXPECT_FALSE(m5.contains(5));
  EXPECT_EQ(m5.describe(), "mod(5)");
}

TEST(ColorSpace, IntegersAreExact) {
  const ColorSpace z = ColorSpace::integers();
  const Color big = Color(1) << 100;
  EXPECT_EQ(z.sub(big, big + 1), -1);
  EXPECT_TRUE(z.contains(-big));
  EXPECT_EQ(z.describe(), "int");
}

TEST(ColorSpace, OneColorRejected) {
  EXPECT_EQ(code_of([] { ColorSpace::modular(1); }), ErrorCode::kTooFewColors);
}

TEST(PrisonerSet, CofiniteMembership) {
  const PrisonerSet s = PrisonerSet::cofinite({2, 5});
  EXPECT_FALSE(s.contains(2));
  EXPECT_TRUE(s.contains(1000000));
  EXPECT_EQ(s.to_string(), "omega\\{2,5}");
  EXPECT_EQ(code_of([&] { (void)s.size(); }), ErrorCode::kRequiresFiniteGame);
}

TEST(PrisonerSet, BooleanAlgebraLaws) {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 500; ++t) {
    const PrisonerSet a = random_set(rng), b = random_set(rng), c = random_set(rng);
    EXPECT_EQ(a.unite(b), b.unite(a));
    EXPECT_EQ(a.intersect(b.unite(c)), a.intersect(b).unite(a.intersect(c)));
    EXPECT_EQ(a.unite(b).complement(), a.complement().intersect(b.complement()));
    EXPECT_EQ(a.minus(b), a.intersect(b.complement()));
    EXPECT_EQ(a.complement().complement(), a);
    EXPECT_EQ(a.intersect(b).subset_of(a), true);
    for (Prisoner p = 0; p < 10; ++p) {
      EXPECT_EQ(a.unite(b).contains(p), a.contains(p) || b.contains(p));
      EXPECT_EQ(a.minus(b).contains(p), a.contains(p) && !b.contains(p));
    }
  }
}

TEST(Coloring, SparseDropsBaseEntries) {
  const Coloring f = Coloring::sparse({{2, 5}, {3, 0}});
  EXPECT_EQ(f.exceptions().size(), 1u);
  EXPECT_EQ(f.at(3), 0);
  EXPECT_EQ(f.at(2), 5);
  EXPECT_EQ(f.support(), PrisonerSet::single(2));
  EXPECT_EQ(f.with(2, 0), Coloring::sparse({}));
}

TEST(PartialColoring, MergeAndRestrict) {
  const Coloring f = hats({1, 0, 1, 1, 0});
  const PartialColoring p = PartialColoring::restrict(f, PrisonerSet::finite({3, 4}));
  EXPECT_EQ(p.explicit_values(), (std::map<Prisoner, Color>{{3, 1}, {4, 0}}));
  const PartialColoring q = PartialColoring::of({{0, 1}, {1, 0}, {2, 1}});
  EXPECT_EQ(q.merged(p).to_coloring(5), f);
  EXPECT_EQ(q.without(1).domain(), PrisonerSet::finite({0, 2}));
}

TEST(Game, ValidatesPuzzleOneShape) {
  const Game g = validate_game_text(R"({"prisoners": 2, "colors": {"kind": "mod", "n": 2},
                                        "visibility": "complete", "innings": [1, 1]})");
  EXPECT_EQ(g, g22());
  EXPECT_TRUE(g.is_simultaneous());
}

TEST(Game, LoopRejected) {
  const auto bad = R"({"prisoners": 3, "colors": {"kind": "mod", "n": 2},
                       "visibility": [[1], [1], []], "innings": [1, 1, 1]})";
  try {
    validate_game_text(bad);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kLoopInVisibility);
    EXPECT_NE(std::string(e.what()).find("1"), std::string::npos);
  }
}

TEST(Game, MissingInningRejected) {
  try {
    complete_game(3, 2, {1, 3, 3});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNonSurjectiveInnings);
    EXPECT_NE(std::string(e.what()).find("missing inning 2"), std::string::npos);
  }
}

TEST(Game, OtherValidationErrors) {
  EXPECT_EQ(code_of([] { validate_game_text(R"({"prisoners": 1, "colors": {"kind": "int"}, "visibility": "complete", "innings": [1]})"); }),
            ErrorCode::kTooFewPrisoners);
  EXPECT_EQ(code_of([] { validate_game_text(R"({"prisoners": 2, "colors": {"kind": "mod", "n": 1}, "visibility": "complete", "innings": [1, 1]})"); }),
            ErrorCode::kTooFewColors);
  EXPECT_EQ(code_of([] { validate_game_text(R"({"prisoners": 2, "colors": {"kind": "int"}, "visibility": [[7], []], "innings": [1, 1]})"); }),
            ErrorCode::kUnknownPrisonerId);
  EXPECT_EQ(code_of([] { validate_game_text(R"({"prisoners": 2, "colors": {"kind": "int"}, "visibility": "complete", "innings": [1, 1], "extra": 0})"); }),
            ErrorCode::kInvalidGameSpec);
  EXPECT_EQ(code_of([] { validate_game_text("{"); }), ErrorCode::kInvalidGameSpec);
}

TEST(Game, NamedPrisonersResolve) {
  const Game g = validate_game_text(R"({"prisoners": ["ann", "bob", "cy"], "colors": {"kind": "mod", "n": 2},
                                        "visibility": [["bob"], ["cy"], [0]], "innings": [1, 1, 1]})");
  EXPECT_TRUE(g.visibility().sees(0, 1));
  EXPECT_EQ(g.name_of(2), "cy");
  EXPECT_EQ(validate_game(game_to_json(g)), g);
}

TEST(Game, JsonRoundTrip) {
  for (const Game& g : {g22(), g52(), g52chain(), g3dual(), omega_flat(), omega_staged()}) {
    EXPECT_EQ(validate_game(game_to_json(g)), g);
  }
  const Game odd = validate_game_text(R"({"prisoners": "omega", "colors": {"kind": "int"},
      "visibility": {"default": "complete", "exceptions": {"0": [3, 4]}}, "innings": {"default": 2, "exceptions": {"0": 1}}})");
  EXPECT_FALSE(odd.visibility().sees(0, 3));
  EXPECT_TRUE(odd.visibility().sees(1, 3));
  EXPECT_EQ(validate_game(game_to_json(odd)), odd);
}

TEST(Structure, ChainSingletons) {
  const GameStructure s = derive_structure(g52chain());
  EXPECT_EQ(s.num_innings, 5u);
  for (Inning b = 1; b <= 5; ++b) EXPECT_EQ(s.inning_set(b), PrisonerSet::single(b - 1));
  EXPECT_EQ(g52chain().heard_by(2), PrisonerSet::finite({0, 1}));
}

TEST(Structure, TwoInnings) {
  const GameStructure s = derive_structure(g52());
  EXPECT_EQ(s.num_innings, 2u);
  EXPECT_EQ(s.first_speakers, PrisonerSet::single(0));
  EXPECT_EQ(s.inning_set(2), PrisonerSet::finite({1, 2, 3, 4}));
}

TEST(Structure, OmegaDefaultReading) {
  const GameStructure s = derive_structure(omega_staged());
  EXPECT_EQ(s.first_speakers, PrisonerSet::single(0));
  EXPECT_EQ(s.inning_set(2), PrisonerSet::cofinite({0}));
  EXPECT_EQ(s.num_innings, 2u);
}

TEST(Structure, InningSetsPartitionPrisoners) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 2 + rng() % 4;
    std::vector<Inning> innings(n);
    for (auto& b : innings) b = 1 + static_cast<Inning>(rng() % n);
    // compress to a surjection
    std::vector<Inning> sorted(innings);
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (auto& b : innings) b = static_cast<Inning>(std::lower_bound(sorted.begin(), sorted.end(), b) - sorted.begin() + 1);
    const Game g = lists_game(2, random_digraph(n, rng), innings);
    const GameStructure s = derive_structure(g);
    PrisonerSet covered;
    for (const PrisonerSet& part : s.inning_sets) {
      EXPECT_FALSE(part.empty());
      EXPECT_TRUE(covered.intersect(part).empty());
      covered = covered.unite(part);
    }
    EXPECT_EQ(covered, g.prisoners());
    for (Prisoner a = 0; a < n; ++a) {
      for (Prisoner b = 0; b < n; ++b) EXPECT_EQ(g.heard_by(a).contains(b), innings[b] < innings[a]);
    }
  }
}

TEST(Conditions, HintGameProfile) {
  const ConditionProfile p = condition_profile(g52());
  EXPECT_TRUE(p.s1);
  EXPECT_TRUE(p.s2);
  EXPECT_FALSE(p.s3);
  EXPECT_TRUE(p.s4);
  EXPECT_FALSE(p.s5);
  EXPECT_TRUE(p.s6);
}

TEST(Conditions, ChainProfile) {
  const ConditionProfile p = condition_profile(g52chain());
  EXPECT_TRUE(p.s1 && p.s2 && p.s3);
}

TEST(Conditions, DualProfile) {
  const ConditionProfile p = condition_profile(g3dual());
  EXPECT_FALSE(p.s1);
  EXPECT_TRUE(p.s4 && p.s5 && p.s6);
}

TEST(Conditions, SimultaneousInapplicable) {
  EXPECT_EQ(code_of([] { condition_profile(g22()); }), ErrorCode::kInapplicableConditions);
}

TEST(Conditions, OmegaStaged) {
  const ConditionProfile p = condition_profile(omega_staged());
  EXPECT_TRUE(p.s1 && p.s2 && p.s4 && p.s6);
  EXPECT_FALSE(p.s3);
}

TEST(View, ChainView) {
  const PartialColoring v = view_of(g52chain(), 2, hats({1, 0, 1, 1, 0}));
  EXPECT_EQ(v.explicit_values(), (std::map<Prisoner, Color>{{3, 1}, {4, 0}}));
}

TEST(View, EmptyView) {
  const PartialColoring v = view_of(g52chain(), 4, hats({1, 0, 1, 1, 0}));
  EXPECT_TRUE(v.domain().empty());
}

TEST(View, OmegaView) {
  const PartialColoring v = view_of(omega_flat(), 1, Coloring::sparse({{2, 5}}));
  EXPECT_EQ(v.domain(), PrisonerSet::cofinite({1}));
  EXPECT_EQ(v.base(), 0);
  EXPECT_EQ(v.explicit_values(), (std::map<Prisoner, Color>{{2, 5}}));
  EXPECT_EQ(code_of([] { view_of(g22(), 2, hats({0, 0})); }), ErrorCode::kUnknownPrisonerId);
}

TEST(Mutate, SingleAndDouble) {
  const Coloring f = hats({0, 1, 0});
  const Game g = complete_game(3, 2, all_first(3));
  EXPECT_EQ(mutate_coloring(g, f, {{0, 1}}), hats({1, 1, 0}));
  EXPECT_EQ(mutate_coloring(g, f, {{0, 1}, {2, 1}}), hats({1, 1, 1}));
  EXPECT_EQ(f, hats({0, 1, 0}));
  EXPECT_EQ(code_of([&] { mutate_coloring(g, f, {{0, 1}, {0, 0}}); }), ErrorCode::kDuplicateTarget);
  EXPECT_EQ(code_of([&] { mutate_coloring(g, f, {{5, 1}}); }), ErrorCode::kUnknownPrisonerId);
  EXPECT_EQ(code_of([&] { mutate_coloring(g, f, {{1, 2}}); }), ErrorCode::kColorOutOfSpace);
}

TEST(ColoringText, ListsAndPairs) {
  EXPECT_EQ(parse_coloring(g52(), "1,0,1,1,0"), hats({1, 0, 1, 1, 0}));
  EXPECT_EQ(parse_coloring(omega_flat(), "2=5,7=-1"), Coloring::sparse({{2, 5}, {7, -1}}));
  EXPECT_EQ(code_of([] { parse_coloring(g52(), "1,0"); }), ErrorCode::kInvalidArgument);
  EXPECT_EQ(code_of([] { parse_coloring(g22(), "1,2"); }), ErrorCode::kColorOutOfSpace);
}

TEST(ColoringJson, RoundTrip) {
  const Coloring big = Coloring::sparse({{3, Color(1) << 80}, {4, -2}});
  EXPECT_EQ(coloring_from_json(omega_flat(), coloring_to_json(big)), big);
  EXPECT_EQ(coloring_from_json(g52(), coloring_to_json(hats({1, 0, 1, 1, 0}))), hats({1, 0, 1, 1, 0}));
}
