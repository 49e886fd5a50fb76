#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hatlab/evaluator.hpp"
#include "hatlab/game.hpp"
#include "hatlab/search.hpp"

namespace hatlab {

struct FamilySpec {
  std::vector<std::size_t> prisoner_counts;
  ColorSpace colors = ColorSpace::modular(2);
  std::vector<Inning> inning_counts;           // IN values to enumerate
  std::optional<std::size_t> first_inning_size;  // |A_1| constraint
  bool up_to_isomorphism = false;
};

// Every game of the family: all surjective inning functions with the
// requested IN and |A_1|, crossed with all loop-free digraphs.
std::vector<Game> enumerate_family(const FamilySpec& family);

struct Finding {
  Game game;
  std::optional<ConditionProfile> profile;  // IN >= 2 only
  SearchCertificate::Verdict verdict = SearchCertificate::Verdict::kUnknown;
  std::uint64_t nodes = 0;
  // Named theorem directions contradicted by the verdict, and open-question
  // observations ("q1:...").
  std::vector<std::string> flags;
};

std::vector<Finding> hunt(const FamilySpec& family, const Goal& goal, const SearchOptions& options);

// Flags for one (game, verdict) pair; exposed for testing.
std::vector<std::string> theorem_flags(const Game& game, const Goal& goal,
                                       SearchCertificate::Verdict verdict);

nlohmann::ordered_json finding_to_json(const Finding& f, const Goal& goal, std::uint64_t budget);

}  // namespace hatlab
