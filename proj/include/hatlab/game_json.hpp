#pragma once

#include <string>

#include <json.hpp>

#include "hatlab/color.hpp"
#include "hatlab/coloring.hpp"
#include "hatlab/game.hpp"

namespace hatlab {

using Json = nlohmann::ordered_json;

// Parses and validates the game-spec JSON:
//   {"prisoners": 5 | "omega" | ["ann", ...],
//    "colors": {"kind": "mod", "n": 2} | {"kind": "int"},
//    "visibility": "complete" | [[1, 2], ...] | {"default": "complete", "exceptions": {"0": [3]}},
//    "innings": [1, 2, ...] | {"default": 2, "exceptions": {"0": 1}}}
// Omega visibility exceptions list the prisoners that prisoner does NOT see.
Game validate_game(const nlohmann::json& raw);
Game validate_game_text(const std::string& text);

Json game_to_json(const Game& game);

Json color_to_json(const Color& c);
Color color_from_json(const nlohmann::json& j);

// Finite colorings serialize as an array; omega colorings as
// {"base": b, "support": {"i": c, ...}}.
Json coloring_to_json(const Coloring& f);
Coloring coloring_from_json(const Game& game, const nlohmann::json& j);

// Parses "1,0,1" (finite) or "2=5,7=1" (support pairs over base zero).
Coloring parse_coloring(const Game& game, const std::string& text);

Json prisoner_set_to_json(const PrisonerSet& s);

}  // namespace hatlab
