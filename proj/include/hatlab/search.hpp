#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hatlab/evaluator.hpp"
#include "hatlab/game.hpp"
#include "hatlab/strategy.hpp"

namespace hatlab {

struct SearchCertificate {
  enum class Verdict { kSat, kUnsat, kUnknown };

  Verdict verdict = Verdict::kUnknown;
  std::vector<TableStrategy> tables;  // SAT only, unset entries filled with 0
  std::uint64_t nodes_explored = 0;
  std::uint64_t budget = 0;
};

std::string to_string(SearchCertificate::Verdict v);

struct SearchOptions {
  std::uint64_t budget = 10'000'000;
  // Fix the first branched entry to 0. Sound for every goal because
  // shifting one prisoner's declarations (and everyone's reading of them)
  // by a constant permutes colorings while preserving match counts.
  bool symmetry = false;
  // Prune when the right guesses still missing, summed over all colorings,
  // exceed what the unset first-inning entries (each right on a fixed number
  // of colorings) and the later prisoners (at most once per coloring) can
  // still supply.
  bool capacity_bound = true;
  std::uint64_t table_cap = std::uint64_t{1} << 22;
  std::uint64_t coloring_cap = std::uint64_t{1} << 22;
};

// Decides whether PS(goal) is nonempty by lazy table-filling backtracking.
// Colorings are visited lexicographically, declarations inning by inning;
// an unset table entry is branched over colors in ascending order when it
// is first consulted; a violated coloring backtracks chronologically.
SearchCertificate decide_ps(const Game& game, const Goal& goal, const SearchOptions& options = {});

Predictor certificate_predictor(const Game& game, const SearchCertificate& cert);

}  // namespace hatlab
