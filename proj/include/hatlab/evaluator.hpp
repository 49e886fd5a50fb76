#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "hatlab/coloring.hpp"
#include "hatlab/game.hpp"
#include "hatlab/strategy.hpp"

namespace hatlab {

struct Goal {
  enum class Kind { kCorrectAtLeast, kErrorsAtMost };
  Kind kind = Kind::kCorrectAtLeast;
  std::size_t n = 0;

  static Goal correct_at_least(std::size_t n) { return {Kind::kCorrectAtLeast, n}; }
  static Goal errors_at_most(std::size_t n) { return {Kind::kErrorsAtMost, n}; }
  // "correct>=N" or "errors<=N".
  static Goal parse(const std::string& text);

  // Largest error count allowed on a game with `prisoners` prisoners;
  // negative when the goal is unreachable.
  long long max_errors(std::size_t prisoners) const;
  std::string to_string() const;

  friend bool operator==(const Goal&, const Goal&) = default;
};

struct EvaluationReport {
  enum class Mode { kExhaustive, kSampled };

  Mode mode = Mode::kExhaustive;
  std::uint64_t seed = 0;  // sampled only
  PrisonerCount prisoners;
  std::uint64_t coloring_count = 0;
  // Finite games: correct counts. Omega games have infinitely many correct
  // prisoners, so min_correct/total_correct stay 0 and the histogram is keyed
  // by error count.
  std::size_t min_correct = 0;
  std::size_t max_errors = 0;
  bool unbounded_errors = false;  // some sampled omega coloring had infinitely many errors
  std::uint64_t total_correct = 0;
  std::map<std::size_t, std::uint64_t> histogram;
  std::map<std::size_t, Coloring> witnesses;  // first coloring per bucket
  PrisonerSet erring;                         // union of all error sets

  bool keyed_by_errors() const { return !prisoners.has_value(); }
};

struct ExhaustiveOptions {
  std::uint64_t cap = std::uint64_t{1} << 24;
  unsigned threads = 1;
};

// Number of colorings |K|^|A|, or nullopt when it exceeds `cap`.
std::optional<std::uint64_t> coloring_space_size(const Game& game, std::uint64_t cap);
// The index-th coloring in lexicographic order (prisoner 0 most significant).
Coloring coloring_at(const Game& game, std::uint64_t index);

EvaluationReport evaluate_exhaustive(const Game& game, const Predictor& p,
                                     const ExhaustiveOptions& options = {});

struct SampleOptions {
  std::size_t max_support = 4;   // omega support size drawn from [min_support, max_support]
  std::size_t min_support = 0;
  std::size_t window = 64;       // omega support positions drawn from [0, window)
  bool nonzero_values = false;   // support values drawn from [1, range)
  unsigned threads = 1;
};

// Deterministic coloring number `index` of the stream for `seed`. Values lie
// in [0, range) (capped at n for mod(n)).
Coloring sample_coloring(const Game& game, std::uint64_t seed, std::uint64_t index,
                         std::uint64_t range, const SampleOptions& options = {});

EvaluationReport evaluate_sampled(const Game& game, const Predictor& p, std::uint64_t n,
                                  std::uint64_t seed, std::uint64_t range,
                                  const SampleOptions& options = {});

// Exhaustive reports decide membership. Sampled reports can only refute:
// they return false on a violation and throw kSampledReportNotConclusive
// otherwise.
bool ps_membership(const EvaluationReport& report, const Goal& goal);

// total_correct == |A| * |K|^(|A|-1) for a simultaneous finite game.
bool average_correct_check(const Game& game, const Predictor& p);

// A coloring under which every prisoner guesses wrong (two colors, acyclic V).
Coloring acyclic_adversary(const Game& game, const Predictor& p);

// A coloring under which both a and b guess right, given that a does not see b.
Coloring double_correct_coloring(const Game& game, const Predictor& p, Prisoner a, Prisoner b);

// Whether P(f) = P(g) whenever f =* g. Finite games are checked over the
// whole coloring space (or `trials` samples for integer colors); omega games
// over `trials` sampled pairs of finite-support colorings.
bool check_robust(const Game& game, const Predictor& p, std::uint64_t trials, std::uint64_t seed);

}  // namespace hatlab
