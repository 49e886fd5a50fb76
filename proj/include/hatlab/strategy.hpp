#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "hatlab/coloring.hpp"
#include "hatlab/game.hpp"

namespace hatlab {

// sigma_a: (heard declarations, seen hats) -> declared color. The prisoner
// a is a fixed parameter of the strategy object.
class Strategy {
 public:
  virtual ~Strategy() = default;
  virtual Color declare(const PartialColoring& history, const PartialColoring& view) const = 0;
};

// An explicit strategy table, total over K^H(a) x K^V(a). Entries are
// indexed in mixed radix: heard prisoners ascending, then seen prisoners
// ascending, the first digit being the most significant.
class TableStrategy final : public Strategy {
 public:
  TableStrategy(Prisoner prisoner, std::vector<Prisoner> heard, std::vector<Prisoner> seen,
                std::uint32_t colors, std::vector<std::uint32_t> table);

  Color declare(const PartialColoring& history, const PartialColoring& view) const override;

  Prisoner prisoner() const { return prisoner_; }
  const std::vector<Prisoner>& heard() const { return heard_; }
  const std::vector<Prisoner>& seen() const { return seen_; }
  const std::vector<std::uint32_t>& radix() const { return radix_; }
  const std::vector<std::uint32_t>& table() const { return table_; }
  std::size_t index_of(const PartialColoring& history, const PartialColoring& view) const;

 private:
  Prisoner prisoner_;
  std::vector<Prisoner> heard_;
  std::vector<Prisoner> seen_;
  std::vector<std::uint32_t> radix_;
  std::vector<std::uint32_t> table_;
};

// One strategy per prisoner, bound to the game it was built for. Omega
// games carry explicit strategies for finitely many prisoners and a
// factory for everyone else.
class Predictor {
 public:
  using StrategyPtr = std::shared_ptr<const Strategy>;
  using GenericFactory = std::function<StrategyPtr(Prisoner)>;

  Predictor(Game game, std::string name, nlohmann::ordered_json params,
            std::map<Prisoner, StrategyPtr> strategies, GenericFactory generic = {});

  const Game& game() const { return *game_; }
  const std::string& name() const { return name_; }
  const nlohmann::ordered_json& params() const { return params_; }
  StrategyPtr strategy_for(Prisoner a) const;

 private:
  std::shared_ptr<const Game> game_;
  std::string name_;
  nlohmann::ordered_json params_;
  std::map<Prisoner, StrategyPtr> strategies_;
  GenericFactory generic_;
};

// The outcome of one play: P(f), Match[f, P(f)] and its complement.
struct GuessRecord {
  Coloring guesses;
  PrisonerSet match;
  PrisonerSet errors;
};

// Executes the predictor inning by inning. Omega games are evaluated on
// the prisoners singled out by the game or by f, plus one representative
// of the remaining (interchangeable) prisoners.
GuessRecord run_predictor(const Game& game, const Predictor& p, const Coloring& f);

// Predictor from explicit tables (one per prisoner, any order).
Predictor table_predictor(const Game& game, const std::vector<TableStrategy>& tables);
// Tables that always declare `color`.
std::vector<TableStrategy> constant_tables(const Game& game, std::uint32_t color);
// Mixed-radix layout of prisoner a's table.
TableStrategy empty_table(const Game& game, Prisoner a);

nlohmann::ordered_json table_to_json(const TableStrategy& t);
// {"prisoner": i, "radix": [...], "table": [...]}; the heard and seen
// prisoners are recovered from the game.
TableStrategy table_from_json(const Game& game, const nlohmann::json& j);

// Caches the per-prisoner structure of a game for repeated runs.
class PredictorRunner {
 public:
  PredictorRunner(const Game& game, const Predictor& p);
  GuessRecord run(const Coloring& f) const;

 private:
  GuessRecord run_finite(const Coloring& f) const;
  GuessRecord run_omega(const Coloring& f) const;

  const Game& game_;
  const Predictor& predictor_;
  GameStructure structure_;
  std::vector<Predictor::StrategyPtr> strategies_;  // finite games
  std::vector<PrisonerSet> seen_;
};

}  // namespace hatlab
