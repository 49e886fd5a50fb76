#include "hatlab/strategy.hpp"

#include "hatlab/error.hpp"
#include "hatlab/game_json.hpp"

namespace hatlab {
namespace {

constexpr std::uint64_t kMaxTableSize = std::uint64_t{1} << 26;

std::uint64_t table_size(std::uint32_t colors, std::size_t digits) {
  std::uint64_t size = 1;
  for (std::size_t i = 0; i < digits; ++i) {
    if (size > kMaxTableSize / colors) {
      fail(ErrorCode::kSpaceTooLarge, "strategy table with " + std::to_string(digits) + " digits of radix " +
                                          std::to_string(colors));
    }
    size *= colors;
  }
  return size;
}

}  // namespace

TableStrategy::TableStrategy(Prisoner prisoner, std::vector<Prisoner> heard, std::vector<Prisoner> seen,
                             std::uint32_t colors, std::vector<std::uint32_t> table)
    : prisoner_(prisoner), heard_(std::move(heard)), seen_(std::move(seen)), table_(std::move(table)) {
  radix_.assign(heard_.size() + seen_.size(), colors);
  if (table_.size() != table_size(colors, radix_.size())) {
    fail(ErrorCode::kMismatchedPredictor, "table of prisoner " + std::to_string(prisoner_) + " has " +
                                              std::to_string(table_.size()) + " entries");
  }
  for (std::uint32_t c : table_) {
    if (c >= colors) fail(ErrorCode::kColorOutOfSpace, "table entry " + std::to_string(c));
  }
}

std::size_t TableStrategy::index_of(const PartialColoring& history, const PartialColoring& view) const {
  std::size_t index = 0;
  std::size_t digit = 0;
  auto push = [&](const Color& c) {
    if (c < 0 || c >= radix_[digit]) fail(ErrorCode::kColorOutOfSpace, to_string(c));
    index = index * radix_[digit] + static_cast<std::size_t>(c);
    ++digit;
  };
  for (Prisoner b : heard_) push(history.at(b));
  for (Prisoner b : seen_) push(view.at(b));
  return index;
}

Color TableStrategy::declare(const PartialColoring& history, const PartialColoring& view) const {
  return Color(table_[index_of(history, view)]);
}

Predictor::Predictor(Game game, std::string name, nlohmann::ordered_json params,
                     std::map<Prisoner, StrategyPtr> strategies, GenericFactory generic)
    : game_(std::make_shared<const Game>(std::move(game))),
      name_(std::move(name)),
      params_(std::move(params)),
      strategies_(std::move(strategies)),
      generic_(std::move(generic)) {
  if (game_->is_finite()) {
    for (Prisoner a = 0; a < game_->size(); ++a) {
      if (!strategies_.count(a) && !generic_) {
        fail(ErrorCode::kMismatchedPredictor, "no strategy for prisoner " + std::to_string(a));
      }
    }
  }
}

Predictor::StrategyPtr Predictor::strategy_for(Prisoner a) const {
  if (auto it = strategies_.find(a); it != strategies_.end()) return it->second;
  if (generic_ && game_->has_prisoner(a)) return generic_(a);
  fail(ErrorCode::kMismatchedPredictor, "no strategy for prisoner " + std::to_string(a));
}

PredictorRunner::PredictorRunner(const Game& game, const Predictor& p)
    : game_(game), predictor_(p), structure_(derive_structure(game)) {
  if (!(p.game() == game)) fail(ErrorCode::kMismatchedPredictor, "predictor \"" + p.name() + "\" was built for another game");
  if (game.is_finite()) {
    for (Prisoner a = 0; a < game.size(); ++a) {
      strategies_.push_back(p.strategy_for(a));
      seen_.push_back(game.seen_by(a));
    }
  }
}

GuessRecord PredictorRunner::run(const Coloring& f) const {
  require_coloring(game_, f);
  return game_.is_finite() ? run_finite(f) : run_omega(f);
}

GuessRecord PredictorRunner::run_finite(const Coloring& f) const {
  const std::size_t n = game_.size();
  const ColorSpace& space = game_.colors();
  std::vector<Color> decl(n);
  for (Inning beta = 1; beta <= structure_.num_innings; ++beta) {
    const PrisonerSet& heard = structure_.hearing_of_inning(beta);
    std::map<Prisoner, Color> hist;
    for (Prisoner b : heard.listed()) hist.emplace(b, decl[b]);
    const PartialColoring history = PartialColoring::of(std::move(hist));
    for (Prisoner a : structure_.inning_set(beta).listed()) {
      Color c = strategies_[a]->declare(history, PartialColoring::restrict(f, seen_[a]));
      if (!space.contains(c)) {
        fail(ErrorCode::kInternal, "prisoner " + std::to_string(a) + " declared " + to_string(c) + " outside " +
                                       space.describe());
      }
      decl[a] = std::move(c);
    }
  }
  std::vector<Prisoner> match, errors;
  for (Prisoner a = 0; a < n; ++a) (decl[a] == f.at(a) ? match : errors).push_back(a);
  return {Coloring::dense(std::move(decl)), PrisonerSet::finite(std::move(match)), PrisonerSet::finite(std::move(errors))};
}

GuessRecord PredictorRunner::run_omega(const Coloring& f) const {
  const ColorSpace& space = game_.colors();
  std::vector<Prisoner> relevant_list = game_.explicit_prisoners();
  for (const auto& [a, c] : f.exceptions()) relevant_list.push_back(a);
  const PrisonerSet relevant = PrisonerSet::finite(relevant_list);
  const Prisoner generic = game_.generic_prisoner(relevant);
  const Inning default_inning = game_.innings().default_inning();

  std::map<Prisoner, Color> decl;
  Color generic_decl;
  for (Inning beta = 1; beta <= structure_.num_innings; ++beta) {
    std::vector<Prisoner> speakers;
    for (Prisoner a : relevant.listed()) {
      if (game_.inning(a) == beta) speakers.push_back(a);
    }
    if (beta == default_inning) speakers.push_back(generic);
    const PrisonerSet& heard = structure_.hearing_of_inning(beta);
    std::map<Prisoner, Color> hist;
    for (const auto& [b, c] : decl) {
      if (heard.contains(b)) hist.emplace(b, c);
    }
    const PartialColoring history =
        PartialColoring::with_base(heard, heard.is_finite() ? Color(0) : generic_decl, std::move(hist));
    for (Prisoner a : speakers) {
      Color c = predictor_.strategy_for(a)->declare(history, PartialColoring::restrict(f, game_.seen_by(a)));
      if (!space.contains(c)) {
        fail(ErrorCode::kInternal, "prisoner " + std::to_string(a) + " declared " + to_string(c) + " outside " +
                                       space.describe());
      }
      if (a == generic) {
        generic_decl = std::move(c);
      } else {
        decl.emplace(a, std::move(c));
      }
    }
  }
  std::vector<Prisoner> wrong, right;
  for (const auto& [a, c] : decl) (c == f.at(a) ? right : wrong).push_back(a);
  const bool generic_right = generic_decl == f.base();
  PrisonerSet errors = generic_right ? PrisonerSet::finite(wrong) : PrisonerSet::cofinite(right);
  Coloring guesses = Coloring::sparse(std::move(decl), generic_decl);
  return {std::move(guesses), errors.complement(), errors};
}

GuessRecord run_predictor(const Game& game, const Predictor& p, const Coloring& f) {
  return PredictorRunner(game, p).run(f);
}

TableStrategy empty_table(const Game& game, Prisoner a) {
  if (!game.is_finite()) fail(ErrorCode::kRequiresFiniteGame, "strategy tables need finitely many prisoners");
  if (!game.colors().is_finite()) fail(ErrorCode::kRequiresFiniteColors, "strategy tables need finitely many colors");
  game.require_prisoner(a);
  const std::uint32_t k = game.colors().modulus();
  std::vector<Prisoner> heard = game.heard_by(a).listed();
  std::vector<Prisoner> seen = game.seen_by(a).listed();
  const std::uint64_t size = table_size(k, heard.size() + seen.size());
  return TableStrategy(a, std::move(heard), std::move(seen), k, std::vector<std::uint32_t>(size, 0));
}

std::vector<TableStrategy> constant_tables(const Game& game, std::uint32_t color) {
  std::vector<TableStrategy> out;
  for (Prisoner a = 0; a < game.size(); ++a) {
    TableStrategy t = empty_table(game, a);
    out.emplace_back(a, t.heard(), t.seen(), game.colors().modulus(),
                     std::vector<std::uint32_t>(t.table().size(), color));
  }
  return out;
}

Predictor table_predictor(const Game& game, const std::vector<TableStrategy>& tables) {
  std::map<Prisoner, Predictor::StrategyPtr> strategies;
  nlohmann::ordered_json params = nlohmann::ordered_json::array();
  for (const TableStrategy& t : tables) {
    const TableStrategy layout = empty_table(game, t.prisoner());
    if (layout.heard() != t.heard() || layout.seen() != t.seen() || layout.radix() != t.radix()) {
      fail(ErrorCode::kMismatchedPredictor, "table of prisoner " + std::to_string(t.prisoner()) +
                                                " does not match its hearing and visibility");
    }
    if (!strategies.emplace(t.prisoner(), std::make_shared<TableStrategy>(t)).second) {
      fail(ErrorCode::kMismatchedPredictor, "two tables for prisoner " + std::to_string(t.prisoner()));
    }
  }
  return Predictor(game, "tables", nlohmann::ordered_json::object(), std::move(strategies));
}

nlohmann::ordered_json table_to_json(const TableStrategy& t) {
  return {{"prisoner", t.prisoner()}, {"radix", t.radix()}, {"table", t.table()}};
}

TableStrategy table_from_json(const Game& game, const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("prisoner") || !j.contains("radix") || !j.contains("table")) {
    fail(ErrorCode::kInvalidArgument, "table JSON needs \"prisoner\", \"radix\" and \"table\"");
  }
  const Prisoner a = j.at("prisoner").get<Prisoner>();
  const TableStrategy layout = empty_table(game, a);
  if (j.at("radix").get<std::vector<std::uint32_t>>() != layout.radix()) {
    fail(ErrorCode::kMismatchedPredictor, "radix of prisoner " + std::to_string(a) + " does not match the game");
  }
  return TableStrategy(a, layout.heard(), layout.seen(), game.colors().modulus(),
                       j.at("table").get<std::vector<std::uint32_t>>());
}

}  // namespace hatlab
