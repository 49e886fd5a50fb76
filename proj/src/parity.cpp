#include "hatlab/parity.hpp"

#include <random>

#include "hatlab/error.hpp"
#include "hatlab/evaluator.hpp"
#include "hatlab/strategy.hpp"

namespace hatlab {

ParityFunction::ParityFunction(PrisonerCount prisoners, ColorSpace space, Provenance provenance,
                               std::function<Color(const Coloring&)> evaluate)
    : prisoners_(prisoners), space_(space), provenance_(provenance), evaluate_(std::move(evaluate)) {}

bool ParityFunction::accepts(const Coloring& f) const {
  if (prisoners_) {
    if (!f.is_finite() || f.size() != *prisoners_) return false;
    for (const Color& c : f.values()) {
      if (!space_.contains(c)) return false;
    }
    return true;
  }
  if (f.is_finite() || f.base() != 0) return false;
  for (const auto& [a, c] : f.exceptions()) {
    if (!space_.contains(c)) return false;
  }
  return true;
}

Color ParityFunction::operator()(const Coloring& f) const {
  if (!accepts(f)) fail(ErrorCode::kParityDomainMismatch, f.to_string());
  return evaluate_(f);
}

bool ParityFunction::matches(const Game& game) const {
  return game.colors() == space_ && game.prisoner_count() == prisoners_;
}

std::string to_string(ParityFunction::Provenance p) {
  return p == ParityFunction::Provenance::kNegativeSum ? "negative-sum" : "robust-fep";
}

ParityFunction finite_parity(const ColorSpace& space, PrisonerCount slots) {
  return ParityFunction(slots, space, ParityFunction::Provenance::kNegativeSum, [space](const Coloring& f) {
    Color s = 0;
    if (f.is_finite()) {
      for (const Color& c : f.values()) s = space.add(s, c);
    } else {
      for (const auto& [a, c] : f.exceptions()) s = space.add(s, c);
    }
    return space.negate(s);
  });
}

ParityFunction parity_from_robust_fep(const Game& game, const Predictor& p, std::uint64_t trials,
                                      std::uint64_t seed) {
  if (!game.is_simultaneous()) fail(ErrorCode::kRequiresSimultaneous, "parity from a predictor");
  if (!(p.game() == game)) fail(ErrorCode::kMismatchedPredictor, "predictor built for another game");
  if (!check_robust(game, p, trials, seed)) fail(ErrorCode::kNotRobust, p.name());
  const ColorSpace space = game.colors();
  // the runner refers to these copies, which live as long as phi does
  auto owned_game = std::make_shared<Game>(game);
  auto owned_p = std::make_shared<Predictor>(p);
  auto runner = std::make_shared<PredictorRunner>(*owned_game, *owned_p);
  return ParityFunction(game.prisoner_count(), space, ParityFunction::Provenance::kFromRobustFep,
                        [space, runner, owned_game, owned_p](const Coloring& f) {
                          const GuessRecord r = runner->run(f);
                          if (!r.errors.is_finite()) {
                            fail(ErrorCode::kNotFiniteError, "infinitely many errors on " + f.to_string());
                          }
                          Color s = 0;
                          for (Prisoner a : r.errors.listed()) {
                            s = space.add(s, space.sub(r.guesses.at(a), f.at(a)));
                          }
                          return s;
                        });
}

namespace {

Color draw_color(const ColorSpace& space, std::int64_t range, std::mt19937_64& rng) {
  if (space.is_finite()) {
    return Color(std::uniform_int_distribution<std::uint32_t>(0, space.modulus() - 1)(rng));
  }
  return Color(std::uniform_int_distribution<std::int64_t>(-range, range)(rng));
}

}  // namespace

ParityCheckReport check_parity_equation(const ParityFunction& phi, std::uint64_t trials, std::uint64_t seed,
                                        const ParityCheckOptions& options) {
  std::mt19937_64 rng(seed);
  const ColorSpace& space = phi.space();
  ParityCheckReport report;
  for (std::uint64_t t = 0; t < trials; ++t) {
    Coloring f;
    Prisoner x = 0;
    if (phi.prisoners()) {
      std::vector<Color> values;
      for (std::size_t i = 0; i < *phi.prisoners(); ++i) values.push_back(draw_color(space, options.value_range, rng));
      f = Coloring::dense(std::move(values));
      x = std::uniform_int_distribution<std::size_t>(0, *phi.prisoners() - 1)(rng);
    } else {
      const std::size_t k = std::uniform_int_distribution<std::size_t>(0, options.max_support)(rng);
      std::map<Prisoner, Color> support;
      for (std::size_t i = 0; i < k; ++i) {
        const Prisoner a = std::uniform_int_distribution<std::size_t>(0, options.omega_window - 1)(rng);
        support[a] = draw_color(space, options.value_range, rng);
      }
      f = Coloring::sparse(std::move(support));
      x = std::uniform_int_distribution<std::size_t>(0, options.omega_window - 1)(rng);
    }
    const Color g1 = draw_color(space, options.value_range, rng);
    const Color g2 = options.equal_values ? g1 : draw_color(space, options.value_range, rng);
    const Color lhs = space.sub(phi(f.with(x, g1)), phi(f.with(x, g2)));
    const Color rhs = space.sub(g2, g1);
    ++report.trials;
    if (lhs == rhs) {
      ++report.passed;
    } else if (report.failures.size() < options.max_failures) {
      report.failures.push_back({f, x, g1, g2, lhs, rhs});
    }
  }
  return report;
}

Tupler::Tupler(std::size_t width) : width_(width) {
  if (width == 0) fail(ErrorCode::kInvalidArgument, "tuple width must be positive");
}

Color Tupler::pair(const Color& x, const Color& y) {
  if (x < 0 || y < 0) fail(ErrorCode::kInvalidArgument, "pairing is defined on naturals");
  const Color s = x + y;
  return s * (s + 1) / 2 + y;
}

std::pair<Color, Color> Tupler::unpair(const Color& z) {
  if (z < 0) fail(ErrorCode::kInvalidArgument, "pairing is defined on naturals");
  const Color w = (boost::multiprecision::sqrt(Color(8 * z + 1)) - 1) / 2;
  const Color t = w * (w + 1) / 2;
  const Color y = z - t;
  return {w - y, y};
}

Color Tupler::encode(const std::vector<Color>& tuple) const {
  if (tuple.size() != width_) {
    fail(ErrorCode::kInvalidArgument, "expected " + std::to_string(width_) + " coordinates");
  }
  Color code = tuple[0];
  if (code < 0) fail(ErrorCode::kInvalidArgument, "pairing is defined on naturals");
  for (std::size_t i = 1; i < tuple.size(); ++i) code = pair(code, tuple[i]);
  return code;
}

std::vector<Color> Tupler::decode(const Color& code) const {
  if (code < 0) fail(ErrorCode::kInvalidArgument, "pairing is defined on naturals");
  std::vector<Color> out(width_);
  Color rest = code;
  for (std::size_t i = width_ - 1; i > 0; --i) {
    auto [x, y] = unpair(rest);
    out[i] = y;
    rest = x;
  }
  out[0] = rest;
  return out;
}

Tupler nat_tupler(std::size_t width) { return Tupler(width); }

Color zigzag(const Color& z) { return z >= 0 ? Color(2 * z) : Color(-2 * z - 1); }

Color unzigzag(const Color& n) {
  if (n < 0) fail(ErrorCode::kInvalidArgument, "zigzag codes are natural numbers");
  return n % 2 == 0 ? Color(n / 2) : Color(-(n + 1) / 2);
}

}  // namespace hatlab
