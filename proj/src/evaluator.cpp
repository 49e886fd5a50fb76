#include "hatlab/evaluator.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <set>
#include <thread>

#include "hatlab/error.hpp"

namespace hatlab {

Goal Goal::parse(const std::string& text) {
  auto number = [&](std::size_t from) -> std::size_t {
    const std::string digits = text.substr(from);
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      fail(ErrorCode::kInvalidArgument, "goal \"" + text + "\" must be correct>=N or errors<=N");
    }
    return std::stoull(digits);
  };
  if (text.rfind("correct>=", 0) == 0) return correct_at_least(number(9));
  if (text.rfind("errors<=", 0) == 0) return errors_at_most(number(8));
  fail(ErrorCode::kInvalidArgument, "goal \"" + text + "\" must be correct>=N or errors<=N");
}

long long Goal::max_errors(std::size_t prisoners) const {
  if (kind == Kind::kErrorsAtMost) return static_cast<long long>(std::min(n, prisoners));
  return static_cast<long long>(prisoners) - static_cast<long long>(n);
}

std::string Goal::to_string() const {
  return (kind == Kind::kCorrectAtLeast ? "correct>=" : "errors<=") + std::to_string(n);
}

namespace {

constexpr std::size_t kUnboundedBucket = std::numeric_limits<std::size_t>::max();

void require_finite_space(const Game& game) {
  if (!game.is_finite()) fail(ErrorCode::kRequiresFiniteGame, "exhaustive evaluation needs finitely many prisoners");
  if (!game.colors().is_finite()) fail(ErrorCode::kRequiresFiniteColors, "exhaustive evaluation needs mod(n) colors");
}

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Accumulates one block of colorings; blocks are merged in order.
struct Tally {
  std::uint64_t count = 0;
  std::uint64_t total_correct = 0;
  bool unbounded = false;
  std::map<std::size_t, std::uint64_t> histogram;
  std::map<std::size_t, Coloring> witnesses;
  PrisonerSet erring;

  void add(const Game& game, const Coloring& f, const GuessRecord& r) {
    ++count;
    std::size_t bucket;
    if (game.is_finite()) {
      bucket = game.size() - r.errors.size();
      total_correct += bucket;
    } else if (r.errors.is_finite()) {
      bucket = r.errors.size();
    } else {
      bucket = kUnboundedBucket;
      unbounded = true;
    }
    ++histogram[bucket];
    witnesses.try_emplace(bucket, f);
    erring = erring.unite(r.errors);
  }

  void merge(const Tally& later) {
    count += later.count;
    total_correct += later.total_correct;
    unbounded = unbounded || later.unbounded;
    for (const auto& [k, v] : later.histogram) histogram[k] += v;
    for (const auto& [k, f] : later.witnesses) witnesses.try_emplace(k, f);
    erring = erring.unite(later.erring);
  }
};

EvaluationReport finish(const Game& game, const Tally& t) {
  EvaluationReport report;
  report.prisoners = game.prisoner_count();
  report.coloring_count = t.count;
  report.total_correct = t.total_correct;
  report.histogram = t.histogram;
  report.witnesses = t.witnesses;
  report.erring = t.erring;
  report.unbounded_errors = t.unbounded;
  if (game.is_finite()) {
    if (!t.histogram.empty()) {
      report.min_correct = t.histogram.begin()->first;
      report.max_errors = game.size() - report.min_correct;
    }
  } else {
    for (const auto& [k, v] : t.histogram) {
      if (k != kUnboundedBucket) report.max_errors = std::max(report.max_errors, k);
    }
  }
  return report;
}

// Splits [0, total) into `threads` contiguous blocks and merges in order.
Tally run_blocks(std::uint64_t total, unsigned threads,
                 const std::function<void(std::uint64_t, std::uint64_t, Tally&)>& work) {
  threads = std::max(1u, threads);
  if (threads == 1 || total < 2 * threads) {
    Tally t;
    work(0, total, t);
    return t;
  }
  std::vector<Tally> parts(threads);
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(threads);
  for (unsigned i = 0; i < threads; ++i) {
    const std::uint64_t lo = total * i / threads;
    const std::uint64_t hi = total * (i + 1) / threads;
    pool.emplace_back([&, i, lo, hi] {
      try {
        work(lo, hi, parts[i]);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  Tally out;
  for (const Tally& p : parts) out.merge(p);
  return out;
}

}  // namespace

std::optional<std::uint64_t> coloring_space_size(const Game& game, std::uint64_t cap) {
  require_finite_space(game);
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < game.size(); ++i) {
    if (total > cap / game.colors().modulus()) return std::nullopt;
    total *= game.colors().modulus();
  }
  if (total > cap) return std::nullopt;
  return total;
}

Coloring coloring_at(const Game& game, std::uint64_t index) {
  require_finite_space(game);
  const std::uint32_t k = game.colors().modulus();
  std::vector<Color> values(game.size());
  for (std::size_t i = game.size(); i-- > 0;) {
    values[i] = Color(index % k);
    index /= k;
  }
  return Coloring::dense(std::move(values));
}

EvaluationReport evaluate_exhaustive(const Game& game, const Predictor& p, const ExhaustiveOptions& options) {
  const auto size = coloring_space_size(game, options.cap);
  if (!size) fail(ErrorCode::kSpaceTooLarge, "more than " + std::to_string(options.cap) + " colorings");
  const PredictorRunner runner(game, p);
  const std::uint32_t k = game.colors().modulus();
  Tally t = run_blocks(*size, options.threads, [&](std::uint64_t lo, std::uint64_t hi, Tally& tally) {
    if (lo >= hi) return;
    Coloring first = coloring_at(game, lo);
    std::vector<std::uint32_t> digits;
    for (const Color& c : first.values()) digits.push_back(static_cast<std::uint32_t>(c));
    std::vector<Color> values = first.values();
    for (std::uint64_t i = lo; i < hi; ++i) {
      const Coloring f = Coloring::dense(values);
      tally.add(game, f, runner.run(f));
      for (std::size_t d = digits.size(); d-- > 0;) {
        if (++digits[d] < k) {
          values[d] = digits[d];
          break;
        }
        digits[d] = 0;
        values[d] = 0;
      }
    }
  });
  EvaluationReport report = finish(game, t);
  report.mode = EvaluationReport::Mode::kExhaustive;
  return report;
}

Coloring sample_coloring(const Game& game, std::uint64_t seed, std::uint64_t index, std::uint64_t range,
                         const SampleOptions& options) {
  std::uint64_t hi = range;
  if (game.colors().is_finite()) hi = std::min<std::uint64_t>(hi, game.colors().modulus());
  const std::uint64_t lo = options.nonzero_values ? 1 : 0;
  if (hi <= lo) fail(ErrorCode::kInvalidArgument, "sampling range leaves no colors to draw");
  std::mt19937_64 rng(splitmix(splitmix(seed) ^ index));
  std::uniform_int_distribution<std::uint64_t> value(lo, hi - 1);
  if (game.is_finite()) {
    std::vector<Color> values;
    for (std::size_t i = 0; i < game.size(); ++i) values.emplace_back(value(rng));
    return Coloring::dense(std::move(values));
  }
  if (options.min_support > options.max_support || options.max_support > options.window) {
    fail(ErrorCode::kInvalidArgument, "support bounds must satisfy min <= max <= window");
  }
  const std::size_t k = std::uniform_int_distribution<std::size_t>(options.min_support, options.max_support)(rng);
  std::set<Prisoner> positions;
  std::uniform_int_distribution<std::size_t> position(0, options.window - 1);
  while (positions.size() < k) positions.insert(position(rng));
  std::map<Prisoner, Color> support;
  for (Prisoner a : positions) support[a] = Color(value(rng));
  return Coloring::sparse(std::move(support));
}

EvaluationReport evaluate_sampled(const Game& game, const Predictor& p, std::uint64_t n, std::uint64_t seed,
                                  std::uint64_t range, const SampleOptions& options) {
  if (n == 0) fail(ErrorCode::kInvalidArgument, "at least one sample is needed");
  const PredictorRunner runner(game, p);
  Tally t = run_blocks(n, options.threads, [&](std::uint64_t lo, std::uint64_t hi, Tally& tally) {
    for (std::uint64_t i = lo; i < hi; ++i) {
      const Coloring f = sample_coloring(game, seed, i, range, options);
      tally.add(game, f, runner.run(f));
    }
  });
  EvaluationReport report = finish(game, t);
  report.mode = EvaluationReport::Mode::kSampled;
  report.seed = seed;
  return report;
}

bool ps_membership(const EvaluationReport& report, const Goal& goal) {
  const bool finite = report.prisoners.has_value();
  if (goal.kind == Goal::Kind::kCorrectAtLeast) {
    if (goal.n == 0) return true;
    if (!finite) {
      if (report.mode == EvaluationReport::Mode::kSampled) {
        fail(ErrorCode::kSampledReportNotConclusive, "omega samples cannot refute " + goal.to_string());
      }
      return true;
    }
    if (report.min_correct < goal.n) return false;
  } else {
    if (finite && goal.n >= *report.prisoners) return true;
    if (report.unbounded_errors || report.max_errors > goal.n) return false;
  }
  if (report.mode == EvaluationReport::Mode::kSampled) {
    fail(ErrorCode::kSampledReportNotConclusive, "samples never certify " + goal.to_string());
  }
  return true;
}

bool average_correct_check(const Game& game, const Predictor& p) {
  if (!game.is_simultaneous()) fail(ErrorCode::kRequiresSimultaneous, "the counting identity needs IN = 1");
  const EvaluationReport report = evaluate_exhaustive(game, p);
  std::uint64_t expected = game.size();
  for (std::size_t i = 1; i < game.size(); ++i) expected *= game.colors().modulus();
  return report.total_correct == expected;
}

Coloring acyclic_adversary(const Game& game, const Predictor& p) {
  if (!game.is_finite()) fail(ErrorCode::kRequiresFiniteGame, "layering needs finitely many prisoners");
  if (!game.is_simultaneous()) fail(ErrorCode::kRequiresSimultaneous, "acyclic adversary");
  if (!game.colors().is_finite() || game.colors().modulus() != 2) {
    fail(ErrorCode::kRequiresTwoColors, game.colors().describe());
  }
  const std::size_t n = game.size();
  // layer(a) = 0 when V(a) is empty, else 1 + the largest layer a sees
  std::vector<long> layer(n, -1);
  std::size_t placed = 0;
  for (long m = 0; placed < n; ++m) {
    std::vector<Prisoner> next;
    for (Prisoner a = 0; a < n; ++a) {
      if (layer[a] >= 0) continue;
      const auto seen = game.seen_by(a).listed();
      if (std::all_of(seen.begin(), seen.end(), [&](Prisoner b) { return layer[b] >= 0; })) next.push_back(a);
    }
    if (next.empty()) fail(ErrorCode::kGraphHasCycle, "the visibility graph contains a directed cycle");
    for (Prisoner a : next) layer[a] = m;
    placed += next.size();
  }
  const PredictorRunner runner(game, p);
  Coloring f = Coloring::dense(std::vector<Color>(n, 0));
  const long depth = *std::max_element(layer.begin(), layer.end());
  for (long m = 0; m <= depth; ++m) {
    const Coloring guesses = runner.run(f).guesses;
    for (Prisoner a = 0; a < n; ++a) {
      if (layer[a] == m) f = f.with(a, Color(1 - guesses.at(a)));
    }
  }
  if (!runner.run(f).match.empty()) fail(ErrorCode::kInternal, "adversary coloring left a correct prisoner");
  return f;
}

Coloring double_correct_coloring(const Game& game, const Predictor& p, Prisoner a, Prisoner b) {
  game.require_prisoner(a);
  game.require_prisoner(b);
  if (!game.is_simultaneous()) fail(ErrorCode::kRequiresSimultaneous, "double-correct coloring");
  if (a == b) fail(ErrorCode::kInvalidArgument, "two distinct prisoners are needed");
  if (game.visibility().sees(a, b)) {
    fail(ErrorCode::kEdgePresent, std::to_string(a) + " sees " + std::to_string(b));
  }
  const PredictorRunner runner(game, p);
  Coloring f = game.is_finite() ? Coloring::dense(std::vector<Color>(game.size(), 0)) : Coloring::sparse({});
  f = f.with(a, runner.run(f).guesses.at(a));
  f = f.with(b, runner.run(f).guesses.at(b));
  const PrisonerSet match = runner.run(f).match;
  if (!match.contains(a) || !match.contains(b)) fail(ErrorCode::kInternal, "double-correct construction failed");
  return f;
}

bool check_robust(const Game& game, const Predictor& p, std::uint64_t trials, std::uint64_t seed) {
  const PredictorRunner runner(game, p);
  const Coloring zero = game.is_finite() ? Coloring::dense(std::vector<Color>(game.size(), 0)) : Coloring::sparse({});
  const Coloring reference = runner.run(zero).guesses;
  if (game.is_finite() && game.colors().is_finite()) {
    if (const auto size = coloring_space_size(game, std::uint64_t{1} << 20)) {
      for (std::uint64_t i = 0; i < *size; ++i) {
        if (!(runner.run(coloring_at(game, i)).guesses == reference)) return false;
      }
      return true;
    }
  }
  for (std::uint64_t i = 0; i < trials; ++i) {
    if (!(runner.run(sample_coloring(game, seed, i, 1000)).guesses == reference)) return false;
  }
  return true;
}

}  // namespace hatlab
