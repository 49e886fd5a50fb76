#include "hatlab/theorem_lab.hpp"

#include <chrono>
#include <random>
#include <set>

#include "hatlab/constructions.hpp"
#include "hatlab/digraph.hpp"
#include "hatlab/error.hpp"
#include "hatlab/evaluator.hpp"
#include "hatlab/game_json.hpp"
#include "hatlab/hunt.hpp"
#include "hatlab/parity.hpp"
#include "hatlab/report_json.hpp"
#include "hatlab/search.hpp"

namespace hatlab {

namespace {

template <typename T>
T param(const nlohmann::json& params, const char* key, T fallback) {
  if (!params.contains(key)) return fallback;
  try {
    return params.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    fail(ErrorCode::kInvalidArgument, std::string("parameter \"") + key + "\" has the wrong type");
  }
}

std::vector<std::uint32_t> color_list(const nlohmann::json& params, const char* key, std::vector<std::uint32_t> fallback) {
  if (!params.contains(key)) return fallback;
  const auto& v = params.at(key);
  if (v.is_number_unsigned()) return {v.get<std::uint32_t>()};
  return param<std::vector<std::uint32_t>>(params, key, fallback);
}

SearchOptions search_options(const nlohmann::json& params) {
  SearchOptions o;
  o.budget = static_cast<std::uint64_t>(param<double>(params, "budget", 1e7));
  o.symmetry = param<bool>(params, "symmetry", false);
  o.capacity_bound = param<bool>(params, "capacity_bound", true);
  return o;
}

// Search verdict, refusing to guess when the budget runs out.
SearchCertificate decide(const Game& game, const Goal& goal, const SearchOptions& options) {
  SearchCertificate cert = decide_ps(game, goal, options);
  if (cert.verdict == SearchCertificate::Verdict::kUnknown) {
    fail(ErrorCode::kBudgetExceeded, "search gave up after " + std::to_string(cert.nodes_explored) +
                                         " nodes on " + game_to_json(game).dump());
  }
  return cert;
}

Json tables_json(const std::vector<TableStrategy>& tables) {
  Json out = Json::array();
  for (const TableStrategy& t : tables) out.push_back(table_to_json(t));
  return out;
}

void record(TheoremReport& r, bool ok, std::string description, Json witness) {
  ++r.instances;
  if (ok) {
    ++r.consistent;
  } else {
    r.violations.push_back({std::move(description), std::move(witness)});
  }
}

// A SAT certificate must replay to a report meeting its goal.
bool replays(const Game& game, const Goal& goal, const SearchCertificate& cert) {
  return ps_membership(evaluate_exhaustive(game, certificate_predictor(game, cert)), goal);
}

std::vector<Game> multi_inning_games(std::size_t n, std::uint32_t k) {
  FamilySpec family;
  family.prisoner_counts = {n};
  family.colors = ColorSpace::modular(k);
  for (Inning b = 2; b <= n; ++b) family.inning_counts.push_back(b);
  return enumerate_family(family);
}

void check_f2vcyclic(TheoremReport& r, const nlohmann::json& params) {
  const std::size_t n = param<std::size_t>(params, "n", 3);
  const SearchOptions options = search_options(params);
  const Goal goal = Goal::correct_at_least(1);
  for (const VisibilityGraph& v : enumerate_digraphs(n)) {
    const Game game = Game::make(n, ColorSpace::modular(2), v, InningFunction::list(std::vector<Inning>(n, 1)));
    const SearchCertificate cert = decide(game, goal, options);
    const bool sat = cert.verdict == SearchCertificate::Verdict::kSat;
    const bool cyclic = has_directed_cycle(v);
    bool ok = sat == cyclic;
    if (ok && sat) ok = replays(game, goal, cert);
    record(r, ok, std::string(cyclic ? "cyclic" : "acyclic") + " graph with verdict " + to_string(cert.verdict),
           {{"game", game_to_json(game)}, {"tables", tables_json(cert.tables)}});
  }
}

void check_ffvcomplete(TheoremReport& r, const nlohmann::json& params) {
  const std::size_t n = param<std::size_t>(params, "n", 3);
  const SearchOptions options = search_options(params);
  const Goal goal = Goal::correct_at_least(1);
  for (const VisibilityGraph& v : enumerate_digraphs(n)) {
    const Game game = Game::make(n, ColorSpace::modular(static_cast<std::uint32_t>(n)), v,
                                 InningFunction::list(std::vector<Inning>(n, 1)));
    const SearchCertificate cert = decide(game, goal, options);
    const bool sat = cert.verdict == SearchCertificate::Verdict::kSat;
    const bool complete = game.has_complete_visibility();
    bool ok = sat == complete;
    if (ok && sat) ok = replays(game, goal, cert);
    if (ok && complete) {
      const EvaluationReport report = evaluate_exhaustive(game, mod_sum_predictor(game));
      ok = report.min_correct == 1 && report.max_errors == n - 1;
    }
    record(r, ok, std::string(complete ? "complete" : "incomplete") + " graph with verdict " + to_string(cert.verdict),
           {{"game", game_to_json(game)}, {"tables", tables_json(cert.tables)}});
  }
}

void check_average(TheoremReport& r, const nlohmann::json& params) {
  const std::size_t n = param<std::size_t>(params, "prisoners", 3);
  const std::uint32_t k = param<std::uint32_t>(params, "colors", 2);
  const std::uint64_t count = param<std::uint64_t>(params, "count", 100);
  const std::uint64_t seed = param<std::uint64_t>(params, "seed", 0);
  if (n > 5) fail(ErrorCode::kTooManyNodes, std::to_string(n) + " prisoners");
  std::mt19937_64 rng(seed);
  const std::uint64_t masks = std::uint64_t{1} << (n * (n - 1));
  std::uint64_t expected = n;
  for (std::size_t i = 1; i < n; ++i) expected *= k;
  for (std::uint64_t i = 0; i < count; ++i) {
    const VisibilityGraph v = digraph_from_mask(n, std::uniform_int_distribution<std::uint64_t>(0, masks - 1)(rng));
    const Game game = Game::make(n, ColorSpace::modular(k), v, InningFunction::list(std::vector<Inning>(n, 1)));
    std::vector<TableStrategy> tables;
    for (Prisoner a = 0; a < n; ++a) {
      const TableStrategy layout = empty_table(game, a);
      std::vector<std::uint32_t> entries(layout.table().size());
      for (auto& e : entries) e = std::uniform_int_distribution<std::uint32_t>(0, k - 1)(rng);
      tables.emplace_back(a, layout.heard(), layout.seen(), k, std::move(entries));
    }
    const EvaluationReport report = evaluate_exhaustive(game, table_predictor(game, tables));
    record(r, report.total_correct == expected,
           "total correct " + std::to_string(report.total_correct) + ", expected " + std::to_string(expected),
           {{"game", game_to_json(game)}, {"tables", tables_json(tables)}});
  }
}

// Sub-properties of a one-error predictor under S1 and S3; returns the
// first failure, or an empty string.
std::string useful_failure(const Game& game, const Predictor& p, Prisoner s) {
  const std::size_t n = game.size();
  const std::uint32_t k = game.colors().modulus();
  if (!(game.seen_by(s) == game.prisoners().minus(PrisonerSet::single(s)))) return "the first speaker does not see everyone";
  const PredictorRunner runner(game, p);
  const std::uint64_t total = *coloring_space_size(game, std::uint64_t{1} << 24);
  std::vector<GuessRecord> runs;
  for (std::uint64_t i = 0; i < total; ++i) {
    runs.push_back(runner.run(coloring_at(game, i)));
    if (!runs.back().errors.subset_of(PrisonerSet::single(s))) {
      return "prisoner other than the first speaker errs on " + coloring_at(game, i).to_string();
    }
  }
  std::vector<std::uint64_t> weight(n, 1);
  for (std::size_t i = n - 1; i-- > 0;) weight[i] = weight[i + 1] * k;
  for (std::uint64_t i = 0; i < total; ++i) {
    for (Prisoner a = 0; a < n; ++a) {
      if (a == s) continue;
      const std::uint64_t digit = i / weight[a] % k;
      for (std::uint64_t c = 0; c < k; ++c) {
        if (c == digit) continue;
        const std::uint64_t j = i - digit * weight[a] + c * weight[a];
        if (runs[i].guesses.at(s) == runs[j].guesses.at(s)) {
          return "changing prisoner " + std::to_string(a) + " keeps the first guess on " + coloring_at(game, i).to_string();
        }
      }
    }
  }
  // reachable (history, view) pairs per later prisoner
  std::map<Prisoner, std::set<std::pair<std::vector<std::uint32_t>, std::vector<std::uint32_t>>>> reached;
  for (std::uint64_t i = 0; i < total; ++i) {
    const Coloring f = coloring_at(game, i);
    for (Prisoner a = 0; a < n; ++a) {
      if (a == s) continue;
      std::vector<std::uint32_t> h, v;
      for (Prisoner b : game.heard_by(a).listed()) h.push_back(static_cast<std::uint32_t>(runs[i].guesses.at(b)));
      for (Prisoner b : game.seen_by(a).listed()) v.push_back(static_cast<std::uint32_t>(f.at(b)));
      reached[a].insert({h, v});
    }
  }
  for (const auto& [a, pairs] : reached) {
    const std::vector<Prisoner> heard = game.heard_by(a).listed();
    const std::size_t pos = static_cast<std::size_t>(std::find(heard.begin(), heard.end(), s) - heard.begin());
    const auto strategy = p.strategy_for(a);
    auto declare = [&](const std::vector<std::uint32_t>& h, const std::vector<std::uint32_t>& v) {
      std::map<Prisoner, Color> hm, vm;
      for (std::size_t i = 0; i < heard.size(); ++i) hm[heard[i]] = h[i];
      const auto seen = game.seen_by(a).listed();
      for (std::size_t i = 0; i < seen.size(); ++i) vm[seen[i]] = v[i];
      return strategy->declare(PartialColoring::of(hm), PartialColoring::of(vm));
    };
    for (const auto& [h, v] : pairs) {
      for (std::uint32_t c = 0; c < k; ++c) {
        if (c == h[pos]) continue;
        auto h2 = h;
        h2[pos] = c;
        if (!pairs.count({h2, v})) continue;
        if (declare(h, v) == declare(h2, v)) {
          return "prisoner " + std::to_string(a) + " ignores a change of the first declaration";
        }
      }
    }
  }
  return {};
}

void check_useful_props(TheoremReport& r, const nlohmann::json& params) {
  const std::size_t n = param<std::size_t>(params, "n", 3);
  const SearchOptions options = search_options(params);
  const Goal goal = Goal::errors_at_most(1);
  std::uint64_t games = 0;
  for (std::uint32_t k : color_list(params, "colors", {2, 3})) {
    for (const Game& game : multi_inning_games(n, k)) {
      const ConditionProfile prof = condition_profile(game);
      if (!prof.s1 || !prof.s3) continue;
      ++games;
      const SearchCertificate cert = decide(game, goal, options);
      if (cert.verdict != SearchCertificate::Verdict::kSat) continue;
      const Predictor p = certificate_predictor(game, cert);
      const Prisoner s = derive_structure(game).first_speakers.listed().front();
      const std::string failure = replays(game, goal, cert) ? useful_failure(game, p, s) : "certificate does not replay";
      record(r, failure.empty(), failure, {{"game", game_to_json(game)}, {"tables", tables_json(cert.tables)}});
    }
  }
  r.notes.push_back(std::to_string(games) + " games with S1 and S3 searched; instances are the SAT ones");
  r.notes.push_back("the declaration-change property is checked on pairs of reachable histories only");
}

void check_after_ffva(TheoremReport& r, const nlohmann::json& params) {
  const std::size_t n = param<std::size_t>(params, "n", 3);
  const SearchOptions options = search_options(params);
  const Goal goal = Goal::errors_at_most(1);
  for (std::uint32_t k : color_list(params, "colors", {3})) {
    if (k < 3) fail(ErrorCode::kInvalidArgument, "after-ffva needs at least three colors");
    for (const Game& game : multi_inning_games(n, k)) {
      const ConditionProfile prof = condition_profile(game);
      if (!prof.s3) continue;
      const SearchCertificate cert = decide(game, goal, options);
      const bool sat = cert.verdict == SearchCertificate::Verdict::kSat;
      bool ok = sat == (prof.s1 && prof.s2);
      if (ok && sat) ok = replays(game, goal, cert);
      record(r, ok, "S1 and S2 = " + std::string(prof.s1 && prof.s2 ? "true" : "false") + " with verdict " + to_string(cert.verdict),
             {{"game", game_to_json(game)}, {"tables", tables_json(cert.tables)}});
    }
  }
}

void check_after_fiva(TheoremReport& r, const nlohmann::json& params) {
  const std::size_t n = param<std::size_t>(params, "n", 3);
  const std::uint64_t samples = param<std::uint64_t>(params, "samples", 100);
  const std::uint64_t seed = param<std::uint64_t>(params, "seed", 0);
  const SearchOptions options = search_options(params);
  const Goal goal = Goal::errors_at_most(1);
  // Shape enumeration only; the int-colored game is rebuilt per instance.
  for (const Game& shape : multi_inning_games(n, 2)) {
    const ConditionProfile prof = condition_profile(shape);
    if (!prof.s3) continue;
    const Game game = Game::make(n, ColorSpace::integers(), shape.visibility(), shape.innings());
    const Json witness{{"game", game_to_json(game)}};
    if (prof.s1 && prof.s4) {
      const EvaluationReport report = evaluate_sampled(game, bijection_hint_predictor(game), samples, seed, 1000);
      record(r, report.max_errors <= 1, "bijection hint erred twice", witness);
      continue;
    }
    // A predictor over the integers induces one over {0..m-1} (guesses
    // outside mapped to 0) that errs no more often there, so UNSAT on the
    // finite projection rules out every integer predictor.
    const PrisonerSet first = derive_structure(shape).first_speakers;
    bool ok;
    std::string what;
    if (!prof.s1) {
      const std::size_t m = first.size();
      std::vector<std::vector<Prisoner>> seen(m);
      const auto members = first.listed();
      for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
          if (shape.visibility().sees(members[i], members[j])) seen[i].push_back(j);
        }
      }
      const Game sub = Game::make(m, ColorSpace::modular(static_cast<std::uint32_t>(m + 1)),
                                  VisibilityGraph::lists(std::move(seen)), InningFunction::list(std::vector<Inning>(m, 1)));
      ok = decide(sub, goal, options).verdict == SearchCertificate::Verdict::kUnsat;
      what = "first-inning projection onto mod(" + std::to_string(m + 1) + ") admits one error";
    } else {
      const Game projected = Game::make(n, ColorSpace::modular(3), shape.visibility(), shape.innings());
      ok = decide(projected, goal, options).verdict == SearchCertificate::Verdict::kUnsat;
      what = "mod(3) projection without S4 admits one error";
    }
    record(r, ok, what, witness);
  }
  r.notes.push_back("integer colors are checked through finite projections; S1 and S4 games are sampled with the bijection hint");
}

void check_first_group(TheoremReport& r, const nlohmann::json& params) {
  const std::size_t n = param<std::size_t>(params, "n", 3);
  const SearchOptions options = search_options(params);
  const Goal goal = Goal::errors_at_most(1);
  for (std::uint32_t k : color_list(params, "colors", {2})) {
    for (const Game& game : multi_inning_games(n, k)) {
      const SearchCertificate cert = decide(game, goal, options);
      if (cert.verdict != SearchCertificate::Verdict::kSat) continue;
      const Predictor p = certificate_predictor(game, cert);
      for (std::uint32_t fill = 0; fill < k; ++fill) {
        const Restriction sub = restrict_to_first_inning(game, p, Color(fill));
        const EvaluationReport report = evaluate_exhaustive(sub.game, sub.predictor);
        record(r, ps_membership(report, goal), "induced first-inning predictor errs twice with fill " + std::to_string(fill),
               {{"game", game_to_json(game)}, {"tables", tables_json(cert.tables)}, {"fill", fill}});
      }
    }
  }
}

void check_robust_parity(TheoremReport& r, const nlohmann::json& params) {
  const std::uint64_t seed = param<std::uint64_t>(params, "seed", 0);
  const std::uint64_t trials = param<std::uint64_t>(params, "trials", 1000);
  const std::uint64_t samples = param<std::uint64_t>(params, "samples", 100);
  const Game flat = Game::make(kOmega, ColorSpace::integers(), VisibilityGraph::omega_complete(), InningFunction::omega(1));
  const Predictor fep = finite_support_fep(flat);
  const ParityFunction phi = parity_from_robust_fep(flat, fep, samples, seed);
  const ParityCheckReport eq = check_parity_equation(phi, trials, seed);
  record(r, eq.failures.empty(), "parity equation fails", {{"report", parity_report_to_json(eq)}});

  const ParityFunction reference = finite_parity(ColorSpace::integers(), kOmega);
  bool agree = true;
  Json witness = Json::object();
  for (std::uint64_t i = 0; i < trials && agree; ++i) {
    const Coloring f = sample_coloring(flat, seed, i, 1000);
    if (phi(f) != reference(f)) {
      agree = false;
      witness = {{"coloring", coloring_to_json(f)}};
    }
  }
  record(r, agree, "derived parity differs from the negative sum", witness);

  const Game staged = Game::make(kOmega, ColorSpace::integers(), VisibilityGraph::omega_complete(),
                                 InningFunction::omega(2, {{0, 1}}));
  const EvaluationReport report = evaluate_sampled(staged, parity_hint_predictor(staged, phi), samples, seed, 1000);
  record(r, !report.unbounded_errors && report.max_errors <= 1, "parity hint from the derived parity errs twice",
         {{"game", game_to_json(staged)}, {"report", report_to_json(report)}});
}

const std::map<std::string, void (*)(TheoremReport&, const nlohmann::json&)>& registry() {
  static const std::map<std::string, void (*)(TheoremReport&, const nlohmann::json&)> checks{
      {"f2vcyclic", check_f2vcyclic},   {"ffvcomplete", check_ffvcomplete},
      {"average", check_average},       {"useful-props", check_useful_props},
      {"after-ffva", check_after_ffva}, {"after-fiva", check_after_fiva},
      {"first-group", check_first_group}, {"robust-parity", check_robust_parity},
  };
  return checks;
}

}  // namespace

std::vector<std::string> theorem_names() {
  return {"f2vcyclic", "ffvcomplete", "average", "useful-props", "after-ffva", "after-fiva", "first-group", "robust-parity"};
}

TheoremReport check_theorem(const std::string& name, const nlohmann::json& params) {
  const auto it = registry().find(name);
  if (it == registry().end()) fail(ErrorCode::kUnknownTheorem, name);
  if (!params.is_object()) fail(ErrorCode::kInvalidArgument, "theorem parameters must be an object");
  TheoremReport r;
  r.theorem = name;
  r.params = params;
  const auto start = std::chrono::steady_clock::now();
  it->second(r, params);
  r.runtime_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

Json theorem_report_to_json(const TheoremReport& r) {
  Json violations = Json::array();
  for (const Violation& v : r.violations) violations.push_back({{"description", v.description}, {"witness", v.witness}});
  return {{"theorem", r.theorem},   {"params", r.params},         {"instances", r.instances},
          {"consistent", r.consistent}, {"violations", violations}, {"notes", r.notes}};
}

}  // namespace hatlab
