// hatlab: command-line front end for hat-guessing games.
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "hatlab/constructions.hpp"
#include "hatlab/error.hpp"
#include "hatlab/evaluator.hpp"
#include "hatlab/game_json.hpp"
#include "hatlab/hunt.hpp"
#include "hatlab/report_json.hpp"
#include "hatlab/search.hpp"
#include "hatlab/theorem_lab.hpp"

using namespace hatlab;

namespace {

constexpr int kOk = 0;
constexpr int kRefuted = 1;
constexpr int kUsage = 2;

// A computed document plus the exit status it implies.
struct Outcome {
  std::string text;
  int status = kOk;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::kInvalidArgument, "cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

nlohmann::json parse_json(const std::string& text, const std::string& what) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(ErrorCode::kInvalidArgument, what + " is not valid JSON: " + e.what());
  }
}

std::string doc(const Json& j) { return j.dump(2) + "\n"; }

std::vector<Prisoner> parse_cycle(const std::string& text) {
  std::vector<Prisoner> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoull(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      fail(ErrorCode::kInvalidArgument, "--cycle expects comma-separated prisoner ids, got \"" + text + "\"");
    }
  }
  return out;
}

// Tables come as a bare array, {"tables": [...]}, or a search output.
Json load_tables(const std::string& path) {
  const nlohmann::json j = parse_json(read_file(path), path);
  if (j.is_array()) return j;
  if (j.contains("tables")) return j.at("tables");
  if (j.contains("certificate")) return j.at("certificate").at("tables");
  fail(ErrorCode::kInvalidArgument, path + " holds no strategy tables");
}

Predictor predictor_of(const Game& game, const nlohmann::json& inv) {
  if (inv.contains("tables")) {
    std::vector<TableStrategy> tables;
    for (const auto& t : inv.at("tables")) tables.push_back(table_from_json(game, t));
    return table_predictor(game, tables);
  }
  return build_named_predictor(game, inv.at("predictor").get<std::string>(),
                               inv.value("cycle", std::vector<Prisoner>{}));
}

Json header(const std::string& command, const nlohmann::json& inv) {
  Json j;
  j["command"] = command;
  j["invocation"] = inv;
  return j;
}

Outcome run_validate(const nlohmann::json& inv) {
  const Game game = validate_game(inv.at("game"));
  Json out = header("validate", inv);
  out["valid"] = true;
  out["canonical"] = game_to_json(game);
  return {doc(out)};
}

Outcome run_conditions(const nlohmann::json& inv) {
  const Game game = validate_game(inv.at("game"));
  const GameStructure st = derive_structure(game);
  Json out = header("conditions", inv);
  Json sets = Json::array();
  for (const PrisonerSet& s : st.inning_sets) sets.push_back(prisoner_set_to_json(s));
  out["innings"] = game.num_innings();
  out["inning_sets"] = sets;
  out["profile"] = game.is_simultaneous() ? Json(nullptr) : profile_to_json(condition_profile(game));
  return {doc(out)};
}

Outcome run_run(const nlohmann::json& inv) {
  const Game game = validate_game(inv.at("game"));
  const Predictor p = predictor_of(game, inv);
  const Coloring f = parse_coloring(game, inv.at("coloring").get<std::string>());
  Json out = header("run", inv);
  out["result"] = guess_record_to_json(run_predictor(game, p, f));
  return {doc(out)};
}

Outcome run_evaluate(const nlohmann::json& inv, unsigned threads) {
  const Game game = validate_game(inv.at("game"));
  const Predictor p = predictor_of(game, inv);
  EvaluationReport report;
  if (inv.contains("sample")) {
    SampleOptions o;
    o.threads = threads;
    report = evaluate_sampled(game, p, inv.at("sample").get<std::uint64_t>(), inv.at("seed").get<std::uint64_t>(),
                              inv.at("range").get<std::uint64_t>(), o);
  } else {
    ExhaustiveOptions o;
    o.threads = threads;
    report = evaluate_exhaustive(game, p, o);
  }
  Json out = header("evaluate", inv);
  out["report"] = report_to_json(report);
  int status = kOk;
  if (inv.contains("goal")) {
    const Goal goal = Goal::parse(inv.at("goal").get<std::string>());
    std::string verdict;
    try {
      const bool member = ps_membership(report, goal);
      verdict = member ? "member" : "refuted";
      if (!member) status = kRefuted;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kSampledReportNotConclusive) throw;
      verdict = "not refuted";
    }
    out["membership"] = verdict;
  }
  return {doc(out), status};
}

SearchOptions search_options_of(const nlohmann::json& inv) {
  SearchOptions o;
  o.budget = inv.at("budget").get<std::uint64_t>();
  o.symmetry = inv.at("symmetry").get<bool>();
  o.capacity_bound = inv.value("capacity_bound", true);
  return o;
}

Outcome run_search(const nlohmann::json& inv) {
  const Game game = validate_game(inv.at("game"));
  const Goal goal = Goal::parse(inv.at("goal").get<std::string>());
  const SearchCertificate cert = decide_ps(game, goal, search_options_of(inv));
  Json out = header("search", inv);
  out["certificate"] = certificate_to_json(cert);
  return {doc(out), cert.verdict == SearchCertificate::Verdict::kSat ? kOk : kRefuted};
}

Outcome run_theorem(const nlohmann::json& inv) {
  const TheoremReport r = check_theorem(inv.at("name").get<std::string>(), inv.at("params"));
  Json out = header("theorem", inv);
  out["report"] = theorem_report_to_json(r);
  std::cerr << "runtime: " << r.runtime_seconds << " s\n";
  return {doc(out), r.violations.empty() ? kOk : kRefuted};
}

Outcome run_hunt(const nlohmann::json& inv) {
  FamilySpec family;
  family.prisoner_counts = inv.at("prisoners").get<std::vector<std::size_t>>();
  family.colors = ColorSpace::modular(inv.at("colors").get<std::uint32_t>());
  family.inning_counts = inv.at("innings").get<std::vector<Inning>>();
  if (!inv.at("first_size").is_null()) family.first_inning_size = inv.at("first_size").get<std::size_t>();
  family.up_to_isomorphism = inv.at("iso").get<bool>();
  const Goal goal = Goal::parse(inv.at("goal").get<std::string>());
  const SearchOptions options = search_options_of(inv);
  std::string text = header("hunt", inv).dump() + "\n";
  int status = kOk;
  for (const Finding& f : hunt(family, goal, options)) {
    text += finding_to_json(f, goal, options.budget).dump() + "\n";
    for (const std::string& flag : f.flags) {
      if (flag.rfind("q1:", 0) != 0) status = kRefuted;
    }
  }
  return {text, status};
}

Outcome dispatch(const std::string& command, const nlohmann::json& inv, unsigned threads) {
  if (command == "validate") return run_validate(inv);
  if (command == "conditions") return run_conditions(inv);
  if (command == "run") return run_run(inv);
  if (command == "evaluate") return run_evaluate(inv, threads);
  if (command == "search") return run_search(inv);
  if (command == "theorem") return run_theorem(inv);
  if (command == "hunt") return run_hunt(inv);
  fail(ErrorCode::kInvalidArgument, "unknown command \"" + command + "\"");
}

// Recomputes a saved output from its embedded invocation.
int replay(const std::string& command, const std::string& path, unsigned threads) {
  const std::string saved = read_file(path);
  std::string first_line = saved.substr(0, saved.find('\n'));
  const nlohmann::json j = parse_json(command == "hunt" ? first_line : saved, path);
  if (!j.contains("command") || !j.contains("invocation") || j.at("command") != command) {
    fail(ErrorCode::kInvalidArgument, path + " is not " + command + " output");
  }
  const Outcome again = dispatch(command, j.at("invocation"), threads);
  const bool same = again.text == saved;
  std::cout << Json{{"replay", path}, {"identical", same}}.dump(2) << "\n";
  return same ? kOk : kRefuted;
}

nlohmann::json load_game(const std::string& path) {
  const nlohmann::json raw = parse_json(read_file(path), path);
  validate_game(raw);
  return raw;
}

nlohmann::json param_value(const std::string& text) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error&) {
    return text;
  }
}

std::uint64_t budget_of(double budget) {
  if (!(budget >= 1) || budget > 1e18) fail(ErrorCode::kInvalidArgument, "--budget must lie in [1, 1e18]");
  return static_cast<std::uint64_t>(budget);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hat-guessing game laboratory"};
  app.require_subcommand(1);
  unsigned threads = 1;
  app.add_option("--threads", threads, "Worker threads for evaluation")->check(CLI::Range(1u, 256u));

  std::string game_path, replay_path, coloring, predictor, tables_path, cycle, goal = "correct>=1";
  std::uint64_t sample = 0, seed = 0, range = 1000;
  double budget = 1e7;
  bool symmetry = false;
  bool no_capacity = false;

  auto add_game = [&](CLI::App* sub) {
    sub->add_option("game", game_path, "Game spec JSON file");
    sub->add_option("--replay", replay_path, "Recompute a saved output and compare");
  };
  auto add_predictor = [&](CLI::App* sub) {
    auto* named = sub->add_option("--predictor", predictor, "mod-sum, cycle-parity, hint-sum, dual-hint, bijection-hint, parity-hint, fep-zero");
    auto* file = sub->add_option("--tables", tables_path, "Strategy tables JSON file");
    named->excludes(file);
    sub->add_option("--cycle", cycle, "Cycle for cycle-parity, e.g. 0,1,2");
  };

  CLI::App* validate = app.add_subcommand("validate", "Check a game spec");
  add_game(validate);
  CLI::App* conditions = app.add_subcommand("conditions", "Inning sets and S-conditions");
  add_game(conditions);
  CLI::App* run = app.add_subcommand("run", "Play one coloring");
  add_game(run);
  add_predictor(run);
  run->add_option("--coloring", coloring, "Hats as 1,0,1 or support pairs 2=5,7=1");
  CLI::App* evaluate = app.add_subcommand("evaluate", "Evaluate a predictor on all or sampled colorings");
  add_game(evaluate);
  add_predictor(evaluate);
  auto* sample_opt = evaluate->add_option("--sample", sample, "Number of sampled colorings")->check(CLI::PositiveNumber);
  auto* seed_opt = evaluate->add_option("--seed", seed, "Sampling seed");
  evaluate->add_option("--range", range, "Sampled colors lie in [0, range)")->check(CLI::PositiveNumber);
  auto* eval_goal = evaluate->add_option("--goal", goal, "correct>=N or errors<=N");
  CLI::App* search = app.add_subcommand("search", "Decide whether a goal is achievable");
  add_game(search);
  search->add_option("--goal", goal, "correct>=N or errors<=N");
  search->add_option("--budget", budget, "Node budget (accepts 1e6)");
  search->add_flag("--symmetry", symmetry, "Fix the first branched entry to 0");
  search->add_flag("--no-capacity-bound", no_capacity, "Disable the counting prune");

  std::string theorem_name;
  std::vector<std::string> params;
  CLI::App* theorem = app.add_subcommand("theorem", "Run a named theorem check");
  theorem->add_option("name", theorem_name, "f2vcyclic, ffvcomplete, average, useful-props, after-ffva, after-fiva, first-group, robust-parity");
  theorem->add_option("--param", params, "key=value (value parsed as JSON when possible)");
  auto* theorem_seed = theorem->add_option("--seed", seed, "Seed for randomized checks");
  theorem->add_option("--replay", replay_path, "Recompute a saved output and compare");

  std::vector<std::size_t> hunt_prisoners{3};
  std::vector<Inning> hunt_innings{2};
  std::uint32_t hunt_colors = 2;
  std::size_t first_size = 2;
  bool any_first = false, iso = false;
  CLI::App* hunt_cmd = app.add_subcommand("hunt", "Search every game of a family");
  hunt_cmd->add_option("--prisoners", hunt_prisoners, "Prisoner counts")->delimiter(',');
  hunt_cmd->add_option("--colors", hunt_colors, "Number of colors")->check(CLI::Range(2u, 64u));
  hunt_cmd->add_option("--innings-count", hunt_innings, "Inning counts")->delimiter(',');
  auto* first_opt = hunt_cmd->add_option("--first-size", first_size, "Required |A_1| (default 2)");
  hunt_cmd->add_flag("--any-first-size", any_first, "Drop the |A_1| constraint")->excludes(first_opt);
  hunt_cmd->add_flag("--iso", iso, "Keep one game per isomorphism class");
  hunt_cmd->add_option("--goal", goal, "correct>=N or errors<=N");
  hunt_cmd->add_option("--budget", budget, "Node budget per game");
  hunt_cmd->add_option("--replay", replay_path, "Recompute a saved output and compare");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  CLI::App* sub = app.get_subcommands().front();
  const std::string command = sub->get_name();
  const auto start = std::chrono::steady_clock::now();
  try {
    int status;
    if (!replay_path.empty()) {
      status = replay(command, replay_path, threads);
    } else {
      nlohmann::json inv = nlohmann::json::object();
      if (command == "theorem") {
        if (theorem_name.empty()) fail(ErrorCode::kInvalidArgument, "theorem needs a NAME");
        inv["name"] = theorem_name;
        nlohmann::json p = nlohmann::json::object();
        for (const std::string& kv : params) {
          const auto eq = kv.find('=');
          if (eq == std::string::npos || eq == 0) fail(ErrorCode::kInvalidArgument, "--param expects key=value, got \"" + kv + "\"");
          p[kv.substr(0, eq)] = param_value(kv.substr(eq + 1));
        }
        const bool randomized = theorem_name == "average" || theorem_name == "after-fiva" || theorem_name == "robust-parity";
        if (randomized && !*theorem_seed) fail(ErrorCode::kInvalidArgument, "theorem " + theorem_name + " needs --seed");
        if (*theorem_seed) p["seed"] = seed;
        inv["params"] = p;
      } else if (command == "hunt") {
        inv["prisoners"] = hunt_prisoners;
        inv["colors"] = hunt_colors;
        inv["innings"] = hunt_innings;
        inv["first_size"] = any_first ? nlohmann::json(nullptr) : nlohmann::json(first_size);
        inv["iso"] = iso;
        inv["goal"] = Goal::parse(goal).to_string();
        inv["budget"] = budget_of(budget);
        inv["symmetry"] = false;
        inv["capacity_bound"] = true;
      } else {
        if (game_path.empty()) fail(ErrorCode::kInvalidArgument, command + " needs a GAME file");
        inv["game"] = load_game(game_path);
        if (command == "run" || command == "evaluate") {
          if (!tables_path.empty()) {
            inv["tables"] = load_tables(tables_path);
          } else if (!predictor.empty()) {
            inv["predictor"] = predictor;
            if (!cycle.empty()) inv["cycle"] = parse_cycle(cycle);
          } else {
            fail(ErrorCode::kInvalidArgument, command + " needs --predictor or --tables");
          }
        }
        if (command == "run") {
          if (coloring.empty()) fail(ErrorCode::kInvalidArgument, "run needs --coloring");
          inv["coloring"] = coloring;
        }
        if (command == "evaluate") {
          if (*sample_opt) {
            if (!*seed_opt) fail(ErrorCode::kInvalidArgument, "--sample needs an explicit --seed");
            inv["sample"] = sample;
            inv["seed"] = seed;
            inv["range"] = range;
          }
          if (*eval_goal) inv["goal"] = Goal::parse(goal).to_string();
        }
        if (command == "search") {
          inv["goal"] = Goal::parse(goal).to_string();
          inv["budget"] = budget_of(budget);
          inv["symmetry"] = symmetry;
          inv["capacity_bound"] = !no_capacity;
        }
      }
      const Outcome out = dispatch(command, inv, threads);
      std::cout << out.text;
      status = out.status;
    }
    std::cerr << "elapsed: " << std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() << " s\n";
    return status;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::kBudgetExceeded ? kRefuted : kUsage;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: malformed input: " << e.what() << "\n";
    return kUsage;
  }
}
