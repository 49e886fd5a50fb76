#include "hatlab/hunt.hpp"

#include <set>

#include "hatlab/digraph.hpp"
#include "hatlab/error.hpp"
#include "hatlab/game_json.hpp"
#include "hatlab/report_json.hpp"

namespace hatlab {

namespace {

// Surjective maps {0..n-1} -> {1..count} in lexicographic order.
std::vector<std::vector<Inning>> inning_functions(std::size_t n, Inning count, std::optional<std::size_t> first) {
  std::vector<std::vector<Inning>> out;
  std::vector<Inning> current(n, 1);
  while (true) {
    std::vector<bool> used(count + 1, false);
    std::size_t first_size = 0;
    for (Inning b : current) {
      used[b] = true;
      if (b == 1) ++first_size;
    }
    bool surjective = true;
    for (Inning b = 1; b <= count; ++b) surjective = surjective && used[b];
    if (surjective && (!first || *first == first_size)) out.push_back(current);
    std::size_t d = n;
    while (d > 0 && current[d - 1] == count) current[--d] = 1;
    if (d == 0) break;
    ++current[d - 1];
  }
  return out;
}

}  // namespace

std::vector<Game> enumerate_family(const FamilySpec& family) {
  std::vector<Game> out;
  for (std::size_t n : family.prisoner_counts) {
    const auto graphs = enumerate_digraphs(n);
    for (Inning count : family.inning_counts) {
      if (count == 0 || count > n) continue;
      std::set<CanonicalKey> seen;
      for (const auto& innings : inning_functions(n, count, family.first_inning_size)) {
        for (const VisibilityGraph& v : graphs) {
          if (family.up_to_isomorphism && !seen.insert(canonical_key(innings, v)).second) continue;
          out.push_back(Game::make(n, family.colors, v, InningFunction::list(innings)));
        }
      }
    }
  }
  return out;
}

std::vector<std::string> theorem_flags(const Game& game, const Goal& goal, SearchCertificate::Verdict verdict) {
  using Verdict = SearchCertificate::Verdict;
  std::vector<std::string> flags;
  if (verdict == Verdict::kUnknown || !game.is_finite() || !game.colors().is_finite()) return flags;
  const bool sat = verdict == Verdict::kSat;
  const std::size_t n = game.size();
  const std::size_t k = game.colors().modulus();
  const std::size_t needed = goal.kind == Goal::Kind::kCorrectAtLeast
                                 ? goal.n
                                 : (goal.n >= n ? 0 : n - goal.n);
  if (game.is_simultaneous()) {
    if (sat && needed * k > n) flags.push_back("counting");
    if (goal == Goal::correct_at_least(1)) {
      if (k == 2 && sat != has_directed_cycle(game.visibility())) flags.push_back("cyclic-two-colors");
      if (n == k && sat != game.has_complete_visibility()) flags.push_back("complete-graph");
    }
    return flags;
  }
  if (goal.kind != Goal::Kind::kErrorsAtMost || goal.n < 1) return flags;
  const ConditionProfile p = condition_profile(game);
  if (p.s1 && p.s2 && !sat) flags.push_back("hint-sum");
  if (k == 2 && p.s4 && p.s5 && p.s6 && !sat) flags.push_back("dual-hint");
  if (goal.n == 1 && k >= 3 && p.s3 && sat && !(p.s1 && p.s2)) flags.push_back("after-ffva");
  if (goal.n == 1 && k == 2 && derive_structure(game).first_speakers.size() == 2 && sat &&
      !(p.s4 && p.s5 && p.s6)) {
    flags.push_back("q1:sat-without-s4s5s6");
  }
  return flags;
}

std::vector<Finding> hunt(const FamilySpec& family, const Goal& goal, const SearchOptions& options) {
  std::vector<Finding> out;
  for (Game& game : enumerate_family(family)) {
    const SearchCertificate cert = decide_ps(game, goal, options);
    Finding f{std::move(game), std::nullopt, cert.verdict, cert.nodes_explored, {}};
    if (!f.game.is_simultaneous()) f.profile = condition_profile(f.game);
    f.flags = theorem_flags(f.game, goal, cert.verdict);
    out.push_back(std::move(f));
  }
  return out;
}

nlohmann::ordered_json finding_to_json(const Finding& f, const Goal& goal, std::uint64_t budget) {
  nlohmann::ordered_json j;
  j["game"] = game_to_json(f.game);
  j["profile"] = f.profile ? profile_to_json(*f.profile) : nlohmann::ordered_json(nullptr);
  j["verdict"] = to_string(f.verdict);
  j["nodes"] = f.nodes;
  j["flags"] = f.flags;
  j["goal"] = goal.to_string();
  j["budget"] = budget;
  return j;
}

}  // namespace hatlab
