#include "hatlab/report_json.hpp"

#include <limits>

#include "hatlab/error.hpp"
#include "hatlab/game_json.hpp"

namespace hatlab {

namespace {

std::string bucket_key(std::size_t k) {
  return k == std::numeric_limits<std::size_t>::max() ? "infinite" : std::to_string(k);
}

}  // namespace

Json profile_to_json(const ConditionProfile& p) {
  return {{"S1", p.s1}, {"S2", p.s2}, {"S3", p.s3}, {"S4", p.s4}, {"S5", p.s5}, {"S6", p.s6}};
}

Json guess_record_to_json(const GuessRecord& r) {
  return {{"guesses", coloring_to_json(r.guesses)},
          {"match", prisoner_set_to_json(r.match)},
          {"errors", prisoner_set_to_json(r.errors)}};
}

Json report_to_json(const EvaluationReport& r) {
  Json j;
  if (r.mode == EvaluationReport::Mode::kExhaustive) {
    j["mode"] = "exhaustive";
  } else {
    j["mode"] = {{"sampled", r.coloring_count}, {"seed", r.seed}};
  }
  j["colorings"] = r.coloring_count;
  if (!r.keyed_by_errors()) {
    j["min_correct"] = r.min_correct;
    j["max_errors"] = r.max_errors;
    j["total_correct"] = r.total_correct;
  } else {
    j["max_errors"] = r.unbounded_errors ? Json("infinite") : Json(r.max_errors);
  }
  j["histogram_by"] = r.keyed_by_errors() ? "errors" : "correct";
  Json hist = Json::object();
  for (const auto& [k, v] : r.histogram) hist[bucket_key(k)] = v;
  j["histogram"] = hist;
  Json wit = Json::object();
  for (const auto& [k, f] : r.witnesses) wit[bucket_key(k)] = coloring_to_json(f);
  j["witnesses"] = wit;
  j["erring"] = prisoner_set_to_json(r.erring);
  return j;
}

Json certificate_to_json(const SearchCertificate& c) {
  Json j;
  j["verdict"] = to_string(c.verdict);
  j["nodes_explored"] = c.nodes_explored;
  j["budget"] = c.budget;
  Json tables = Json::array();
  for (const TableStrategy& t : c.tables) tables.push_back(table_to_json(t));
  j["tables"] = tables;
  return j;
}

SearchCertificate certificate_from_json(const Game& game, const nlohmann::json& j) {
  SearchCertificate c;
  const std::string verdict = j.at("verdict").get<std::string>();
  if (verdict == "SAT") {
    c.verdict = SearchCertificate::Verdict::kSat;
  } else if (verdict == "UNSAT") {
    c.verdict = SearchCertificate::Verdict::kUnsat;
  } else if (verdict == "Unknown") {
    c.verdict = SearchCertificate::Verdict::kUnknown;
  } else {
    fail(ErrorCode::kInvalidArgument, "unknown verdict \"" + verdict + "\"");
  }
  c.nodes_explored = j.value("nodes_explored", std::uint64_t{0});
  c.budget = j.value("budget", std::uint64_t{0});
  if (j.contains("tables")) {
    for (const auto& t : j.at("tables")) c.tables.push_back(table_from_json(game, t));
  }
  return c;
}

Json parity_report_to_json(const ParityCheckReport& r) {
  Json failures = Json::array();
  for (const ParityFailure& f : r.failures) {
    failures.push_back({{"f", coloring_to_json(f.f)},
                        {"x", f.x},
                        {"g1", color_to_json(f.g1)},
                        {"g2", color_to_json(f.g2)},
                        {"lhs", color_to_json(f.lhs)},
                        {"rhs", color_to_json(f.rhs)}});
  }
  return {{"trials", r.trials}, {"passed", r.passed}, {"failures", failures}};
}

}  // namespace hatlab
