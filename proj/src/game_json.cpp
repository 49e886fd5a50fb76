#include "hatlab/game_json.hpp"

#include <limits>
#include <set>
#include <sstream>

#include "hatlab/error.hpp"

namespace hatlab {
namespace {

using nlohmann::json;

void reject_unknown_keys(const json& obj, const std::set<std::string>& allowed, const std::string& where) {
  for (const auto& [key, value] : obj.items()) {
    if (!allowed.count(key)) fail(ErrorCode::kInvalidGameSpec, "unknown key \"" + key + "\" in " + where);
  }
}

const json& require_key(const json& obj, const std::string& key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) fail(ErrorCode::kInvalidGameSpec, "missing \"" + key + "\" in " + where);
  return *it;
}

std::size_t parse_index(const std::string& text) {
  std::size_t pos = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(text, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos == 0 || pos != text.size() || text[0] == '-') fail(ErrorCode::kUnknownPrisonerId, "\"" + text + "\"");
  return static_cast<std::size_t>(v);
}

class PrisonerResolver {
 public:
  PrisonerResolver(PrisonerCount count, const std::vector<std::string>& names) : count_(count), names_(names) {}

  Prisoner resolve(const json& j) const {
    if (j.is_number_integer()) {
      if (j.get<long long>() < 0) fail(ErrorCode::kUnknownPrisonerId, j.dump());
      return check(static_cast<Prisoner>(j.get<long long>()), j.dump());
    }
    if (j.is_string()) return resolve_key(j.get<std::string>());
    fail(ErrorCode::kUnknownPrisonerId, j.dump());
  }

  Prisoner resolve_key(const std::string& key) const {
    for (std::size_t i = 0; i < names_.size(); ++i) {
      if (names_[i] == key) return i;
    }
    return check(parse_index(key), "\"" + key + "\"");
  }

 private:
  Prisoner check(Prisoner p, const std::string& shown) const {
    if (count_ && p >= *count_) fail(ErrorCode::kUnknownPrisonerId, shown);
    return p;
  }

  PrisonerCount count_;
  const std::vector<std::string>& names_;
};

Inning parse_inning(const json& j) {
  if (!j.is_number_integer() || j.get<long long>() < 1) {
    fail(ErrorCode::kInvalidGameSpec, "inning indices are positive integers, got " + j.dump());
  }
  return static_cast<Inning>(j.get<long long>());
}

ColorSpace parse_colors(const json& j) {
  if (!j.is_object()) fail(ErrorCode::kInvalidGameSpec, "\"colors\" must be an object");
  const std::string kind = require_key(j, "kind", "colors").get<std::string>();
  if (kind == "int") {
    reject_unknown_keys(j, {"kind"}, "colors");
    return ColorSpace::integers();
  }
  if (kind == "mod") {
    reject_unknown_keys(j, {"kind", "n"}, "colors");
    const json& n = require_key(j, "n", "colors");
    if (!n.is_number_integer()) fail(ErrorCode::kInvalidGameSpec, "colors.n must be an integer");
    const long long v = n.get<long long>();
    if (v < 2) fail(ErrorCode::kTooFewColors, "mod(" + std::to_string(v) + ")");
    if (v > std::numeric_limits<std::uint32_t>::max()) fail(ErrorCode::kInvalidGameSpec, "colors.n too large");
    return ColorSpace::modular(static_cast<std::uint32_t>(v));
  }
  fail(ErrorCode::kInvalidGameSpec, "unknown color kind \"" + kind + "\"");
}

}  // namespace

Game validate_game(const json& raw) {
  if (!raw.is_object()) fail(ErrorCode::kInvalidGameSpec, "game spec must be a JSON object");
  reject_unknown_keys(raw, {"prisoners", "colors", "visibility", "innings"}, "game spec");

  PrisonerCount count;
  std::vector<std::string> names;
  const json& pj = require_key(raw, "prisoners", "game spec");
  if (pj.is_number_integer()) {
    const long long n = pj.get<long long>();
    if (n < 2) fail(ErrorCode::kTooFewPrisoners, std::to_string(n) + " prisoner(s)");
    count = static_cast<std::size_t>(n);
  } else if (pj.is_string() && pj.get<std::string>() == "omega") {
    count = kOmega;
  } else if (pj.is_array()) {
    std::set<std::string> seen;
    for (const auto& name : pj) {
      if (!name.is_string()) fail(ErrorCode::kInvalidGameSpec, "prisoner names must be strings");
      if (!seen.insert(name.get<std::string>()).second) {
        fail(ErrorCode::kInvalidGameSpec, "duplicate prisoner name \"" + name.get<std::string>() + "\"");
      }
      names.push_back(name.get<std::string>());
    }
    if (names.size() < 2) fail(ErrorCode::kTooFewPrisoners, std::to_string(names.size()) + " prisoner(s)");
    count = names.size();
  } else {
    fail(ErrorCode::kInvalidGameSpec, "\"prisoners\" must be an integer, \"omega\" or a list of names");
  }

  const ColorSpace colors = parse_colors(require_key(raw, "colors", "game spec"));
  const PrisonerResolver resolve(count, names);

  VisibilityGraph visibility;
  const json& vj = require_key(raw, "visibility", "game spec");
  if (count) {
    if (vj.is_string() && vj.get<std::string>() == "complete") {
      visibility = VisibilityGraph::complete(*count);
    } else if (vj.is_array()) {
      if (vj.size() != *count) {
        fail(ErrorCode::kInvalidGameSpec, "visibility lists " + std::to_string(vj.size()) + " prisoners, expected " +
                                              std::to_string(*count));
      }
      std::vector<std::vector<Prisoner>> seen(*count);
      for (Prisoner a = 0; a < *count; ++a) {
        if (!vj[a].is_array()) fail(ErrorCode::kInvalidGameSpec, "visibility entry " + std::to_string(a) + " must be a list");
        for (const auto& b : vj[a]) {
          const Prisoner target = resolve.resolve(b);
          if (target == a) fail(ErrorCode::kLoopInVisibility, std::to_string(a));
          seen[a].push_back(target);
        }
      }
      visibility = VisibilityGraph::lists(std::move(seen));
    } else {
      fail(ErrorCode::kInvalidGameSpec, "\"visibility\" must be \"complete\" or a list of lists");
    }
  } else {
    std::map<Prisoner, std::vector<Prisoner>> unseen;
    if (vj.is_object()) {
      reject_unknown_keys(vj, {"default", "exceptions"}, "visibility");
      const json& d = require_key(vj, "default", "visibility");
      if (!d.is_string() || d.get<std::string>() != "complete") {
        fail(ErrorCode::kInvalidGameSpec, "omega visibility default must be \"complete\"");
      }
      if (auto it = vj.find("exceptions"); it != vj.end()) {
        if (!it->is_object()) fail(ErrorCode::kInvalidGameSpec, "visibility exceptions must be an object");
        for (const auto& [key, list] : it->items()) {
          const Prisoner a = resolve.resolve_key(key);
          if (!list.is_array()) fail(ErrorCode::kInvalidGameSpec, "visibility exception " + key + " must be a list");
          for (const auto& b : list) unseen[a].push_back(resolve.resolve(b));
        }
      }
    } else if (!(vj.is_string() && vj.get<std::string>() == "complete")) {
      fail(ErrorCode::kInvalidGameSpec, "omega visibility must be \"complete\" or {\"default\": \"complete\", ...}");
    }
    visibility = VisibilityGraph::omega_complete(std::move(unseen));
  }

  InningFunction innings;
  const json& ij = require_key(raw, "innings", "game spec");
  if (count) {
    if (!ij.is_array() || ij.size() != *count) {
      fail(ErrorCode::kInvalidGameSpec, "\"innings\" must list one inning per prisoner");
    }
    std::vector<Inning> list;
    for (const auto& beta : ij) list.push_back(parse_inning(beta));
    innings = InningFunction::list(std::move(list));
  } else {
    if (!ij.is_object()) fail(ErrorCode::kInvalidGameSpec, "omega innings must be {\"default\": D, \"exceptions\": {...}}");
    reject_unknown_keys(ij, {"default", "exceptions"}, "innings");
    const Inning d = parse_inning(require_key(ij, "default", "innings"));
    std::map<Prisoner, Inning> exceptions;
    if (auto it = ij.find("exceptions"); it != ij.end()) {
      if (!it->is_object()) fail(ErrorCode::kInvalidGameSpec, "inning exceptions must be an object");
      for (const auto& [key, beta] : it->items()) exceptions[resolve.resolve_key(key)] = parse_inning(beta);
    }
    innings = InningFunction::omega(d, std::move(exceptions));
  }

  return Game::make(count, colors, std::move(visibility), std::move(innings), std::move(names));
}

Game validate_game_text(const std::string& text) {
  json raw;
  try {
    raw = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(ErrorCode::kInvalidGameSpec, std::string("malformed JSON: ") + e.what());
  }
  return validate_game(raw);
}

Json game_to_json(const Game& game) {
  Json j;
  if (!game.is_finite()) {
    j["prisoners"] = "omega";
  } else if (!game.names().empty()) {
    j["prisoners"] = game.names();
  } else {
    j["prisoners"] = game.size();
  }
  const ColorSpace& cs = game.colors();
  if (cs.is_finite()) {
    j["colors"] = Json{{"kind", "mod"}, {"n", cs.modulus()}};
  } else {
    j["colors"] = Json{{"kind", "int"}};
  }
  const VisibilityGraph& v = game.visibility();
  if (game.is_finite()) {
    if (game.has_complete_visibility()) {
      j["visibility"] = "complete";
    } else {
      Json lists = Json::array();
      for (const auto& s : v.seen_lists()) lists.push_back(s.listed());
      j["visibility"] = lists;
    }
    j["innings"] = game.innings().values();
  } else {
    if (v.unseen_exceptions().empty()) {
      j["visibility"] = "complete";
    } else {
      Json ex = Json::object();
      for (const auto& [a, unseen] : v.unseen_exceptions()) ex[std::to_string(a)] = unseen.listed();
      j["visibility"] = Json{{"default", "complete"}, {"exceptions", ex}};
    }
    Json ex = Json::object();
    for (const auto& [a, beta] : game.innings().exceptions()) ex[std::to_string(a)] = beta;
    j["innings"] = Json{{"default", game.innings().default_inning()}, {"exceptions", ex}};
  }
  return j;
}

Json color_to_json(const Color& c) {
  if (c >= std::numeric_limits<long long>::min() && c <= std::numeric_limits<long long>::max()) {
    return Json(static_cast<long long>(c));
  }
  return Json(c.str());
}

Color color_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return Color(j.get<long long>());
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    const bool digits = !s.empty() && s.find_first_not_of("0123456789", s[0] == '-' ? 1 : 0) == std::string::npos &&
                        s != "-";
    if (!digits) fail(ErrorCode::kInvalidArgument, "not an integer color: \"" + s + "\"");
    return Color(s);
  }
  fail(ErrorCode::kInvalidArgument, "not an integer color: " + j.dump());
}

Json coloring_to_json(const Coloring& f) {
  if (f.is_finite()) {
    Json arr = Json::array();
    for (const Color& c : f.values()) arr.push_back(color_to_json(c));
    return arr;
  }
  Json support = Json::object();
  for (const auto& [a, c] : f.exceptions()) support[std::to_string(a)] = color_to_json(c);
  return Json{{"base", color_to_json(f.base())}, {"support", support}};
}

Coloring coloring_from_json(const Game& game, const nlohmann::json& j) {
  Coloring f;
  if (j.is_array()) {
    std::vector<Color> values;
    for (const auto& c : j) values.push_back(color_from_json(c));
    f = Coloring::dense(std::move(values));
  } else if (j.is_object()) {
    const Color base = j.contains("base") ? color_from_json(j.at("base")) : Color(0);
    std::map<Prisoner, Color> support;
    if (j.contains("support")) {
      for (const auto& [key, c] : j.at("support").items()) support[parse_index(key)] = color_from_json(c);
    }
    if (game.is_finite()) {
      std::vector<Color> values(game.size(), base);
      for (const auto& [a, c] : support) {
        game.require_prisoner(a);
        values[a] = c;
      }
      f = Coloring::dense(std::move(values));
    } else {
      f = Coloring::sparse(std::move(support), base);
    }
  } else {
    fail(ErrorCode::kInvalidArgument, "coloring must be an array or {\"base\", \"support\"}");
  }
  require_coloring(game, f);
  return f;
}

Coloring parse_coloring(const Game& game, const std::string& text) {
  std::vector<std::string> items;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    if (!item.empty()) items.push_back(item);
  }
  const bool pairs = text.find('=') != std::string::npos;
  std::map<Prisoner, Color> assigned;
  for (std::size_t i = 0; i < items.size(); ++i) {
    Prisoner a = i;
    std::string value = items[i];
    if (pairs) {
      const auto eq = items[i].find('=');
      if (eq == std::string::npos) fail(ErrorCode::kInvalidArgument, "expected i=v, got \"" + items[i] + "\"");
      a = parse_index(items[i].substr(0, eq));
      value = items[i].substr(eq + 1);
    }
    game.require_prisoner(a);
    assigned[a] = color_from_json(Json(value));
  }
  Coloring f;
  if (game.is_finite()) {
    if (!pairs && items.size() != game.size()) {
      fail(ErrorCode::kInvalidArgument, "coloring lists " + std::to_string(items.size()) + " hats for " +
                                            std::to_string(game.size()) + " prisoners");
    }
    std::vector<Color> values(game.size(), Color(0));
    for (const auto& [a, c] : assigned) values[a] = c;
    f = Coloring::dense(std::move(values));
  } else {
    f = Coloring::sparse(std::move(assigned));
  }
  require_coloring(game, f);
  return f;
}

Json prisoner_set_to_json(const PrisonerSet& s) {
  if (s.is_finite()) return Json(s.listed());
  return Json{{"all_except", s.listed()}};
}

}  // namespace hatlab
