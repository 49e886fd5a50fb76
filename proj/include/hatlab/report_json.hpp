#pragma once

#include <json.hpp>

#include "hatlab/evaluator.hpp"
#include "hatlab/game.hpp"
#include "hatlab/parity.hpp"
#include "hatlab/search.hpp"
#include "hatlab/strategy.hpp"

namespace hatlab {

nlohmann::ordered_json profile_to_json(const ConditionProfile& p);
nlohmann::ordered_json guess_record_to_json(const GuessRecord& r);
nlohmann::ordered_json report_to_json(const EvaluationReport& r);
nlohmann::ordered_json certificate_to_json(const SearchCertificate& c);
SearchCertificate certificate_from_json(const Game& game, const nlohmann::json& j);
nlohmann::ordered_json parity_report_to_json(const ParityCheckReport& r);

}  // namespace hatlab
