#pragma once

// JSON projections shared by the HTTP service and the CLI. Offsets are
// character offsets; doubles are written with round-trip precision.

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "tossup/session.hpp"

namespace tossup {

using Json = nlohmann::json;

// {hash, text_length, spans: [{start, end, kind, payload}], guesses, buzz,
//  similar, difficulty, recommendations, distribution, errors}
Json report_to_json(const AnalysisReport& report);
AnalysisReport report_from_json(const Json& j);

Json snapshot_to_json(const EditSnapshot& snap);
std::string snapshots_to_jsonl(const std::vector<EditSnapshot>& snapshots);

Json evaluation_to_json(const BuzzEvaluation& ev);
Json difficulty_to_json(const DifficultyPrediction& d);
Json game_score_to_json(const GameScore& g);

// One line, no trailing newline.
std::string submission_to_json(const SubmissionRecord& record);

}  // namespace tossup
