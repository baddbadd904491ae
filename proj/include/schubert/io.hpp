#pragma once

#include <string>

#include <json.hpp>

#include "schubert/core.hpp"
#include "schubert/smoothness.hpp"
#include "schubert/survey.hpp"
#include "schubert/weyl.hpp"

// Text and machine-readable formats: comma-separated tuples on the command
// line, JSON records for analyze, CSV/JSON tables for survey.

namespace schubert {

// Parses "3,5,8,9" into a tuple of G(?, n); rejects anything that is not a
// strictly increasing list in [1,n].
ColumnTuple parse_tuple(const std::string& text, int n);

std::string format_tuple(const ColumnTuple& w);         // 3,5,8,9
std::string format_tuple_pretty(const ColumnTuple& w);  // (3,5,8,9)

// "s2 s1 s4 ..."; the empty word renders as "e".
std::string format_word(const ReducedWord& word);

nlohmann::json report_to_json(const SmoothnessReport& report);

// Inverse of report_to_json; round-trips every report field.
SmoothnessReport report_from_json(const nlohmann::json& j);

nlohmann::json survey_to_json(const GrassmannianContext& ctx, const std::vector<SurveyRow>& rows);

// Header row then one line per tuple; tuple-valued cells are quoted,
// component lists are ;-joined.
std::string survey_to_csv(const std::vector<SurveyRow>& rows);

}  // namespace schubert
