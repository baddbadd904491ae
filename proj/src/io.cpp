#include "schubert/io.hpp"

#include <cctype>
#include <sstream>

namespace schubert {

namespace {

nlohmann::json tuple_to_json(const ColumnTuple& w) { return nlohmann::json(w.entries()); }

ColumnTuple tuple_from_json(const nlohmann::json& j, int n) {
    return ColumnTuple(j.get<std::vector<int>>(), n);
}

nlohmann::json tuples_to_json(const std::vector<ColumnTuple>& tuples) {
    nlohmann::json arr = nlohmann::json::array();
    for (const ColumnTuple& v : tuples) arr.push_back(tuple_to_json(v));
    return arr;
}

std::vector<ColumnTuple> tuples_from_json(const nlohmann::json& j, int n) {
    std::vector<ColumnTuple> out;
    for (const auto& item : j) out.push_back(tuple_from_json(item, n));
    return out;
}

}  // namespace

ColumnTuple parse_tuple(const std::string& text, int n) {
    std::vector<int> entries;
    std::stringstream stream(text);
    std::string item;
    while (std::getline(stream, item, ',')) {
        std::size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(item, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("cannot parse tuple entry '" + item + "'");
        }
        while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) ++used;
        if (used != item.size()) {
            throw std::invalid_argument("cannot parse tuple entry '" + item + "'");
        }
        entries.push_back(value);
    }
    if (entries.empty()) throw std::invalid_argument("empty tuple '" + text + "'");
    return ColumnTuple(std::move(entries), n);
}

std::string format_tuple(const ColumnTuple& w) {
    std::string s;
    for (int i = 1; i <= w.r(); ++i) {
        if (i > 1) s += ",";
        s += std::to_string(w.entry(i));
    }
    return s;
}

std::string format_tuple_pretty(const ColumnTuple& w) { return "(" + format_tuple(w) + ")"; }

std::string format_word(const ReducedWord& word) {
    if (word.empty()) return "e";
    std::string s;
    for (int j : word.letters) {
        if (!s.empty()) s += " ";
        s += "s" + std::to_string(j);
    }
    return s;
}

nlohmann::json report_to_json(const SmoothnessReport& report) {
    return nlohmann::json{
        {"r", report.w.r()},
        {"n", report.w.n()},
        {"w", tuple_to_json(report.w)},
        {"verdict", to_string(report.verdict)},
        {"minimal", tuple_to_json(report.minimal)},
        {"components", tuples_to_json(report.components)},
        {"criterion_components", report.component_criterion.holds},
        {"criterion_runs", report.run_criterion.holds},
        {"witnesses",
         {{"components", tuples_to_json(report.component_criterion.dominating_components)},
          {"rows", report.run_criterion.violating_rows}}},
    };
}

SmoothnessReport report_from_json(const nlohmann::json& j) {
    const int n = j.at("n").get<int>();
    const auto verdict = verdict_from_string(j.at("verdict").get<std::string>());
    if (!verdict) {
        throw std::invalid_argument("unknown verdict '" + j.at("verdict").get<std::string>() + "'");
    }
    ComponentCriterion by_components;
    by_components.dominating_components = tuples_from_json(j.at("witnesses").at("components"), n);
    by_components.holds = j.at("criterion_components").get<bool>();
    RunCriterion by_runs;
    by_runs.violating_rows = j.at("witnesses").at("rows").get<std::vector<int>>();
    by_runs.holds = j.at("criterion_runs").get<bool>();
    return SmoothnessReport{
        tuple_from_json(j.at("w"), n),
        tuple_from_json(j.at("minimal"), n),
        *verdict != Verdict::no_semistable_points,
        *verdict,
        tuples_from_json(j.at("components"), n),
        std::move(by_components),
        std::move(by_runs),
    };
}

nlohmann::json survey_to_json(const GrassmannianContext& ctx, const std::vector<SurveyRow>& rows) {
    nlohmann::json arr = nlohmann::json::array();
    for (const SurveyRow& row : rows) {
        arr.push_back(nlohmann::json{
            {"w", tuple_to_json(row.w)},
            {"verdict", to_string(row.verdict)},
            {"component_count", row.component_count},
            {"components", tuples_to_json(row.components)},
        });
    }
    return nlohmann::json{{"r", ctx.r}, {"n", ctx.n}, {"rows", arr}};
}

std::string survey_to_csv(const std::vector<SurveyRow>& rows) {
    std::string csv = "w,verdict,component_count,components\n";
    for (const SurveyRow& row : rows) {
        csv += "\"" + format_tuple(row.w) + "\"," + to_string(row.verdict) + "," +
               std::to_string(row.component_count) + ",\"";
        for (std::size_t i = 0; i < row.components.size(); ++i) {
            if (i > 0) csv += ";";
            csv += format_tuple(row.components[i]);
        }
        csv += "\"\n";
    }
    return csv;
}

}  // namespace schubert
