#include "schubert/survey.hpp"

#include "schubert/semistable.hpp"

namespace schubert {

std::vector<SurveyRow> survey(const GrassmannianContext& ctx) {
    const ColumnTuple minimal = minimal_semistable(ctx);
    std::vector<SurveyRow> rows;
    for (const ColumnTuple& w : enumerate_interval(minimal, top_tuple(ctx))) {
        SmoothnessReport report = analyze(w, ctx);
        rows.push_back(SurveyRow{
            w,
            report.verdict,
            static_cast<int>(report.components.size()),
            std::move(report.components),
        });
    }
    return rows;
}

}  // namespace schubert
