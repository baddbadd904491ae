#include "schubert/smoothness.hpp"

#include "schubert/semistable.hpp"
#include "schubert/singular.hpp"

namespace schubert {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::smooth: return "smooth";
        case Verdict::not_smooth: return "not_smooth";
        case Verdict::no_semistable_points: return "no_semistable_points";
    }
    return "unknown";
}

std::optional<Verdict> verdict_from_string(std::string_view text) {
    if (text == "smooth") return Verdict::smooth;
    if (text == "not_smooth") return Verdict::not_smooth;
    if (text == "no_semistable_points") return Verdict::no_semistable_points;
    return std::nullopt;
}

ComponentCriterion criterion_components(const ColumnTuple& w, const GrassmannianContext& ctx) {
    const ColumnTuple minimal = minimal_semistable(ctx);
    ComponentCriterion out;
    for (const ColumnTuple& v : singular_components(w).components) {
        if (bruhat_leq(minimal, v)) out.dominating_components.push_back(v);
    }
    out.holds = out.dominating_components.empty();
    return out;
}

RunCriterion criterion_runs(const ColumnTuple& w, const GrassmannianContext& ctx) {
    const ColumnTuple minimal = minimal_semistable(ctx);
    RunCriterion out;
    for (int j = 1; j <= w.r(); ++j) {
        const int below = j > 1 ? w.entry(j - 1) : 0;  // b_0 = 0
        if (w.entry(j) >= below + 2 && minimal.entry(j) < below + 1) {
            out.violating_rows.push_back(j);
        }
    }
    out.holds = out.violating_rows.empty();
    return out;
}

SmoothnessReport analyze(const ColumnTuple& w, const GrassmannianContext& ctx) {
    const ColumnTuple minimal = minimal_semistable(ctx);
    const bool semistable = is_semistable_nonempty(w, ctx);
    ComponentCriterion by_components = criterion_components(w, ctx);
    RunCriterion by_runs = criterion_runs(w, ctx);

    if (semistable && by_components.holds != by_runs.holds) {
        throw integrity_error("smoothness criteria disagree on w with semistable points");
    }

    Verdict verdict = Verdict::no_semistable_points;
    if (semistable) {
        verdict = by_components.holds ? Verdict::smooth : Verdict::not_smooth;
    }
    return SmoothnessReport{
        w,
        minimal,
        semistable,
        verdict,
        singular_components(w).components,
        std::move(by_components),
        std::move(by_runs),
    };
}

}  // namespace schubert
