#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "schubert/core.hpp"

// The smoothness verdict for the torus quotient of X(w): a component
// criterion (no singular component dominates the minimal semistable tuple)
// and a row criterion (every jump b_j >= b_{j-1} + 2 has a_j >= b_{j-1} + 1).
// The two are equivalent whenever X(w) has semistable points; analyze()
// checks both and treats disagreement as an integrity failure.

namespace schubert {

enum class Verdict {
    smooth,
    not_smooth,
    no_semistable_points,
};

std::string to_string(Verdict v);
std::optional<Verdict> verdict_from_string(std::string_view text);

struct ComponentCriterion {
    bool holds = true;
    // Singular components that dominate the minimal semistable tuple.
    std::vector<ColumnTuple> dominating_components;
};

struct RunCriterion {
    bool holds = true;
    // Rows j with b_j >= b_{j-1} + 2 but a_j <= b_{j-1}.
    std::vector<int> violating_rows;
};

ComponentCriterion criterion_components(const ColumnTuple& w, const GrassmannianContext& ctx);

// Scans j = 1..r with the convention b_0 = 0; rows with j = 1 or with
// b_{j-1} = j - 1 can never violate, so the wider scan is harmless.
RunCriterion criterion_runs(const ColumnTuple& w, const GrassmannianContext& ctx);

struct SmoothnessReport {
    ColumnTuple w;
    ColumnTuple minimal;
    bool semistable_nonempty = false;
    Verdict verdict = Verdict::no_semistable_points;
    std::vector<ColumnTuple> components;
    ComponentCriterion component_criterion;
    RunCriterion run_criterion;
};

// Evaluates semistability and both criteria. When semistable points exist the
// criteria must agree (throws integrity_error otherwise) and the verdict is
// smooth/not_smooth; without semistable points the quotient is empty and the
// verdict says so, with the criteria reported but not interpreted.
SmoothnessReport analyze(const ColumnTuple& w, const GrassmannianContext& ctx);

}  // namespace schubert
