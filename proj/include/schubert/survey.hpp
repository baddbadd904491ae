#pragma once

#include <vector>

#include "schubert/core.hpp"
#include "schubert/smoothness.hpp"

namespace schubert {

struct SurveyRow {
    ColumnTuple w;
    Verdict verdict;
    int component_count = 0;
    std::vector<ColumnTuple> components;
};

// One row per tuple dominating the minimal semistable tuple, in
// lexicographic order, each analyzed for quotient smoothness.
std::vector<SurveyRow> survey(const GrassmannianContext& ctx);

}  // namespace schubert
