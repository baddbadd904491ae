#pragma once

#include <optional>
#include <string>
#include <vector>

#include "schubert/core.hpp"

namespace schubert {

// Text renderings of a Young diagram. ASCII and LaTeX list rows top down
// (row r first); the filled grid keeps the bottom-to-top row indexing of
// PartitionShape, so filled[i] labels row i+1.
struct DiagramRendering {
    std::string ascii;
    std::string latex;
    std::optional<std::vector<std::vector<std::string>>> filled;
};

struct RenderOptions {
    bool with_filling = false;
};

// ASCII uses one "[ ]" cell per box; LaTeX emits \yng(...) over the nonzero
// rows; the filling labels row i with s_i, s_{i+1}, ... left to right.
DiagramRendering render(const PartitionShape& shape, const RenderOptions& options = {});

}  // namespace schubert
