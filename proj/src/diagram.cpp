#include "schubert/diagram.hpp"

namespace schubert {

DiagramRendering render(const PartitionShape& shape, const RenderOptions& options) {
    DiagramRendering out;

    for (int i = shape.r(); i >= 1; --i) {
        if (shape.part(i) == 0) continue;
        for (int b = 0; b < shape.part(i); ++b) out.ascii += "[ ]";
        out.ascii += "\n";
    }

    if (shape.box_count() > 0) {
        out.latex = "\\yng(";
        bool first = true;
        for (int i = shape.r(); i >= 1; --i) {
            if (shape.part(i) == 0) continue;
            if (!first) out.latex += ",";
            out.latex += std::to_string(shape.part(i));
            first = false;
        }
        out.latex += ")";
    }

    if (options.with_filling) {
        std::vector<std::vector<std::string>> grid(static_cast<std::size_t>(shape.r()));
        for (int i = 1; i <= shape.r(); ++i) {
            auto& row = grid[static_cast<std::size_t>(i - 1)];
            for (int b = 0; b < shape.part(i); ++b) {
                row.push_back("s" + std::to_string(i + b));
            }
        }
        out.filled = std::move(grid);
    }
    return out;
}

}  // namespace schubert
