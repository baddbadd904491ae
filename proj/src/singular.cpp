#include "schubert/singular.hpp"

#include <algorithm>

#include "schubert/weyl.hpp"

namespace schubert {

StabilizerSet stabilizer_descents(const ColumnTuple& w) {
    StabilizerSet out;
    const int r = w.r();
    for (int m = 1; m <= r; ++m) {
        const int j = w.entry(m);
        if (j > w.n() - 1) continue;
        const int next = m < r ? w.entry(m + 1) : w.n() + 1;  // sentinel b_{r+1}
        if (next != j + 1) out.j_prime.push_back(j);
    }
    for (int j = 1; j <= w.n() - 1; ++j) {
        if (!std::binary_search(out.j_prime.begin(), out.j_prime.end(), j)) {
            out.j.push_back(j);
        }
    }
    return out;
}

SingularLocusReport singular_components(const ColumnTuple& w) {
    const PartitionShape shape = to_partition(w);
    const RunEncoding enc = run_length(shape);
    const int k = enc.distinct_parts();
    const int r = w.r();

    SingularLocusReport report;
    if (k <= 1) return report;

    int zero_rows = r;
    for (const auto& run : enc.runs) zero_rows -= run.multiplicity;

    int rows_below = 0;  // rows occupied by runs 1..i
    for (int i = 1; i <= k - 1; ++i) {
        std::vector<int> parts;
        parts.reserve(static_cast<std::size_t>(r));
        for (int h = 1; h <= k; ++h) {
            const auto& run = enc.runs[static_cast<std::size_t>(h - 1)];
            int part = run.part;
            int mult = run.multiplicity;
            if (h == i) {
                part -= 1;
                mult += 1;
            } else if (h == i + 1) {
                mult -= 1;
            }
            if (part == 0) continue;
            parts.insert(parts.end(), static_cast<std::size_t>(mult), part);
        }
        parts.insert(parts.begin(), static_cast<std::size_t>(r) - parts.size(), 0);
        report.components.push_back(from_partition(PartitionShape(std::move(parts), w.n())));
        rows_below += enc.runs[static_cast<std::size_t>(i - 1)].multiplicity;
        report.hook_rows.push_back(zero_rows + rows_below + 1);  // first row of run i+1
    }
    return report;
}

SingularLocusReport singular_components_via_runs(const ColumnTuple& w) {
    const int r = w.r();
    SingularLocusReport report;
    for (int j = 2; j <= r; ++j) {
        if (w.entry(j) < w.entry(j - 1) + 2) continue;
        if (w.entry(j - 1) <= j - 1) continue;  // empty row below: no hook
        // t starts the maximal consecutive run b_t, b_t + 1, ..., b_{j-1}
        int t = j - 1;
        while (t > 1 && w.entry(t) == w.entry(t - 1) + 1) --t;

        std::vector<int> entries = w.entries();
        for (int p = t; p <= j - 1; ++p) entries[static_cast<std::size_t>(p - 1)] -= 1;
        entries[static_cast<std::size_t>(j - 1)] = w.entry(j - 1);
        report.components.emplace_back(std::move(entries), w.n());
        report.hook_rows.push_back(j);
    }
    return report;
}

std::set<ColumnTuple> smooth_fixed_points_oracle(const ColumnTuple& w) {
    return parabolic_orbit(stabilizer_descents(w).j, w);
}

std::set<ColumnTuple> singular_components_oracle(const ColumnTuple& w) {
    const std::set<ColumnTuple> smooth = smooth_fixed_points_oracle(w);
    const GrassmannianContext ctx = make_context(w.r(), w.n());

    std::vector<ColumnTuple> singular;
    for (const ColumnTuple& v : enumerate_interval(identity_tuple(ctx), w)) {
        if (!smooth.contains(v)) singular.push_back(v);
    }

    std::set<ColumnTuple> maximal;
    for (const ColumnTuple& v : singular) {
        const bool dominated = std::any_of(singular.begin(), singular.end(), [&](const ColumnTuple& u) {
            return u != v && bruhat_leq(v, u);
        });
        if (!dominated) maximal.insert(v);
    }
    return maximal;
}

}  // namespace schubert
