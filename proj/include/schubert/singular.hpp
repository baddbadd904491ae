#pragma once

#include <set>
#include <vector>

#include "schubert/core.hpp"

// The singular locus of a Schubert variety, computed three independent ways:
// hook removal on the run encoding of the Young diagram, the direct row
// formula on the column tuple, and the parabolic-orbit description of the
// smooth locus. The three must agree for every tuple; disagreement is a bug.

namespace schubert {

// J'(w) and its complement J(w) inside [1, n-1]. The stabilizer of X(w) is
// the parabolic subgroup generated over the Borel by the reflections indexed
// by J(w).
struct StabilizerSet {
    std::vector<int> j_prime;
    std::vector<int> j;

    bool operator==(const StabilizerSet&) const = default;
};

struct SingularLocusReport {
    std::vector<ColumnTuple> components;
    // Row whose hook removal produced each component, aligned with components.
    std::vector<int> hook_rows;
};

// j is in J'(w) iff j = b_m for some m and b_{m+1} != j+1, with the sentinel
// b_{r+1} = n+1 covering m = r.
StabilizerSet stabilizer_descents(const ColumnTuple& w);

// Hook removal on the run encoding (p_1^{q_1}, ..., p_k^{q_k}): component i
// replaces runs i, i+1 by (p_i - 1)^{q_i + 1}, p_{i+1}^{q_{i+1}-1}. There are
// exactly k-1 components; none when k <= 1.
SingularLocusReport singular_components(const ColumnTuple& w);

// Same components from the column tuple directly: each row j >= 2 with
// b_j >= b_{j-1} + 2 and b_{j-1} > j - 1 yields the tuple that lowers the
// maximal consecutive run ending at b_{j-1} by one and inserts b_{j-1} at
// position j. Must agree with singular_components as a set.
SingularLocusReport singular_components_via_runs(const ColumnTuple& w);

// Torus-fixed points of the smooth locus: the orbit of w under the
// reflections indexed by J(w).
std::set<ColumnTuple> smooth_fixed_points_oracle(const ColumnTuple& w);

// Maximal elements of {v <= w} minus the smooth fixed points. Independent of
// the hook-removal routes; used to cross-check them.
std::set<ColumnTuple> singular_components_oracle(const ColumnTuple& w);

}  // namespace schubert
