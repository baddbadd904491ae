#pragma once

#include <optional>
#include <vector>

#include "schubert/core.hpp"

// Semistability for the torus action: the minimal tuple whose Schubert
// variety carries semistable points, the componentwise dominance test, and a
// backtracking search for an explicit torus-invariant witness monomial.
// All operations require a coprime context.

namespace schubert {

// Certificate that X(w) carries a torus-invariant section of degree
// `degree`*n: a componentwise weakly increasing chain of degree*n tuples,
// all below w, in which every column index of [1,n] occurs exactly
// degree*r times.
struct SemistableWitness {
    std::vector<ColumnTuple> chain;
    int degree = 1;
};

// The unique minimal semistable tuple (a_1, ..., a_r), a_i = ceil(i*n/r),
// computed in exact integer arithmetic.
ColumnTuple minimal_semistable(const GrassmannianContext& ctx);

// True iff b_i >= a_i for all i, i.e. w dominates minimal_semistable(ctx).
bool is_semistable_nonempty(const ColumnTuple& w, const GrassmannianContext& ctx);

// Searches for a witness chain of length degree*n. Candidates are tried in
// lexicographic order, so the returned chain is deterministic; empty when no
// chain exists. Independent of the dominance test above by construction.
std::optional<SemistableWitness> semistable_witness(const ColumnTuple& w,
                                                    const GrassmannianContext& ctx,
                                                    int degree = 1);

}  // namespace schubert
