#pragma once

#include <set>
#include <vector>

#include "schubert/core.hpp"

// Reduced expressions for minimal coset representatives, one-line
// permutations, and the simple-reflection action on column tuples that
// drives parabolic-orbit computations.

namespace schubert {

// Word in the simple reflections; letter j stands for s_j, 1 <= j <= n-1.
struct ReducedWord {
    std::vector<int> letters;

    int size() const { return static_cast<int>(letters.size()); }
    bool empty() const { return letters.empty(); }
    bool operator==(const ReducedWord&) const = default;
};

// One-line notation (w(1), ..., w(n)); must be a bijection of [1,n].
class Permutation {
public:
    explicit Permutation(std::vector<int> images);

    int n() const { return static_cast<int>(images_.size()); }
    const std::vector<int>& images() const { return images_; }
    int image(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }

    bool operator==(const Permutation&) const = default;

private:
    std::vector<int> images_;
};

// The block factorization (s_{b_1-1} ... s_1)(s_{b_2-1} ... s_2) ... with
// block i skipped when b_i - 1 < i. Its length is always sum(b_i - i).
ReducedWord canonical_reduced_word(const ColumnTuple& w);

// Left-to-right product of adjacent transpositions applied to the identity:
// each letter j swaps positions j, j+1 of the one-line notation.
Permutation word_to_permutation(const ReducedWord& word, int n);

// Minimal coset representative: first r images are the tuple entries in
// increasing order, the last n-r images the complement in increasing order.
Permutation tuple_to_min_coset_perm(const ColumnTuple& w);

// Induced action of left multiplication by s_j on the column set: when
// exactly one of j, j+1 belongs to the set the membership swaps, otherwise
// the tuple is unchanged.
ColumnTuple reflect_subset(int j, const ColumnTuple& w);

// Closure of {w} under reflect_subset(j, .) for all j in the generator set.
std::set<ColumnTuple> parabolic_orbit(const std::vector<int>& generators, const ColumnTuple& w);

}  // namespace schubert
