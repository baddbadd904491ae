#include "schubert/weyl.hpp"

#include <algorithm>
#include <deque>
#include <string>
#include <utility>

namespace schubert {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (int v : images_) {
        if (v < 1 || v > static_cast<int>(images_.size()) ||
            seen[static_cast<std::size_t>(v - 1)]) {
            throw std::invalid_argument("one-line notation is not a bijection of [1,n]");
        }
        seen[static_cast<std::size_t>(v - 1)] = true;
    }
}

ReducedWord canonical_reduced_word(const ColumnTuple& w) {
    ReducedWord word;
    for (int i = 1; i <= w.r(); ++i) {
        for (int j = w.entry(i) - 1; j >= i; --j) {
            word.letters.push_back(j);
        }
    }
    return word;
}

Permutation word_to_permutation(const ReducedWord& word, int n) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    std::vector<int> images(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) images[static_cast<std::size_t>(i)] = i + 1;
    for (int j : word.letters) {
        if (j < 1 || j >= n) {
            throw std::invalid_argument("letter s_" + std::to_string(j) +
                                        " out of range for n=" + std::to_string(n));
        }
        std::swap(images[static_cast<std::size_t>(j - 1)], images[static_cast<std::size_t>(j)]);
    }
    return Permutation(std::move(images));
}

Permutation tuple_to_min_coset_perm(const ColumnTuple& w) {
    std::vector<int> images = w.entries();
    images.reserve(static_cast<std::size_t>(w.n()));
    for (int v = 1; v <= w.n(); ++v) {
        if (!w.contains(v)) images.push_back(v);
    }
    return Permutation(std::move(images));
}

ColumnTuple reflect_subset(int j, const ColumnTuple& w) {
    if (j < 1 || j >= w.n()) {
        throw std::invalid_argument("reflection index s_" + std::to_string(j) +
                                    " out of range for n=" + std::to_string(w.n()));
    }
    const bool has_j = w.contains(j);
    const bool has_next = w.contains(j + 1);
    if (has_j == has_next) return w;

    std::vector<int> entries = w.entries();
    for (int& b : entries) {
        if (b == j) {
            b = j + 1;
        } else if (b == j + 1) {
            b = j;
        }
    }
    std::sort(entries.begin(), entries.end());
    return ColumnTuple(std::move(entries), w.n());
}

std::set<ColumnTuple> parabolic_orbit(const std::vector<int>& generators, const ColumnTuple& w) {
    std::set<ColumnTuple> orbit{w};
    std::deque<ColumnTuple> frontier{w};
    while (!frontier.empty()) {
        ColumnTuple u = std::move(frontier.front());
        frontier.pop_front();
        for (int j : generators) {
            ColumnTuple v = reflect_subset(j, u);
            if (orbit.insert(v).second) frontier.push_back(std::move(v));
        }
    }
    return orbit;
}

}  // namespace schubert
